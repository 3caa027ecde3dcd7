#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndde/field.hpp"

namespace ndde {

/// Real roots of lambda = K0 * exp(-lambda * tau), via the two Lambert W
/// branches at argument K0 * tau. lambda1 always exists on the admissible
/// domain K0 * tau >= -1/e; lambda2 exists exactly when K0 * tau < 0.
struct CharacteristicRoots {
    double lambda1;
    std::optional<double> lambda2;
    double K0;
    double tau;
};

/// Throws DomainError for tau <= 0 and NumericError when K0 * tau < -1/e
/// (no real root).
CharacteristicRoots characteristic_roots(double K0, double tau);

/// Piecewise-polynomial solution of y' = K0 * y(t - tau) with constant
/// initial data y0 on [-tau, 0], assembled interval by interval: on each
/// [k*tau, (k+1)*tau] the polynomial is the antiderivative of K0 times the
/// previous one. Continuous by construction; degree grows with k.
double linear_dde_closed_form(double K0, double tau, double y0, double t);

/// The exponential solution y0 * exp(lambda1 * (t - t0)) through (t0, y0).
double special_solution_linear(double K0, double tau, double t0, double y0, double t);

/// Coefficient of the one-dimensional ODE z' = lambda1 * z whose solutions
/// are exactly the exponential special solutions; satisfies the fixed-point
/// identity K0 * exp(-lambda1 * tau) = lambda1.
double special_ode_field_linear(double K0, double tau);

/// Decay measurement of a constant-data solution toward its exponential
/// shadow: per-grid-point columns and the derived summary statistics.
struct AttractionReport {
    double C_u_estimate;  ///< sup over the grid of e^{t/tau} * |y - ybar|
    double fitted_rate;   ///< least-squares slope of log gap on [T/2, T]
    double ybar0;         ///< shadow initial value, y(s) e^{-lambda1 s} at s = T
    bool limit_reliable;  ///< Richardson check at s = T/2 within 1e-6 relative
    bool rate_reliable;   ///< enough gap points above the noise floor to fit
    double lambda1;
    std::optional<double> lambda2;

    std::vector<double> t;        ///< grid times, l = 0..L
    std::vector<double> y;        ///< solution values
    std::vector<double> ybar;     ///< shadow values ybar0 * e^{lambda1 t}
    std::vector<double> gap;      ///< |y - ybar|
    std::vector<double> envelope; ///< e^{t/tau} * gap

    /// CSV columns t,y,ybar,gap,envelope.
    std::string csv() const;
};

/// Samples the closed-form solution on an (L+1)-point grid over [0, T_long]
/// and measures attraction to the exponential shadow. The solution values are
/// exact (closed form), so the e^{t/tau} envelope is meaningful even when the
/// gap has decayed to rounding scale. Requires |K0| * tau * e < 1
/// (ConfigError otherwise) and tau, T_long, L positive.
AttractionReport measure_attraction(double K0, double tau, double y0, double T_long, int L);

/// Time-clamped globalization: the returned field evaluates the original one
/// at min(max(t, 0), T); identical on [0, T], same constants.
VectorFieldSpec extend_field_weakly_nonlinear(const VectorFieldSpec& field, double T);

struct SmallnessReport {
    bool ok;
    double margin; ///< 1 - K * tau * e
};

/// The memory-smallness test K * tau * e < 1. Requires K, tau >= 0.
SmallnessReport smallness_check(double K, double tau);

} // namespace ndde
