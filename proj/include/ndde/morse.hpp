#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "json.hpp"

#include "ndde/linalg.hpp"

namespace ndde {

/// Quadratic normal form around a critical point with index r:
/// value(u) = psi_p - sum_{j<r} u_j^2 + sum_{j>=r} u_j^2.
double normal_form_eval(double psi_p, int r, std::size_t n, const Vec& u);

using ScalarFn = std::function<double(const Vec&)>;

struct CriticalPointReport {
    double gradient_norm = 0.0;
    std::vector<double> eigenvalues;      ///< Hessian spectrum, ascending
    std::vector<int> hessian_eigen_signs; ///< -1/0/+1 per eigenvalue under the degeneracy tolerance
    int index = 0;                        ///< count of negative eigenvalues
    bool nondegenerate = false;
    bool critical = false; ///< gradient_norm within 1e-6 * (1 + |psi(p)|)
    double r0 = 0.0;       ///< radius of definition, echoed from the caller
};

/// Central-difference gradient and Hessian at p with step h, symmetric
/// eigen-decomposition, and sign classification with degeneracy tolerance
/// 1e-6. A non-critical point is reported, not thrown.
CriticalPointReport classify_critical_point(const ScalarFn& psi, const Vec& p, double h, double r0 = 0.0);

/// Derived quantities controlling how long two separated level regions stay
/// separated under the flow; all formulas are elementary in the inputs.
struct SeparationConstants {
    double C1;         ///< (K*M + A) * e^{K*T}, drift bound of the time-t map
    double delta1;     ///< C1 * beta * tau0, displacement bound at t* = beta*tau0
    double delta2;     ///< C2 * e^{-beta}
    double delta3;     ///< C2 * e^{-T/tau3}
    double delta_star; ///< (r0^2 - 2*eps)/2, canonical midpoint choice
    double kappa;      ///< min{delta_star / (w_tilde * e^{K e T}), r1}
    double beta;       ///< ln(2*C2 / kappa)
    double tau1;       ///< kappa / (2*C1*beta)
    double tau3;       ///< T / ln(2*C2 / (r0^2 - 2*eps - delta_star))
    double tau0;       ///< min{tau1, 1/(K e), T/beta, tau3}, kept strictly under 1/(K e)

    double K, A, T, M, r0, r1, eps, w, w_tilde, C2; ///< input echo

    nlohmann::json to_json() const;
};

/// Computes the ledger. Preconditions (ConfigError when violated):
/// 2*eps < r0^2, K > 0, T > 0, M > 0, 0 < r1, w > 0, w_tilde > 0,
/// C2 >= r1/2, and 2*C2 > delta_star so the logs are positive. The result is
/// checked to satisfy K * tau0 * e < 1.
SeparationConstants separation_constants(double K, double A, double T, double M, double r0, double r1,
                                         double eps, double w, double w_tilde, double C2);

/// For square W with nontrivial kernel: a point s at euclidean distance r0
/// from p with W s = W p, namely s = p + r0 * x / |x|_2 for a kernel vector x.
/// Returns nullopt for full-rank W. The identity W s = W p is verified to
/// 1e-10 (NumericError otherwise).
std::optional<Vec> rank_deficient_witness(const Matrix& W, const Vec& p, double r0);

} // namespace ndde
