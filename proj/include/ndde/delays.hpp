#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ndde/grid.hpp"

namespace ndde {

enum class DelayKind { A, B, C, Custom };

/// One member of the grid-aligned delay families.
///
/// All three named kinds live on the uniform grid with step `delta`, maximum
/// delay `tau` = R*delta, and horizon `T` = L*delta; time is measured from the
/// start of the horizon. Their values at grid times are exact multiples of
/// `delta`, which is what makes the alignment table below integer-valued.
///
///   kind A: constant,        tau_j(t) = j*delta                 (1 <= j <= R)
///   kind B: ramped constant, tau_j(t) = gamma(t) * j*delta      (1 <= j <= R)
///           with gamma the smooth transition across ((j-1)*delta, j*delta)
///   kind C: saturating lag, 0 on [0, j*delta], then smoothly joins t - j*delta,
///           then smoothly saturates at tau from j*delta + tau onward
///           (0 <= j <= L-1, requires R >= 3 so the middle branch has room)
struct DelayFunctionSpec {
    DelayKind kind = DelayKind::A;
    int j = 1;
    double delta = 0.0;
    double tau = 0.0;
    double T = 0.0;
    std::function<double(double)> custom; ///< used only when kind == Custom
    std::string name;                     ///< optional label override

    /// Short column label: `name` if set, else e.g. "A1", "C0", "custom3".
    std::string label() const;

    /// Constant delay of the given value, labeled "const".
    static DelayFunctionSpec constant(double value);
};

/// Evaluates the delay at time t in [0, T]. Throws DomainError when t or j is
/// out of range and ConfigError when the description itself is malformed
/// (non-positive step, kind C with R < 3, missing custom evaluator).
double delay_eval(const DelayFunctionSpec& spec, double t);

/// Integer index table alpha[l][k] with t_l - tau_k(t_l) = t0 + alpha*delta,
/// rows l = 0..L, one column per delay spec.
struct AlignmentTable {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> alpha;
    int L = 0;
    int R = 0;

    /// True when the delayed time of entry (l, k) is >= the start of the
    /// horizon, i.e. the entry does not reach into the initial data.
    bool nonnegative_time(int l, std::size_t k) const { return alpha[static_cast<std::size_t>(l)][k] >= 0; }

    /// CSV with header "l,<label>,..." and one row per grid index.
    std::string csv() const;
};

/// Builds the alignment table for the given delays on the grid. Each ratio
/// (t_l - tau(t_l) - t0)/delta must be within 1e-9 of an integer in
/// {-R, ..., l}; otherwise an AlignmentError listing every offending (label, l)
/// pair is thrown. Spec step/horizon must match the grid to 1e-12 relative.
AlignmentTable grid_alignment_table(const std::vector<DelayFunctionSpec>& specs, const TimeGrid& grid);

} // namespace ndde
