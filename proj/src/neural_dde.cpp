#include "ndde/neural_dde.hpp"

#include <algorithm>
#include <cmath>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

Architecture classify_architecture(std::size_t n, std::size_t m, std::size_t q) {
    if (n == 0 || m == 0 || q == 0)
        throw DimensionError("classify_architecture: dimensions must be positive");
    return m > std::max(n, q) ? Architecture::Augmented : Architecture::NonAugmented;
}

const char* architecture_name(Architecture a) {
    return a == Architecture::Augmented ? "augmented" : "non-augmented";
}

bool in_full_rank_set(const Matrix& W, const Matrix& W_tilde, double rel_tol) {
    const auto full = [rel_tol](const Matrix& M) {
        return rank_row_reduction(M, rel_tol) ==
               static_cast<int>(std::min(M.rows(), M.cols()));
    };
    return full(W) && full(W_tilde);
}

void NeuralDDESpec::validate() const {
    if (lambda_in.rows() != field.m || lambda_out.cols() != field.m)
        throw DimensionError("NeuralDDESpec: affine maps do not match the state dimension");
    if (lambda_in.b.size() != lambda_in.rows() || lambda_out.b.size() != lambda_out.rows())
        throw DimensionError("NeuralDDESpec: affine offset lengths are wrong");
    if (!(tau >= 0.0) || !(T > 0.0) || tau > T * (1.0 + 1e-12))
        throw ConfigError("NeuralDDESpec: need 0 <= tau <= T, got tau = " + format_g17(tau) +
                          ", T = " + format_g17(T));
    if (std::abs(field.tau - tau) > 1e-12 * std::max(1.0, tau))
        throw ConfigError("NeuralDDESpec: field history depth disagrees with tau");
}

Trajectory ndde_trajectory(const NeuralDDESpec& spec, const Vec& x, int L) {
    spec.validate();
    if (x.size() != spec.n()) throw DimensionError("ndde_trajectory: input has wrong dimension");
    const Vec u = spec.lambda_in.apply(x);
    const TimeGrid grid = make_aligned_grid(0.0, spec.T, L, spec.tau);
    return euler_solve(spec.field, u, grid);
}

Vec ndde_forward(const NeuralDDESpec& spec, const Vec& x, int L) {
    return spec.lambda_out.apply(ndde_trajectory(spec, x, L).final_state());
}

namespace {

bool same_affine(const AffineMap& a, const AffineMap& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.W(i, j) != b.W(i, j)) return false;
    return a.b == b.b;
}

} // namespace

GapReport parameterized_gap_bound(const NeuralDDESpec& phi_general, const NeuralDDESpec& phi_perturbed,
                                  double delta_sup, const std::vector<Vec>& samples, int L) {
    if (!same_affine(phi_general.lambda_in, phi_perturbed.lambda_in) ||
        !same_affine(phi_general.lambda_out, phi_perturbed.lambda_out) ||
        phi_general.tau != phi_perturbed.tau || phi_general.T != phi_perturbed.T)
        throw ConfigError("parameterized_gap_bound: specs do not share affine maps and times");
    if (delta_sup < 0.0) throw ConfigError("parameterized_gap_bound: delta_sup must be >= 0");

    GapReport report;
    report.theory_bound = phi_general.lambda_out.W.inf_norm() * phi_general.T * delta_sup;
    report.slack = 10.0 * phi_general.T / L;
    report.empirical_max = 0.0;

    const double field_tol = delta_sup + 1e-12 * std::max(1.0, delta_sup);
    for (const Vec& x : samples) {
        const Trajectory t1 = ndde_trajectory(phi_general, x, L);
        const Trajectory t2 = ndde_trajectory(phi_perturbed, x, L);

        for (int l = 0; l < t1.grid.L; ++l) {
            const HistoryView view(t1.grid, t1.states, l);
            const double t = t1.grid.time_at(l);
            const double diff = inf_norm_diff(phi_general.field.eval(t, view),
                                              phi_perturbed.field.eval(t, view));
            if (diff > field_tol)
                throw ConfigError("parameterized_gap_bound: field difference " + format_g17(diff) +
                                  " exceeds declared sup bound " + format_g17(delta_sup));
        }

        const double gap = inf_norm_diff(phi_general.lambda_out.apply(t1.final_state()),
                                         phi_perturbed.lambda_out.apply(t2.final_state()));
        report.empirical_max = std::max(report.empirical_max, gap);
    }

    if (report.empirical_max > report.theory_bound + report.slack)
        throw NumericError("parameterized_gap_bound: empirical gap " + format_g17(report.empirical_max) +
                           " exceeds bound " + format_g17(report.theory_bound) + " + slack " +
                           format_g17(report.slack));
    return report;
}

} // namespace ndde
