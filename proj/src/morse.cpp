#include "ndde/morse.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

double normal_form_eval(double psi_p, int r, std::size_t n, const Vec& u) {
    if (r < 0 || static_cast<std::size_t>(r) > n)
        throw DomainError("normal_form_eval: index r must be in [0, n]");
    if (u.size() != n) throw DimensionError("normal_form_eval: u has wrong dimension");
    double v = psi_p;
    for (std::size_t j = 0; j < n; ++j) {
        const double sq = u[j] * u[j];
        v += j < static_cast<std::size_t>(r) ? -sq : sq;
    }
    return v;
}

CriticalPointReport classify_critical_point(const ScalarFn& psi, const Vec& p, double h, double r0) {
    if (!(h > 0.0)) throw ConfigError("classify_critical_point: step h must be positive");
    const std::size_t n = p.size();
    const double psi_p = psi(p);

    const auto shifted = [&](std::size_t i, double si, std::size_t j, double sj) {
        Vec x = p;
        x[i] += si * h;
        x[j] += sj * h;
        return psi(x);
    };

    Vec grad(n);
    Eigen::MatrixXd H(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        grad[i] = (shifted(i, 1, i, 0) - shifted(i, -1, i, 0)) / (2.0 * h);
        H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            (shifted(i, 1, i, 0) - 2.0 * psi_p + shifted(i, -1, i, 0)) / (h * h);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double mixed = (shifted(i, 1, j, 1) - shifted(i, 1, j, -1) -
                                  shifted(i, -1, j, 1) + shifted(i, -1, j, -1)) /
                                 (4.0 * h * h);
            H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = mixed;
            H(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = mixed;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
    if (solver.info() != Eigen::Success)
        throw NumericError("classify_critical_point: eigen decomposition failed");

    CriticalPointReport rep;
    rep.gradient_norm = inf_norm(grad);
    rep.critical = rep.gradient_norm <= 1e-6 * (1.0 + std::abs(psi_p));
    rep.r0 = r0;
    const double tol = 1e-6;
    rep.nondegenerate = true;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double ev = solver.eigenvalues()(i);
        rep.eigenvalues.push_back(ev);
        const int sign = ev < -tol ? -1 : (ev > tol ? 1 : 0);
        rep.hessian_eigen_signs.push_back(sign);
        if (sign < 0) ++rep.index;
        if (sign == 0) rep.nondegenerate = false;
    }
    return rep;
}

nlohmann::json SeparationConstants::to_json() const {
    return {
        {"C1", C1},
        {"delta1", delta1},
        {"delta2", delta2},
        {"delta3", delta3},
        {"delta_star", delta_star},
        {"kappa", kappa},
        {"beta", beta},
        {"tau1", tau1},
        {"tau3", tau3},
        {"tau0", tau0},
        {"inputs",
         {{"K", K}, {"A", A}, {"T", T}, {"M", M}, {"r0", r0}, {"r1", r1},
          {"eps", eps}, {"w", w}, {"w_tilde", w_tilde}, {"C2", C2}}},
    };
}

SeparationConstants separation_constants(double K, double A, double T, double M, double r0, double r1,
                                         double eps, double w, double w_tilde, double C2) {
    if (!(K > 0.0) || !(T > 0.0) || !(M > 0.0) || !(r1 > 0.0) || !(w > 0.0) || !(w_tilde > 0.0) ||
        A < 0.0 || eps < 0.0)
        throw ConfigError("separation_constants: K, T, M, r1, w, w_tilde must be positive; A, eps nonnegative");
    if (!(2.0 * eps < r0 * r0))
        throw ConfigError("separation_constants: requires 2*eps < r0^2, got 2*eps = " +
                          format_g17(2.0 * eps) + ", r0^2 = " + format_g17(r0 * r0));
    if (C2 < 0.5 * r1)
        throw ConfigError("separation_constants: requires C2 >= r1/2");

    SeparationConstants c;
    c.K = K; c.A = A; c.T = T; c.M = M; c.r0 = r0; c.r1 = r1;
    c.eps = eps; c.w = w; c.w_tilde = w_tilde; c.C2 = C2;

    const double e = std::exp(1.0);
    c.C1 = (K * M + A) * std::exp(K * T);
    c.delta_star = 0.5 * (r0 * r0 - 2.0 * eps);
    const double tail = r0 * r0 - 2.0 * eps - c.delta_star;
    if (!(2.0 * C2 > tail) || !(2.0 * C2 > c.delta_star))
        throw ConfigError("separation_constants: 2*C2 must exceed delta_star for positive logs");
    c.tau3 = T / std::log(2.0 * C2 / tail);
    c.kappa = std::min(c.delta_star / (w_tilde * std::exp(K * e * T)), r1);
    c.beta = std::log(2.0 * C2 / c.kappa);
    c.tau1 = c.kappa / (2.0 * c.C1 * c.beta);
    // The 1/(K e) term enters the min fractionally shrunk so the strict
    // inequality K * tau0 * e < 1 holds even when it is the binding term.
    c.tau0 = std::min({c.tau1, (1.0 - 1e-12) / (K * e), T / c.beta, c.tau3});
    c.delta1 = c.C1 * c.beta * c.tau0;
    c.delta2 = C2 * std::exp(-c.beta);
    c.delta3 = C2 * std::exp(-T / c.tau3);

    if (!(K * c.tau0 * e < 1.0))
        throw NumericError("separation_constants: derived tau0 violates K*tau0*e < 1");
    return c;
}

std::optional<Vec> rank_deficient_witness(const Matrix& W, const Vec& p, double r0) {
    if (W.rows() != W.cols()) throw DimensionError("rank_deficient_witness: W must be square");
    if (p.size() != W.rows()) throw DimensionError("rank_deficient_witness: p has wrong dimension");
    if (!(r0 > 0.0)) throw ConfigError("rank_deficient_witness: r0 must be positive");

    const std::optional<Vec> kernel = kernel_vector(W);
    if (!kernel) return std::nullopt;

    const double norm = two_norm(*kernel);
    Vec s = p;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += r0 * (*kernel)[i] / norm;

    const double err = inf_norm_diff(W.apply(s), W.apply(p));
    if (err > 1e-10)
        throw NumericError("rank_deficient_witness: W s deviates from W p by " + format_g17(err));
    return s;
}

} // namespace ndde
