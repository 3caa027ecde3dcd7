#include "ndde/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"
#include "ndde/rng.hpp"

namespace ndde {

bool TargetMap::contains(const Vec& x) const {
    if (x.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

Vec TargetMap::eval(const Vec& x) const {
    if (x.size() != n) throw DimensionError("TargetMap: input has wrong dimension");
    if (!contains(x)) throw DomainError("TargetMap: point outside the declared domain box");
    Vec y = psi(x);
    if (y.size() != q) throw DimensionError("TargetMap: evaluator output has wrong dimension");
    return y;
}

TargetMap make_named_target(const std::string& name, const nlohmann::json& parameters) {
    TargetMap t;
    t.config = {{"name", name}, {"parameters", parameters}};
    if (name == "neg") {
        t.psi = [](const Vec& x) { return Vec{-x[0]}; };
        t.K_psi = 1.0;
        t.lo = {-2.0};
        t.hi = {2.0};
    } else if (name == "affine") {
        const double a = parameters.value("a", 1.0);
        const double b = parameters.value("b", 0.0);
        t.psi = [a, b](const Vec& x) { return Vec{a * x[0] + b}; };
        t.K_psi = std::abs(a);
        t.lo = {-2.0};
        t.hi = {2.0};
    } else if (name == "square") {
        t.psi = [](const Vec& x) { return Vec{x[0] * x[0]}; };
        t.K_psi = 4.0;
        t.lo = {0.0};
        t.hi = {2.0};
    } else if (name == "sin") {
        t.psi = [](const Vec& x) { return Vec{std::sin(x[0])}; };
        t.K_psi = 1.0;
        t.lo = {-3.0};
        t.hi = {3.0};
    } else if (name == "quadmin") {
        if (!parameters.contains("p") || !parameters["p"].is_array() || parameters["p"].empty())
            throw ConfigError("target quadmin needs a nonempty array parameter p");
        const Vec p = parameters["p"].get<Vec>();
        t.n = p.size();
        t.psi = [p](const Vec& x) {
            double s = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) s += (x[i] - p[i]) * (x[i] - p[i]);
            return Vec{s};
        };
        t.K_psi = 2.0 * static_cast<double>(p.size());
        t.lo = p;
        t.hi = p;
        for (std::size_t i = 0; i < p.size(); ++i) {
            t.lo[i] -= 1.0;
            t.hi[i] += 1.0;
        }
    } else {
        throw ConfigError("unknown target map '" + name + "'");
    }
    return t;
}

double estimate_lipschitz(const TargetMap& psi, std::uint64_t seed, int pairs) {
    CounterRng rng(seed, /*stream=*/0x4c697073);
    double worst = 0.0;
    for (int k = 0; k < pairs; ++k) {
        Vec x(psi.n), y(psi.n);
        for (std::size_t i = 0; i < psi.n; ++i) {
            const std::uint64_t base = static_cast<std::uint64_t>(k) * 2 * psi.n + 2 * i;
            x[i] = rng.uniform_in(base, psi.lo[i], psi.hi[i]);
            y[i] = rng.uniform_in(base + 1, psi.lo[i], psi.hi[i]);
        }
        const double dx = inf_norm_diff(x, y);
        if (dx < 1e-12) continue;
        worst = std::max(worst, inf_norm_diff(psi.eval(x), psi.eval(y)) / dx);
    }
    return 1.1 * worst;
}

NeuralDDESpec embed_basic_tauT(const TargetMap& psi, double T) {
    if (psi.n != psi.q)
        throw DimensionError("embed_basic_tauT: needs square target (n = q)");
    if (!(T > 0.0)) throw ConfigError("embed_basic_tauT: T must be positive");

    const std::size_t m = psi.n;
    NeuralDDESpec spec;
    spec.lambda_in = AffineMap::identity(m);
    spec.lambda_out = AffineMap::identity(m);
    spec.tau = T;
    spec.T = T;

    TargetMap target = psi;
    spec.field.eval = [target, T, m](double, const HistoryView& y_t) {
        const Vec u = y_t.at_offset(-T);
        Vec f = target.eval(u);
        for (std::size_t i = 0; i < m; ++i) f[i] = (f[i] - u[i]) / T;
        return f;
    };
    spec.field.K = (psi.K_psi + 1.0) / T;
    spec.field.A = psi.contains(Vec(m, 0.0)) ? inf_norm(psi.psi(Vec(m, 0.0))) / T : 0.0;
    spec.field.m = m;
    spec.field.tau = T;
    spec.field.delays = {DelayFunctionSpec::constant(T)};
    spec.field_config = {{"name", "embed-basic"},
                         {"parameters", {{"target", psi.config}, {"T", T}}}};
    return spec;
}

NeuralDDESpec embed_nonaugmented(const TargetMap& psi, double tau, double K, double w, double w_tilde,
                                 double T, std::size_t m) {
    if (!(tau > 0.0)) throw DomainError("embed_nonaugmented: tau must be positive");
    if (T == 0.0) T = tau;
    if (!(w > 0.0) || !(w_tilde > 0.0)) throw ConfigError("embed_nonaugmented: w and w_tilde must be positive");
    if (tau > T * (1.0 + 1e-12)) throw ConfigError("embed_nonaugmented: tau must not exceed T");
    if (m == 0) m = std::max(psi.n, psi.q);
    if (m < std::max(psi.n, psi.q))
        throw DimensionError("embed_nonaugmented: m must be at least max{n, q}");
    const double required = 2.0 * (1.0 + psi.K_psi / (w * w_tilde));
    if (K * tau < required)
        throw RegionError("embed_nonaugmented: memory capacity K*tau = " + format_g17(K * tau) +
                          " below required " + format_g17(required));

    NeuralDDESpec spec;
    spec.lambda_in = AffineMap::scaled_identity(m, psi.n, w);
    spec.lambda_out = AffineMap::scaled_identity(psi.q, m, w_tilde);
    spec.tau = tau;
    spec.T = T;

    TargetMap target = psi;
    const std::size_t n = psi.n, q = psi.q;
    spec.field.eval = [target, tau, w, w_tilde, m, n, q](double t, const HistoryView& y_t) {
        // Literal time clamping: before 0 the field freezes at its t = 0
        // value, after tau it vanishes.
        if (t >= tau) return Vec(m, 0.0);
        if (t < 0.0) t = 0.0;
        const Vec past = y_t.at_offset(-tau);
        Vec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = past[i] / w;
        const Vec psi_x = target.eval(x);
        const double pre = 2.0 * (tau - t) / (tau * tau);
        Vec f(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double lifted = i < q ? psi_x[i] / w_tilde : 0.0;
            f[i] = pre * (lifted - past[i]);
        }
        return f;
    };
    spec.field.K = (2.0 / tau) * (1.0 + psi.K_psi / (w * w_tilde));
    spec.field.A = psi.contains(Vec(psi.n, 0.0))
                       ? (2.0 / tau) * inf_norm(psi.psi(Vec(psi.n, 0.0))) / w_tilde
                       : 0.0;
    spec.field.m = m;
    spec.field.tau = tau;
    spec.field.delays = {DelayFunctionSpec::constant(tau)};
    spec.field_config = {{"name", "embed-nonaug"},
                         {"parameters",
                          {{"target", psi.config}, {"tau", tau}, {"T", T}, {"K", K},
                           {"w", w}, {"w_tilde", w_tilde}, {"m", m}}}};
    return spec;
}

NeuralDDESpec embed_augmented(const TargetMap& psi, double tau, double T, double K, double w, double w_tilde,
                              std::size_t m) {
    if (m < psi.n + psi.q)
        throw DimensionError("embed_augmented: m must be at least n + q");
    if (!(w > 0.0) || !(w_tilde > 0.0)) throw ConfigError("embed_augmented: w and w_tilde must be positive");
    if (!(T > 0.0) || tau < 0.0 || tau > T * (1.0 + 1e-12))
        throw ConfigError("embed_augmented: need 0 <= tau <= T");
    const double required = psi.K_psi / (w * w_tilde);
    if (K * T < required)
        throw RegionError("embed_augmented: K*T = " + format_g17(K * T) +
                          " below required " + format_g17(required));

    NeuralDDESpec spec;
    spec.lambda_in = AffineMap::scaled_identity(m, psi.n, w);
    spec.tau = tau;
    spec.T = T;

    const std::size_t n = psi.n, q = psi.q;
    Matrix W_tilde_mat(q, m);
    for (std::size_t i = 0; i < q; ++i) W_tilde_mat(i, n + i) = w_tilde;
    spec.lambda_out = {std::move(W_tilde_mat), Vec(q, 0.0)};

    TargetMap target = psi;
    spec.field.eval = [target, T, w, w_tilde, m, n, q](double, const HistoryView& y_t) {
        const Vec cur = y_t.at_offset(0.0);
        Vec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = cur[i] / w;
        const Vec psi_x = target.eval(x);
        Vec f(m, 0.0);
        for (std::size_t i = 0; i < q; ++i) f[n + i] = psi_x[i] / (w_tilde * T);
        return f;
    };
    spec.field.K = psi.K_psi / (w * w_tilde * T);
    spec.field.A = psi.contains(Vec(psi.n, 0.0))
                       ? inf_norm(psi.psi(Vec(psi.n, 0.0))) / (w_tilde * T)
                       : 0.0;
    spec.field.m = m;
    spec.field.tau = tau;
    spec.field_config = {{"name", "embed-aug"},
                         {"parameters",
                          {{"target", psi.config}, {"tau", tau}, {"T", T}, {"K", K},
                           {"w", w}, {"w_tilde", w_tilde}, {"m", m}}}};
    return spec;
}

} // namespace ndde
