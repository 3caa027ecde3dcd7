#include "ndde/small_delay.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"
#include "ndde/lambert.hpp"

namespace ndde {

CharacteristicRoots characteristic_roots(double K0, double tau) {
    if (!(tau > 0.0)) throw DomainError("characteristic_roots: tau must be positive");
    const double x = K0 * tau;
    if (x < -std::exp(-1.0) - 1e-15)
        throw NumericError("characteristic_roots: K0*tau = " + format_g17(x) +
                           " below -1/e, no real root");
    CharacteristicRoots roots;
    roots.K0 = K0;
    roots.tau = tau;
    roots.lambda1 = lambert_w(0, x) / tau;
    if (x < 0.0) roots.lambda2 = lambert_w(-1, x) / tau;
    return roots;
}

namespace {

double poly_eval(const std::vector<double>& c, double u) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * u + c[i];
    return v;
}

} // namespace

double linear_dde_closed_form(double K0, double tau, double y0, double t) {
    if (!(tau > 0.0)) throw DomainError("linear_dde_closed_form: tau must be positive");
    if (t < -tau * (1.0 + 1e-12)) throw DomainError("linear_dde_closed_form: t below -tau");
    if (t <= 0.0) return y0;

    // Interval k holds t in [k*tau, (k+1)*tau); its polynomial (in the local
    // variable u = t - k*tau) is produced by k+1 integration passes starting
    // from the constant history.
    const int k = std::min(static_cast<int>(std::floor(t / tau)), 1 << 20);
    std::vector<double> c{y0};
    for (int i = 0; i <= k; ++i) {
        std::vector<double> next(c.size() + 1);
        next[0] = poly_eval(c, tau);
        for (std::size_t d = 0; d < c.size(); ++d) next[d + 1] = K0 * c[d] / static_cast<double>(d + 1);
        c = std::move(next);
    }
    return poly_eval(c, t - k * tau);
}

double special_solution_linear(double K0, double tau, double t0, double y0, double t) {
    return y0 * std::exp(characteristic_roots(K0, tau).lambda1 * (t - t0));
}

double special_ode_field_linear(double K0, double tau) {
    return characteristic_roots(K0, tau).lambda1;
}

std::string AttractionReport::csv() const {
    std::ostringstream out;
    out << "t,y,ybar,gap,envelope\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out << format_g17(t[i]) << ',' << format_g17(y[i]) << ',' << format_g17(ybar[i]) << ','
            << format_g17(gap[i]) << ',' << format_g17(envelope[i]) << '\n';
    return out.str();
}

AttractionReport measure_attraction(double K0, double tau, double y0, double T_long, int L) {
    if (!(tau > 0.0) || !(T_long > 0.0) || L < 2)
        throw ConfigError("measure_attraction: need tau > 0, T_long > 0, L >= 2");
    const SmallnessReport small = smallness_check(std::abs(K0), tau);
    if (!small.ok)
        throw ConfigError("measure_attraction: |K0|*tau*e = " + format_g17(std::abs(K0) * tau * std::exp(1.0)) +
                          " is not < 1");

    const CharacteristicRoots roots = characteristic_roots(K0, tau);
    const double delta = T_long / L;

    AttractionReport rep;
    rep.lambda1 = roots.lambda1;
    rep.lambda2 = roots.lambda2;

    // Shadow initial value from the limit formula, evaluated at the last grid
    // time with a half-horizon consistency check.
    const auto shadow_at = [&](double s) {
        return linear_dde_closed_form(K0, tau, y0, s) * std::exp(-roots.lambda1 * s);
    };
    rep.ybar0 = shadow_at(T_long);
    const double ybar0_half = shadow_at(0.5 * T_long);
    rep.limit_reliable =
        std::abs(rep.ybar0 - ybar0_half) <= 1e-6 * std::max(1e-300, std::abs(rep.ybar0));

    rep.t.resize(static_cast<std::size_t>(L) + 1);
    rep.y.resize(rep.t.size());
    rep.ybar.resize(rep.t.size());
    rep.gap.resize(rep.t.size());
    rep.envelope.resize(rep.t.size());
    rep.C_u_estimate = 0.0;
    for (int l = 0; l <= L; ++l) {
        const double tl = l * delta;
        const std::size_t i = static_cast<std::size_t>(l);
        rep.t[i] = tl;
        rep.y[i] = linear_dde_closed_form(K0, tau, y0, tl);
        rep.ybar[i] = rep.ybar0 * std::exp(roots.lambda1 * tl);
        rep.gap[i] = std::abs(rep.y[i] - rep.ybar[i]);
        rep.envelope[i] = std::exp(tl / tau) * rep.gap[i];
        rep.C_u_estimate = std::max(rep.C_u_estimate, rep.envelope[i]);
    }

    // Least-squares slope of log gap over the late window, ignoring values at
    // rounding scale.
    double sum_t = 0.0, sum_g = 0.0, sum_tt = 0.0, sum_tg = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < rep.t.size(); ++i) {
        if (rep.t[i] < 0.5 * T_long || rep.gap[i] <= 1e-13) continue;
        const double lg = std::log(rep.gap[i]);
        sum_t += rep.t[i];
        sum_g += lg;
        sum_tt += rep.t[i] * rep.t[i];
        sum_tg += rep.t[i] * lg;
        ++count;
    }
    rep.rate_reliable = count >= 2;
    if (rep.rate_reliable) {
        const double denom = count * sum_tt - sum_t * sum_t;
        rep.fitted_rate = (count * sum_tg - sum_t * sum_g) / denom;
    } else {
        rep.fitted_rate = 0.0;
    }
    return rep;
}

VectorFieldSpec extend_field_weakly_nonlinear(const VectorFieldSpec& field, double T) {
    if (!(T > 0.0)) throw ConfigError("extend_field_weakly_nonlinear: T must be positive");
    VectorFieldSpec out = field;
    const auto inner = field.eval;
    out.eval = [inner, T](double t, const HistoryView& y_t) {
        return inner(std::clamp(t, 0.0, T), y_t);
    };
    return out;
}

SmallnessReport smallness_check(double K, double tau) {
    if (K < 0.0 || tau < 0.0) throw DomainError("smallness_check: K and tau must be nonnegative");
    const double product = K * tau * std::exp(1.0);
    return {product < 1.0, 1.0 - product};
}

} // namespace ndde
