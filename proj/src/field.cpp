#include "ndde/field.hpp"

#include <cmath>

namespace ndde {

VectorFieldSpec zero_field(std::size_t m, double tau) {
    VectorFieldSpec f;
    f.eval = [m](double, const HistoryView&) { return Vec(m, 0.0); };
    f.K = 0.0;
    f.A = 0.0;
    f.m = m;
    f.tau = tau;
    return f;
}

VectorFieldSpec linear_delay_field(double k0, double tau, std::size_t m) {
    VectorFieldSpec f;
    f.eval = [k0, tau](double, const HistoryView& y_t) {
        Vec v = y_t.at_offset(-tau);
        for (double& x : v) x *= k0;
        return v;
    };
    f.K = std::abs(k0);
    f.A = 0.0;
    f.m = m;
    f.tau = tau;
    f.delays = {DelayFunctionSpec::constant(tau)};
    return f;
}

VectorFieldSpec tanh_delay_field(double a, double b, double tau, std::size_t m) {
    VectorFieldSpec f;
    f.eval = [a, b, tau](double t, const HistoryView& y_t) {
        Vec v = y_t.at_offset(-tau);
        const double drift = b * std::cos(t);
        for (double& x : v) x = a * std::tanh(x) + drift;
        return v;
    };
    f.K = std::abs(a);
    f.A = std::abs(b);
    f.m = m;
    f.tau = tau;
    f.delays = {DelayFunctionSpec::constant(tau)};
    return f;
}

} // namespace ndde
