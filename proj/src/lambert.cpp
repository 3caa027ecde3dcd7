#include "ndde/lambert.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

namespace {

double residual(double w, double x) { return w * std::exp(w) - x; }

// Series about the branch point x = -1/e in p = sqrt(2(1 + e*x)); the upper
// sign is branch 0, the lower branch -1.
double branch_point_series(int branch, double x) {
    const double s = 2.0 * (1.0 + std::exp(1.0) * x);
    const double p = std::sqrt(std::max(0.0, s));
    const double q = branch == 0 ? p : -p;
    return -1.0 + q - q * q / 3.0 + 11.0 * q * q * q / 72.0;
}

double initial_guess(int branch, double x) {
    if (branch == 0) {
        if (x < -0.25) return branch_point_series(0, x);
        if (x < 1.0) return x / (1.0 + x);
        const double lx = std::log(x);
        return lx - std::log(lx);
    }
    if (x < -0.25) return branch_point_series(-1, x);
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    return l1 - l2 + l2 / l1;
}

// Monotone bisection fallback; f(w) = w*e^w - x is increasing on [-1, inf)
// and decreasing on (-inf, -1].
double bisect(int branch, double x, double tol) {
    double lo, hi;
    if (branch == 0) {
        lo = -1.0;
        hi = 1.0;
        while (residual(hi, x) < 0.0) hi = 2.0 * hi + 1.0;
    } else {
        hi = -1.0;
        lo = -2.0;
        while (residual(lo, x) < 0.0) lo *= 2.0;
        // here f(lo) >= 0 >= ... note f decreasing on this side
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f = residual(mid, x);
        if (std::abs(f) <= tol) return mid;
        const bool increasing = branch == 0;
        if ((f < 0.0) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double lambert_w(int branch, double x) {
    if (branch != 0 && branch != -1)
        throw DomainError("lambert_w: branch must be 0 or -1");
    const double neg_inv_e = -std::exp(-1.0);
    const double slack = 1e-15;
    if (x < neg_inv_e - slack)
        throw DomainError("lambert_w: x = " + format_g17(x) + " below -1/e");
    if (branch == -1 && !(x < 0.0))
        throw DomainError("lambert_w: branch -1 needs x < 0, got " + format_g17(x));

    // Within noise of the branch point Halley's denominator vanishes; the
    // series value is already accurate to O(p^4).
    if (2.0 * (1.0 + std::exp(1.0) * x) < 1e-10)
        return branch_point_series(branch, x);

    // Iterate to a fixed point of the Halley map rather than to a residual
    // threshold: convergence is cubic, so the extra steps are few and the
    // final residual sits at evaluation-rounding scale.
    const double tol = 1e-14 * std::max(1.0, std::abs(x)) * 0.5;
    double w = initial_guess(branch, x);
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < 50; ++i) {
        const double e = std::exp(w);
        const double f = w * e - x;
        if (f == 0.0) return w;
        const double fp = e * (w + 1.0);
        const double step = f / (fp - (w + 2.0) * f / (2.0 * w + 2.0));
        const double next = w - step;
        if (!std::isfinite(next) || (branch == 0 && next < -1.0) || (branch == -1 && next > -1.0))
            break;
        if (next == w || next == prev) break;
        prev = w;
        w = next;
    }
    if (std::abs(residual(w, x)) <= tol) return w;
    return bisect(branch, x, tol);
}

} // namespace ndde
