#pragma once

#include <cmath>

#include "ndde/errors.hpp"

namespace ndde {

/// Smooth monotone transition from 0 to 1 across the interval (r1, r2).
struct BumpSpec {
    double r1;
    double r2;
};

namespace detail {

// exp(-1/x) extended by 0 for x <= 0; smooth on all of R.
inline double exp_inv(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

} // namespace detail

/// C-infinity partition-of-unity ramp g(x) = e(x) / (e(x) + e(1-x)) with
/// e(x) = exp(-1/x) on x > 0. Identically 0 for x <= 0, identically 1 for
/// x >= 1, strictly increasing in between, and exactly 1/2 at x = 1/2 by
/// symmetry of the construction.
inline double bump_ramp(double x) {
    const double num = detail::exp_inv(x);
    const double den = num + detail::exp_inv(1.0 - x);
    return num / den;
}

/// Evaluates the transition gamma_{r1,r2}(t) = g((t - r1)/(r2 - r1)).
inline double bump_eval(const BumpSpec& spec, double t) {
    if (!(spec.r1 < spec.r2))
        throw ConfigError("bump_eval: transition interval requires r1 < r2");
    return bump_ramp((t - spec.r1) / (spec.r2 - spec.r1));
}

} // namespace ndde
