#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ndde/delays.hpp"
#include "ndde/linalg.hpp"
#include "ndde/trajectory.hpp"

namespace ndde {

/// Right-hand side F(t, y_t) of a non-autonomous DDE together with its
/// declared regularity constants. K bounds the Lipschitz quotient in the
/// history argument, A bounds ‖F(t, 0)‖∞ on the horizon; both are contracts
/// supplied by the builder and can be falsified empirically by
/// growth_bound_check. tau is the largest delay the evaluator reads.
struct VectorFieldSpec {
    std::function<Vec(double t, const HistoryView& y_t)> eval;
    double K = 0.0;
    double A = 0.0;
    std::size_t m = 1;
    double tau = 0.0;
    /// Metadata: the delay evaluations the field performs, when declared by
    /// the builder. Used for layer-index tables; evaluation ignores it.
    std::vector<DelayFunctionSpec> delays;
};

// Named builders. These are the only field shapes reachable from serialized
// specs and the CLI; tests may wrap arbitrary closures directly.

/// F = 0 in dimension m.
[[nodiscard]] VectorFieldSpec zero_field(std::size_t m, double tau = 0.0);

/// Componentwise linear delayed feedback F(t, y_t) = k0 * y(t - tau).
[[nodiscard]] VectorFieldSpec linear_delay_field(double k0, double tau, std::size_t m = 1);

/// Componentwise saturating feedback with bounded drift:
/// F(t, y_t) = a * tanh(y(t - tau)) + b * cos(t). Lipschitz constant |a|,
/// zero-history bound |b|.
[[nodiscard]] VectorFieldSpec tanh_delay_field(double a, double b, double tau, std::size_t m = 1);

} // namespace ndde
