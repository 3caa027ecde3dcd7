#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "json.hpp"

#include "ndde/linalg.hpp"
#include "ndde/neural_dde.hpp"

namespace ndde {

/// Lipschitz map targeted for exact representation by a delay architecture.
/// Evaluation is restricted to the axis-aligned box [lo, hi]; K_psi is a
/// declared (or conservatively estimated) constant for the max norm,
/// |psi(x) - psi(y)|_inf <= K_psi * |x - y|_inf on the box.
struct TargetMap {
    std::function<Vec(const Vec&)> psi;
    std::size_t n = 1;
    std::size_t q = 1;
    double K_psi = 0.0;
    Vec lo;
    Vec hi;
    nlohmann::json config; ///< {"name": ..., "parameters": {...}} when named

    /// Evaluates psi after checking box membership; DomainError outside,
    /// DimensionError on shape mismatch.
    Vec eval(const Vec& x) const;

    /// x inside the declared box (closed, exact comparison)?
    bool contains(const Vec& x) const;
};

/// Named targets reachable from the CLI and serialized specs:
///   neg          psi(x) = -x            (1 -> 1)
///   affine       psi(x) = a*x + b       (1 -> 1), parameters {"a", "b"}
///   square       psi(x) = x^2 on (0,2)  (1 -> 1)
///   sin          psi(x) = sin(x)        (1 -> 1)
///   quadmin      psi(x) = sum (x_i-p_i)^2, parameters {"p": [...]}
TargetMap make_named_target(const std::string& name, const nlohmann::json& parameters = nlohmann::json::object());

/// Conservative Lipschitz estimate: max difference quotient over `pairs`
/// random pairs in the box, inflated by 1.1.
double estimate_lipschitz(const TargetMap& psi, std::uint64_t seed = 0, int pairs = 10000);

/// Memory-equals-horizon construction (tau = T, identity read-in/out,
/// n = q = m). The field (1/T)(psi(y(t-T)) - y(t-T)) keeps its delayed
/// argument inside the constant initial data, so the solution is linear in t
/// and Euler integration is exact up to rounding: Phi(x) = psi(x).
NeuralDDESpec embed_basic_tauT(const TargetMap& psi, double T);

/// Non-augmented large-memory construction with m = max{n, q} (or any larger
/// m via zero padding). Requires tau in (0, T] and the memory inequality
/// K * tau >= 2 * (1 + K_psi / (w * w_tilde)); violating it raises RegionError
/// naming the required product. The field ramps the state from W x to
/// (1/w_tilde) * psi(x) with prefactor 2(tau - t)/tau^2 on [0, tau] and is
/// zero afterwards, so Phi(x) = psi(x) with first-order Euler error.
NeuralDDESpec embed_nonaugmented(const TargetMap& psi, double tau, double K, double w, double w_tilde,
                                 double T = 0.0, std::size_t m = 0);

/// Augmented construction with m >= n + q. Requires K * T >= K_psi/(w*w_tilde)
/// (RegionError otherwise). The field is an autonomous ODE: input block and
/// padding have zero derivative, the middle block integrates
/// (1/(w_tilde*T)) * psi(x) exactly, so Phi(x) = psi(x) for every
/// tau in [0, T] at any step size.
NeuralDDESpec embed_augmented(const TargetMap& psi, double tau, double T, double K, double w, double w_tilde,
                              std::size_t m);

} // namespace ndde
