#pragma once

#include <functional>
#include <optional>

#include "ndde/field.hpp"
#include "ndde/grid.hpp"
#include "ndde/trajectory.hpp"

namespace ndde {

/// Initial data on [t0 - tau, t0]: either a constant vector or a function
/// of time sampled at the history grid points.
using InitialFunction = std::function<Vec(double t)>;

/// The single Euler update y + delta * f, shared by the solver and the
/// layered-network forward pass so both perform identical floating-point
/// operations.
[[nodiscard]] Vec euler_step(const Vec& y, double delta, const Vec& f);

/// Explicit Euler sweep y_{l+1} = y_l + delta * F(t_l, y_{t_l}) over the
/// grid, with the history segment prefilled from the initial data. Requires
/// grid.tau() to match field.tau within 1e-12 (relative); throws
/// NumericError naming t_l if the field returns a non-finite value.
[[nodiscard]] Trajectory euler_solve(const VectorFieldSpec& field, const Vec& y0, const TimeGrid& grid);
[[nodiscard]] Trajectory euler_solve(const VectorFieldSpec& field, const InitialFunction& init,
                                     const TimeGrid& grid);

/// Empirical check of the a-priori growth bounds for a weakly nonlinear
/// field. Part (a): ‖y(t)‖∞ ≤ ‖u‖∞ e^{K(t-t0)} + (A/K)(e^{K(t-t0)} - 1) at
/// every forward grid point (K = 0 uses the limit ‖u‖∞ + A(t-t0)). Part
/// (b), when a second trajectory on the same grid is supplied: the solutions
/// separate no faster than ‖u-v‖∞ e^{K(t-t0)}, with ‖u-v‖∞ measured on the
/// history segment. Reported values are the worst signed violations
/// (left side minus bound); honest (K, A) make them non-positive up to
/// rounding.
struct GrowthBoundReport {
    double max_violation_a = 0.0;
    std::optional<double> max_violation_b;
};

[[nodiscard]] GrowthBoundReport growth_bound_check(const Trajectory& traj, const VectorFieldSpec& field,
                                                   double init_norm,
                                                   const Trajectory* second = nullptr);

} // namespace ndde
