#include "ndde/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

namespace {

bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

Trajectory solve_impl(const VectorFieldSpec& field, const InitialFunction& init, const TimeGrid& grid) {
    if (std::abs(grid.tau() - field.tau) > 1e-12 * std::max(1.0, field.tau))
        throw AlignmentError("euler_solve: grid history depth " + format_g17(grid.tau()) +
                             " does not match field delay " + format_g17(field.tau));

    Trajectory traj;
    traj.grid = grid;
    traj.m = field.m;
    traj.states.resize(static_cast<std::size_t>(grid.R + grid.L + 1));

    for (int l = -grid.R; l <= 0; ++l) {
        Vec v = init(grid.time_at(l));
        if (v.size() != field.m) throw DimensionError("euler_solve: initial data has wrong dimension");
        traj.states[static_cast<std::size_t>(l + grid.R)] = std::move(v);
    }

    for (int l = 0; l < grid.L; ++l) {
        const HistoryView view(grid, traj.states, l);
        const Vec f = field.eval(grid.time_at(l), view);
        if (f.size() != field.m) throw DimensionError("euler_solve: field output has wrong dimension");
        if (!all_finite(f))
            throw NumericError("euler_solve: non-finite field value at t = " + format_g17(grid.time_at(l)));
        Vec next = euler_step(traj.states[static_cast<std::size_t>(l + grid.R)], grid.delta, f);
        if (!all_finite(next))
            throw NumericError("euler_solve: state overflow at t = " + format_g17(grid.time_at(l + 1)));
        traj.states[static_cast<std::size_t>(l + 1 + grid.R)] = std::move(next);
    }
    return traj;
}

} // namespace

Vec euler_step(const Vec& y, double delta, const Vec& f) {
    Vec next(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) next[i] = y[i] + delta * f[i];
    return next;
}

Trajectory euler_solve(const VectorFieldSpec& field, const Vec& y0, const TimeGrid& grid) {
    return solve_impl(field, [&y0](double) { return y0; }, grid);
}

Trajectory euler_solve(const VectorFieldSpec& field, const InitialFunction& init, const TimeGrid& grid) {
    return solve_impl(field, init, grid);
}

GrowthBoundReport growth_bound_check(const Trajectory& traj, const VectorFieldSpec& field,
                                     double init_norm, const Trajectory* second) {
    const TimeGrid& g = traj.grid;
    GrowthBoundReport report;
    report.max_violation_a = -std::numeric_limits<double>::infinity();

    for (int l = 0; l <= g.L; ++l) {
        const double dt = g.time_at(l) - g.t0;
        const double growth = std::exp(field.K * dt);
        const double bound = field.K > 0.0
                                 ? init_norm * growth + (field.A / field.K) * (growth - 1.0)
                                 : init_norm + field.A * dt;
        report.max_violation_a = std::max(report.max_violation_a, inf_norm(traj.state(l)) - bound);
    }

    if (second != nullptr) {
        if (second->grid.L != g.L || second->grid.R != g.R ||
            second->grid.delta != g.delta || second->m != traj.m)
            throw ConfigError("growth_bound_check: trajectories live on different grids");
        double uv = 0.0;
        for (int l = -g.R; l <= 0; ++l)
            uv = std::max(uv, inf_norm_diff(traj.state(l), second->state(l)));
        double worst = -std::numeric_limits<double>::infinity();
        for (int l = 0; l <= g.L; ++l) {
            const double dt = g.time_at(l) - g.t0;
            const double bound = uv * std::exp(field.K * dt);
            worst = std::max(worst, inf_norm_diff(traj.state(l), second->state(l)) - bound);
        }
        report.max_violation_b = worst;
    }
    return report;
}

} // namespace ndde
