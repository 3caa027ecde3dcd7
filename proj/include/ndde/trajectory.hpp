#pragma once

#include <string>
#include <vector>

#include "ndde/grid.hpp"
#include "ndde/linalg.hpp"

namespace ndde {

/// Read access to the segment of a (possibly still growing) solution that a
/// vector field may consult at step l: every grid state up to and including
/// t_l, addressed by the relative offset s in [-tau, 0] of the delayed
/// argument y(t_l + s). Offsets landing on a grid point (within 1e-9 steps)
/// return the stored state exactly; anything else is interpolated linearly
/// between its two neighbours.
class HistoryView {
public:
    HistoryView(const TimeGrid& grid, const std::vector<Vec>& states, int current_l)
        : grid_(&grid), states_(&states), current_l_(current_l) {}

    /// State dimension m.
    [[nodiscard]] std::size_t dim() const { return states_->empty() ? 0 : (*states_)[0].size(); }

    /// Current time t_l of the step being advanced.
    [[nodiscard]] double time() const { return grid_->time_at(current_l_); }

    /// y(t_l + s) for s in [-tau, 0]; s = 0 is the current state.
    [[nodiscard]] Vec at_offset(double s) const;

    /// Stored state at grid index l (l in {-R, ..., current}).
    [[nodiscard]] const Vec& at_index(int l) const;

    [[nodiscard]] int current_index() const { return current_l_; }

private:
    const TimeGrid* grid_;
    const std::vector<Vec>* states_;
    int current_l_;
};

/// Complete solution record on the grid, history segment included. States
/// are immutable after construction and safe to share across threads.
struct Trajectory {
    TimeGrid grid;
    std::size_t m = 0;
    std::vector<Vec> states; // index l + grid.R, l in {-R, ..., L}

    [[nodiscard]] const Vec& state(int l) const { return states[static_cast<std::size_t>(l + grid.R)]; }
    [[nodiscard]] const Vec& final_state() const { return state(grid.L); }
};

/// y(t + s) read off a finished trajectory; t + s must lie in
/// [t0 - tau, t0 + L*delta] or a DomainError is thrown. Exact at grid
/// points, piecewise linear in between.
[[nodiscard]] Vec evaluate_delayed(const Trajectory& traj, double t, double s);

/// CSV with header `t,y1,...,ym`, one row per grid point from l = -R to L,
/// 17 significant digits per value.
[[nodiscard]] std::string trajectory_csv(const Trajectory& traj);

} // namespace ndde
