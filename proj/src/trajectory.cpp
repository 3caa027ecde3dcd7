#include "ndde/trajectory.hpp"

#include <cmath>
#include <sstream>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

namespace {

// Shared index resolution: position of time t on the grid in units of delta,
// snapped to the nearest integer when within 1e-9 steps. Both the solver and
// the network discretization go through this path, which is what makes their
// arithmetic identical.
struct GridPos {
    bool on_grid;
    int index;      // valid when on_grid
    double frac_lo; // lower neighbour index and weight otherwise
    int lo;
};

GridPos locate(const TimeGrid& grid, double t) {
    const double u = (t - grid.t0) / grid.delta;
    const double snapped = std::round(u);
    if (std::abs(u - snapped) <= 1e-9) {
        return GridPos{true, static_cast<int>(snapped), 0.0, 0};
    }
    const double fl = std::floor(u);
    return GridPos{false, 0, u - fl, static_cast<int>(fl)};
}

} // namespace

Vec HistoryView::at_offset(double s) const {
    const TimeGrid& g = *grid_;
    if (s > 1e-9 * g.delta)
        throw DomainError("HistoryView: positive offset requested (future state)");
    const double t = g.time_at(current_l_) + s;
    const GridPos pos = locate(g, t);
    if (pos.on_grid) {
        if (pos.index < -g.R || pos.index > current_l_)
            throw DomainError("HistoryView: offset outside covered range");
        return (*states_)[static_cast<std::size_t>(pos.index + g.R)];
    }
    const int lo = pos.lo;
    const int hi = lo + 1;
    if (lo < -g.R || hi > current_l_)
        throw DomainError("HistoryView: offset outside covered range");
    const Vec& a = (*states_)[static_cast<std::size_t>(lo + g.R)];
    const Vec& b = (*states_)[static_cast<std::size_t>(hi + g.R)];
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + pos.frac_lo * (b[i] - a[i]);
    return out;
}

const Vec& HistoryView::at_index(int l) const {
    if (l < -grid_->R || l > current_l_)
        throw DomainError("HistoryView: grid index outside covered range");
    return (*states_)[static_cast<std::size_t>(l + grid_->R)];
}

Vec evaluate_delayed(const Trajectory& traj, double t, double s) {
    const TimeGrid& g = traj.grid;
    const double target = t + s;
    const double lo = g.time_at(-g.R);
    const double hi = g.time_at(g.L);
    const double slack = 1e-9 * g.delta;
    if (target < lo - slack || target > hi + slack)
        throw DomainError("evaluate_delayed: time " + format_g17(target) +
                          " outside covered range [" + format_g17(lo) + ", " + format_g17(hi) + "]");
    HistoryView view(g, traj.states, g.L);
    return view.at_offset(target - g.time_at(g.L));
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << "t";
    for (std::size_t i = 1; i <= traj.m; ++i) out << ",y" << i;
    out << "\n";
    for (int l = -traj.grid.R; l <= traj.grid.L; ++l) {
        out << format_g17(traj.grid.time_at(l));
        for (double v : traj.state(l)) out << "," << format_g17(v);
        out << "\n";
    }
    return out.str();
}

} // namespace ndde
