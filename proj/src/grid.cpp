#include "ndde/grid.hpp"

#include <cmath>
#include <string>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

TimeGrid make_aligned_grid(double t0, double T, int L, double tau) {
    if (!(T > 0.0)) throw ConfigError("make_aligned_grid: horizon T must be positive");
    if (L < 1) throw ConfigError("make_aligned_grid: need at least one step");
    if (tau < 0.0) throw ConfigError("make_aligned_grid: negative delay");
    if (tau > T + 1e-12 * T)
        throw ConfigError("make_aligned_grid: delay exceeds horizon");

    const double r_exact = tau * static_cast<double>(L) / T;
    const double r_snap = std::round(r_exact);
    if (std::abs(r_exact - r_snap) > 1e-12 * std::max(1.0, r_exact))
        throw AlignmentError("make_aligned_grid: tau/delta = " + format_g17(r_exact) +
                             " is not an integer; delay not representable on the grid");

    TimeGrid g;
    g.t0 = t0;
    g.delta = T / static_cast<double>(L);
    g.L = L;
    g.R = static_cast<int>(r_snap);
    return g;
}

} // namespace ndde
