#pragma once

namespace ndde {

/// Uniform time grid t_l = t0 + l*delta for l in {-R, ..., L}. The forward
/// horizon is [t0, t0 + L*delta]; the R history points cover [t0 - tau, t0]
/// with tau = R*delta exactly.
struct TimeGrid {
    double t0 = 0.0;
    double delta = 0.0;
    int L = 0;
    int R = 0;

    [[nodiscard]] double time_at(int l) const { return t0 + l * delta; }
    [[nodiscard]] double horizon() const { return L * delta; }
    [[nodiscard]] double tau() const { return R * delta; }
};

/// Grid with delta = T/L whose history depth matches the delay tau.
/// R = tau*L/T must be an integer within 1e-12 (then snapped); otherwise
/// the delay is not representable on the grid and an AlignmentError is
/// thrown. tau = 0 yields R = 0.
[[nodiscard]] TimeGrid make_aligned_grid(double t0, double T, int L, double tau);

} // namespace ndde
