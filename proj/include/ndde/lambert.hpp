#pragma once

namespace ndde {

/// Real Lambert W: solves w * exp(w) = x on the two real branches.
/// branch 0 needs x >= -1/e and returns w >= -1; branch -1 needs
/// -1/e <= x < 0 and returns w <= -1. Residual |w*e^w - x| is driven below
/// 1e-14 * max(1, |x|) by Halley iteration with a bisection fallback; near the
/// branch point a sqrt series is used directly (the derivative vanishes
/// there). Out-of-domain x raises DomainError.
double lambert_w(int branch, double x);

} // namespace ndde
