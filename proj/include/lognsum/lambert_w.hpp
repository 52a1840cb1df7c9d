#pragma once

namespace lognsum {

/// Principal-branch Lambert W on [0, inf): the unique w >= 0 with
/// w * exp(w) = a. Halley iteration from a log-based initial guess;
/// residual is driven to machine level (|w e^w - a| <~ 1e-15 * a).
/// Throws std::domain_error for negative or non-finite arguments.
double lambert_w(double a);

}  // namespace lognsum
