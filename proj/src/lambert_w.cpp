#include "lognsum/lambert_w.hpp"

#include <cmath>
#include <stdexcept>

// Initial guesses follow Corless et al. (1996): log1p(a) near the origin,
// the 4.19 series log a - log log a + ... for large arguments. A few Halley
// steps then reach machine precision (cubic convergence).

namespace lognsum {

double lambert_w(double a) {
    if (!std::isfinite(a) || a < 0.0) {
        throw std::domain_error("lambert_w: argument must be finite and nonnegative");
    }
    if (a == 0.0) return 0.0;

    double w;
    if (a < 2.718281828459045) {
        w = std::log1p(a);
    } else {
        const double l1 = std::log(a);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1 + l2 * (l2 - 2.0) / (2.0 * l1 * l1);
    }

    for (int i = 0; i < 60; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - a;
        if (std::fabs(f) <= 4e-16 * a) break;
        const double w1 = w + 1.0;
        const double step = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1));
        w -= step;
        if (std::fabs(step) <= 1e-16 * (1.0 + std::fabs(w))) break;
    }
    return w;
}

}  // namespace lognsum
