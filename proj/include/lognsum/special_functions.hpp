#pragma once

#include <cmath>

namespace lognsum {

inline constexpr double kTwoPi = 6.28318530717958647692528676656;
inline constexpr double kSqrtTwoPi = 2.50662827463100050241576528481;

inline double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / kSqrtTwoPi;
}

inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

/// Mills ratio Phi(-lambda)/phi(lambda) for lambda > 0, via the Laplace
/// continued fraction 1/(lambda + 1/(lambda + 2/(lambda + ...))).
double mills_ratio(double lambda);

/// B0(lambda) = lambda * exp(lambda^2/2) * Phi(-lambda), evaluated without
/// forming the overflowing/underflowing factors for large lambda.
double scaled_normal_tail(double lambda);

/// Regularized lower incomplete gamma P(a, x), series/continued-fraction
/// evaluation accurate to ~1e-14 for moderate a.
double reg_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double reg_gamma_q(double a, double x);

}  // namespace lognsum
