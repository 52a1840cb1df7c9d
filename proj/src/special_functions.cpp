#include "lognsum/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lognsum {

double mills_ratio(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("mills_ratio: lambda must be positive");
    // Modified Lentz evaluation of 1/(lambda+ 1/(lambda+ 2/(lambda+ ...))).
    const double tiny = 1e-300;
    double f = lambda;
    if (f == 0.0) f = tiny;
    double c = f;
    double d = 0.0;
    for (int j = 1; j < 100000; ++j) {
        const double a = static_cast<double>(j);
        d = lambda + a * d;
        if (d == 0.0) d = tiny;
        c = lambda + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / f;
}

double scaled_normal_tail(double lambda) {
    if (!(lambda >= 0.0)) throw std::domain_error("scaled_normal_tail: lambda must be nonnegative");
    if (lambda == 0.0) return 0.0;
    if (lambda < 10.0) {
        return lambda * std::exp(0.5 * lambda * lambda) * normal_cdf(-lambda);
    }
    return lambda * mills_ratio(lambda) / kSqrtTwoPi;
}

namespace {

// Lower-gamma power series, valid (and fastest) for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < 100000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) {
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw std::runtime_error("reg_gamma_p: series failed to converge");
}

// Upper-gamma continued fraction, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) {
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw std::runtime_error("reg_gamma_q: continued fraction failed to converge");
}

}  // namespace

double reg_gamma_p(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw std::domain_error("reg_gamma_p: require a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double reg_gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw std::domain_error("reg_gamma_q: require a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

}  // namespace lognsum
