#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lognsum/special_functions.hpp"

namespace lognsum {

/// LN(0, sigma^2): the law of exp(Y) with Y ~ N(0, sigma^2).
struct LognormalModel {
    double sigma;

    explicit LognormalModel(double s) : sigma(s) {
        if (!std::isfinite(s) || !(s > 0.0)) {
            throw std::domain_error("LognormalModel: sigma must be positive and finite");
        }
    }
    double sigma2() const { return sigma * sigma; }
    double mean() const { return std::exp(0.5 * sigma * sigma); }
};

inline double lognormal_log_pdf(const LognormalModel& m, double x) {
    if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
    const double lx = std::log(x);
    return -lx * lx / (2.0 * m.sigma2()) - lx - std::log(m.sigma * kSqrtTwoPi);
}

inline double lognormal_pdf(const LognormalModel& m, double x) {
    return x > 0.0 ? std::exp(lognormal_log_pdf(m, x)) : 0.0;
}

inline double lognormal_cdf(const LognormalModel& m, double x) {
    if (!(x > 0.0)) return 0.0;
    return normal_cdf(std::log(x) / m.sigma);
}

}  // namespace lognsum
