#include "lognsum/laplace.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lognsum/lambert_w.hpp"

namespace lognsum {

namespace {

void check_theta(double theta) {
    if (!std::isfinite(theta) || theta <= 0.0) {
        throw std::domain_error("laplace: theta must be positive and finite");
    }
}

void check_k(int k) {
    if (k < 0 || k > 4) throw std::domain_error("laplace: k must lie in 0..4");
}

void check_cfg(const QuadratureConfig& cfg) {
    if (cfg.nodes < 32) throw std::invalid_argument("QuadratureConfig: nodes must be >= 32");
    if (!(cfg.halfwidth >= 10.0)) throw std::invalid_argument("QuadratureConfig: halfwidth must be >= 10");
    if (!(cfg.c0 > 0.0)) throw std::invalid_argument("QuadratureConfig: c0 must be positive");
}

// Trapezoid over u in [-hw, hw] of exp(-(w/s2)(e^{tau u}-1-tau u) - (tau u)^2/(2 s2)),
// at `per_unit` nodes per unit. The integrand equals 1 at u = 0 and decays at
// least like exp(-|u|/2) by the choice of tau, so the fixed range loses nothing.
double standardized_integral(double w, double s2, double tau, double hw, int per_unit) {
    const long long half = static_cast<long long>(std::ceil(hw * per_unit));
    const double step = 1.0 / per_unit;
    const double wq = w / s2;
    double sum = 0.0;
    for (long long j = -half; j <= half; ++j) {
        const double z = tau * (step * j);
        const double h0 = wq * (std::expm1(z) - z) + z * z / (2.0 * s2);
        double g = std::exp(-h0);
        if (j == -half || j == half) g *= 0.5;
        sum += g;
    }
    return sum * step;
}

struct LogLaplaceParts {
    double w = 0.0;
    double tau = 0.0;
    double log_value = 0.0;
};

LogLaplaceParts log_laplace_parts(const LognormalModel& m, double theta, int k,
                                  const QuadratureConfig& cfg) {
    check_theta(theta);
    check_k(k);
    check_cfg(cfg);

    const double s2 = m.sigma2();
    const double w = lambert_w(theta * s2 * std::exp(k * s2));
    const double h_min = w * w / (2.0 * s2) + w / s2 - 0.5 * s2 * k * k;

    const double t1 = m.sigma / std::sqrt(1.0 + w);
    const double tau = (t1 <= cfg.c0) ? t1 : std::sqrt(w * w + 2.0 * w + s2) - w;

    int per_unit = cfg.nodes;
    double integral = standardized_integral(w, s2, tau, cfg.halfwidth, per_unit);
    for (int r = 0; r < cfg.max_refinements; ++r) {
        per_unit *= 2;
        const double refined = standardized_integral(w, s2, tau, cfg.halfwidth, per_unit);
        const double change = std::fabs(refined - integral);
        integral = refined;
        if (change <= cfg.tol * std::fabs(refined)) break;
    }

    LogLaplaceParts parts;
    parts.w = w;
    parts.tau = tau;
    parts.log_value = -h_min + std::log(tau * integral) - 0.5 * std::log(kTwoPi * s2);
    return parts;
}

}  // namespace

double log_laplace_k(const LognormalModel& m, double theta, int k, const QuadratureConfig& cfg) {
    return log_laplace_parts(m, theta, k, cfg).log_value;
}

double laplace_k(const LognormalModel& m, double theta, int k, const QuadratureConfig& cfg) {
    return std::exp(log_laplace_k(m, theta, k, cfg));
}

CumulantSet cumulants(const LognormalModel& m, double theta, const QuadratureConfig& cfg) {
    const double l0 = log_laplace_k(m, theta, 0, cfg);
    const double r1 = std::exp(log_laplace_k(m, theta, 1, cfg) - l0);
    const double r2 = std::exp(log_laplace_k(m, theta, 2, cfg) - l0);
    const double r3 = std::exp(log_laplace_k(m, theta, 3, cfg) - l0);
    const double r4 = std::exp(log_laplace_k(m, theta, 4, cfg) - l0);

    CumulantSet c;
    c.theta = theta;
    c.kappa = l0;
    c.d1 = -r1;
    c.d2 = r2 - r1 * r1;
    c.d3 = -r3 + 3.0 * r2 * r1 - 2.0 * r1 * r1 * r1;
    c.d4 = r4 - 4.0 * r3 * r1 - 3.0 * r2 * r2 + 12.0 * r2 * r1 * r1 - 6.0 * r1 * r1 * r1 * r1;
    c.zeta3 = c.d3 / std::pow(c.d2, 1.5);
    c.zeta4 = c.d4 / (c.d2 * c.d2);
    return c;
}

double log_laplace_asymptotic(const LognormalModel& m, double theta, AsymptoticForm form) {
    if (!std::isfinite(theta) || theta < 0.0) {
        throw std::domain_error("laplace_asymptotic: theta must be nonnegative and finite");
    }
    const double s2 = m.sigma2();
    const double w = lambert_w(theta * s2);
    double lv = -(w * w + 2.0 * w) / (2.0 * s2);
    if (form == AsymptoticForm::corrected) lv -= 0.5 * std::log1p(w);
    return lv;
}

double laplace_asymptotic(const LognormalModel& m, double theta, AsymptoticForm form) {
    return std::exp(log_laplace_asymptotic(m, theta, form));
}

double log_moment_asymptotic(const LognormalModel& m, double theta, int k) {
    check_k(k);
    if (!std::isfinite(theta) || theta < 0.0) {
        throw std::domain_error("moment_asymptotic: theta must be nonnegative and finite");
    }
    const double s2 = m.sigma2();
    const double wk = lambert_w(theta * s2 * std::exp(k * s2));
    return -(wk * wk + 2.0 * wk - static_cast<double>(k) * k * s2 * s2) / (2.0 * s2)
           - 0.5 * std::log1p(wk);
}

double moment_asymptotic(const LognormalModel& m, double theta, int k) {
    return std::exp(log_moment_asymptotic(m, theta, k));
}

double tilt_correction(const LognormalModel& m, double theta, double t) {
    const double w = lambert_w(theta * m.sigma2());
    return std::exp(-(w / m.sigma2()) * (std::expm1(t) - t));
}

double log_laplace_is_estimate(const LognormalModel& m, double theta, Rng& rng) {
    check_theta(theta);
    const double s2 = m.sigma2();
    const double w = lambert_w(theta * s2);
    const double y = m.sigma * rng.normal();
    return -(w * w + 2.0 * w) / (2.0 * s2) - (w / s2) * (std::expm1(y) - y);
}

double laplace_is_estimate(const LognormalModel& m, double theta, Rng& rng) {
    return std::exp(log_laplace_is_estimate(m, theta, rng));
}

MonteCarloEstimate laplace_power_estimate(const LognormalModel& m, double theta, int n, long long R,
                                          PowerStrategy strategy, std::uint64_t seed, int threads) {
    check_theta(theta);
    if (n < 1) throw std::invalid_argument("laplace_power_estimate: n must be >= 1");
    if (R < 2) throw std::invalid_argument("laplace_power_estimate: need at least two replications");

    if (strategy == PowerStrategy::product) {
        std::vector<double> logs(static_cast<std::size_t>(R));
        parallel_for(R, threads, [&](long long r) {
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += log_laplace_is_estimate(m, theta, rng);
            logs[static_cast<std::size_t>(r)] = acc;
        });
        return reduce_log_values(logs, seed);
    }

    // Single-draw sample for the mean/variance entering the power transforms.
    std::vector<double> draws(static_cast<std::size_t>(R));
    parallel_for(R, threads, [&](long long r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        draws[static_cast<std::size_t>(r)] = laplace_is_estimate(m, theta, rng);
    });
    const double mean = pairwise_sum(draws) / static_cast<double>(R);
    std::vector<double> dev2(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const double d = draws[i] - mean;
        dev2[i] = d * d;
    }
    const double t2 = pairwise_sum(dev2) / static_cast<double>(R - 1);

    const double log_mean = std::log(mean);
    const double log_main = n * log_mean;
    const double log_hw =
        std::log(1.96 * n * std::sqrt(t2 / static_cast<double>(R))) + (n - 1) * log_mean;

    MonteCarloEstimate est;
    est.R = R;
    est.seed = seed;
    est.half_width = std::exp(log_hw);
    if (strategy == PowerStrategy::plain_power || n < 2) {
        est.log_value = log_main;
    } else {
        const double log_corr = std::log(0.5 * n * (n - 1.0) * t2 / static_cast<double>(R))
                                + (n - 2) * log_mean;
        est.log_value = log_main + std::log1p(-std::exp(log_corr - log_main));
    }
    est.value = std::exp(est.log_value);
    return est;
}

double control_variate_mean(const LognormalModel& m, double theta) {
    if (!std::isfinite(theta) || theta < 0.0) {
        throw std::domain_error("control_variate_mean: theta must be nonnegative and finite");
    }
    const double s2 = m.sigma2();
    const double w = lambert_w(theta * s2);
    return std::exp(-(w * w + 2.0 * w) / (2.0 * s2) - 0.5 * std::log1p(2.0 * w));
}

}  // namespace lognsum
