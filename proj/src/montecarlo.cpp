#include "lognsum/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lognsum/cramer.hpp"
#include "lognsum/lambert_w.hpp"
#include "lognsum/tilted.hpp"

namespace lognsum {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

MonteCarloEstimate cdf_is_estimate(const LognormalModel& m, int n, double x, long long R,
                                   LaplaceMode mode, std::uint64_t seed,
                                   const QuadratureConfig& cfg, int threads) {
    if (n < 1) throw std::invalid_argument("cdf_is_estimate: n must be >= 1");
    if (R < 1) throw std::invalid_argument("cdf_is_estimate: R must be >= 1");
    const double tilt = theta_tilde(m, x);
    const TiltedSampler sampler(m, tilt, cfg);

    const double s2 = m.sigma2();
    const double w = lambert_w(tilt * s2);
    const double log_plain = -(w * w + 2.0 * w) / (2.0 * s2);
    const double log_ln_numeric =
        (mode == LaplaceMode::numeric) ? n * log_laplace_k(m, tilt, 0, cfg) : 0.0;
    const double bound = n * x;

    std::vector<double> logv(static_cast<std::size_t>(R));
    parallel_for(R, threads, [&](long long r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += sampler.draw(rng);
        double log_ln = log_ln_numeric;
        if (mode == LaplaceMode::is_single) {
            const double y = m.sigma * rng.normal();
            log_ln = n * (log_plain - (w / s2) * (std::expm1(y) - y));
        } else if (mode == LaplaceMode::is_product) {
            log_ln = 0.0;
            for (int j = 0; j < n; ++j) {
                const double y = m.sigma * rng.normal();
                log_ln += log_plain - (w / s2) * (std::expm1(y) - y);
            }
        }
        logv[static_cast<std::size_t>(r)] = (s < bound) ? tilt * s + log_ln : kNegInf;
    });
    return reduce_log_values(logv, seed);
}

MonteCarloEstimate pdf_is_estimate(const LognormalModel& m, int n, double x, long long R,
                                   PdfVariant variant, std::uint64_t seed,
                                   const QuadratureConfig& cfg, int threads) {
    if (n < 2) throw std::invalid_argument("pdf_is_estimate: n must be >= 2");
    if (R < 1) throw std::invalid_argument("pdf_is_estimate: R must be >= 1");
    const double tilt = theta_tilde(m, x);
    const TiltedSampler sampler(m, tilt, cfg);
    const double kappa = log_laplace_k(m, tilt, 0, cfg);
    const double target = n * x;
    const double log_n = std::log(static_cast<double>(n));

    std::vector<double> logv(static_cast<std::size_t>(R));
    parallel_for(R, threads, [&](long long r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        std::vector<double> draws(static_cast<std::size_t>(n));
        double s = 0.0;
        for (auto& d : draws) {
            d = sampler.draw(rng);
            s += d;
        }
        // log of the per-term contributions, combined by shifted exponentials
        double max_e = kNegInf;
        std::vector<double> expo(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double s_minus = s - draws[static_cast<std::size_t>(i)];
            double e = lognormal_log_pdf(m, target - s_minus);
            if (variant == PdfVariant::leave_one_out_weight) {
                e += tilt * s_minus + (n - 1) * kappa;
            }
            expo[static_cast<std::size_t>(i)] = e;
            if (e > max_e) max_e = e;
        }
        if (max_e == kNegInf) {
            logv[static_cast<std::size_t>(r)] = kNegInf;
            return;
        }
        double acc = 0.0;
        for (double e : expo) acc += std::exp(e - max_e);
        double lv = max_e + std::log(acc) - log_n;
        if (variant == PdfVariant::sum_weight) lv += tilt * s + n * kappa;
        logv[static_cast<std::size_t>(r)] = lv;
    });
    return reduce_log_values(logv, seed);
}

MonteCarloEstimate naive_estimate(const LognormalModel& m, int n, double x, long long R,
                                  std::uint64_t seed, int threads) {
    if (n < 1) throw std::invalid_argument("naive_estimate: n must be >= 1");
    if (R < 1) throw std::invalid_argument("naive_estimate: R must be >= 1");
    const double bound = n * x;
    std::vector<double> logv(static_cast<std::size_t>(R));
    parallel_for(R, threads, [&](long long r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::exp(m.sigma * rng.normal());
        logv[static_cast<std::size_t>(r)] = (s < bound) ? 0.0 : kNegInf;
    });
    return reduce_log_values(logv, seed);
}

EfficiencyDiagnostic efficiency_diagnostic(const LognormalModel& m, int n,
                                           const std::vector<double>& x_grid, long long R,
                                           double epsilon, std::uint64_t seed,
                                           const QuadratureConfig& cfg, int threads) {
    if (x_grid.empty()) throw std::invalid_argument("efficiency_diagnostic: empty grid");
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        if (!(x_grid[i] < x_grid[i - 1])) {
            throw std::invalid_argument("efficiency_diagnostic: grid must be strictly decreasing");
        }
    }
    if (!(epsilon > 0.0)) throw std::invalid_argument("efficiency_diagnostic: epsilon must be positive");

    EfficiencyDiagnostic diag;
    diag.epsilon = epsilon;
    diag.x_grid = x_grid;
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        const MonteCarloEstimate ref =
            cdf_is_estimate(m, n, x, R, LaplaceMode::numeric, derive_seed(seed, 2 * i), cfg, threads);
        const MonteCarloEstimate est = cdf_is_estimate(m, n, x, R, LaplaceMode::is_single,
                                                       derive_seed(seed, 2 * i + 1), cfg, threads);
        const bool bad = est.degenerate || ref.degenerate;
        diag.degenerate.push_back(bad);
        if (bad) {
            diag.rel_err.push_back(std::numeric_limits<double>::infinity());
            diag.mse_ratio.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        diag.rel_err.push_back(est.half_width / est.value);
        const double se = est.half_width / 1.96;
        const double dev = est.value - ref.value;
        diag.mse_ratio.push_back((se * se + dev * dev) / std::pow(ref.value, 2.0 - epsilon));
    }
    return diag;
}

}  // namespace lognsum
