#include "lognsum/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace lognsum {

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

MonteCarloEstimate reduce_log_values(std::span<const double> log_values, std::uint64_t seed) {
    const long long R = static_cast<long long>(log_values.size());
    if (R < 1) throw std::invalid_argument("reduce_log_values: empty sample");

    MonteCarloEstimate est;
    est.R = R;
    est.seed = seed;

    const double m = *std::max_element(log_values.begin(), log_values.end());
    if (!std::isfinite(m)) {
        est.value = 0.0;
        est.half_width = 0.0;
        est.log_value = -std::numeric_limits<double>::infinity();
        est.degenerate = true;
        return est;
    }

    std::vector<double> scaled(log_values.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = std::exp(log_values[i] - m);
    const double mean = pairwise_sum(scaled) / static_cast<double>(R);

    double sd = 0.0;
    if (R > 1) {
        std::vector<double> dev2(scaled.size());
        for (std::size_t i = 0; i < dev2.size(); ++i) {
            const double d = scaled[i] - mean;
            dev2[i] = d * d;
        }
        sd = std::sqrt(pairwise_sum(dev2) / static_cast<double>(R - 1));
    }

    est.log_value = m + std::log(mean);
    est.value = std::exp(est.log_value);
    est.half_width = std::exp(m) * 1.96 * sd / std::sqrt(static_cast<double>(R));
    return est;
}

void parallel_for(long long R, int threads, const std::function<void(long long)>& body) {
    int T = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (T < 1) T = 1;
    if (T == 1 || R < 1024) {
        for (long long r = 0; r < R; ++r) body(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (int t = 0; t < T; ++t) {
        const long long lo = R * t / T;
        const long long hi = R * (t + 1) / T;
        pool.emplace_back([&body, lo, hi] {
            for (long long r = lo; r < hi; ++r) body(r);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace lognsum
