#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lognsum {

/// Point estimate with a 95% confidence half-width. `log_value` stays finite
/// far below the double underflow threshold; `value` is exp(log_value) where
/// representable. `degenerate` marks an all-zero indicator sample.
struct MonteCarloEstimate {
    double value = 0.0;
    double half_width = 0.0;
    double log_value = 0.0;
    long long R = 0;
    std::uint64_t seed = 0;
    bool degenerate = false;
};

/// Fixed-order pairwise sum; the reduction tree depends only on the length,
/// so results do not depend on how work was split across threads.
double pairwise_sum(std::span<const double> v);

/// Build a MonteCarloEstimate from per-replication log-values (-inf encodes
/// a zero contribution). Mean and sample variance are computed on values
/// rescaled by the maximum log, so magnitudes like exp(-250) survive intact.
MonteCarloEstimate reduce_log_values(std::span<const double> log_values, std::uint64_t seed);

/// Run body(r) for r in [0, R) on `threads` workers (0 = hardware default).
/// Bodies must only write state owned by replication r.
void parallel_for(long long R, int threads, const std::function<void(long long)>& body);

}  // namespace lognsum
