#pragma once

#include <cstdint>
#include <vector>

#include "lognsum/estimate.hpp"
#include "lognsum/laplace.hpp"
#include "lognsum/model.hpp"

namespace lognsum {

/// How the L(theta_tilde)^n factor of the tail estimator is obtained:
///   numeric:    quadrature value (deterministic, unbiased estimator);
///   is_product: product of n fresh single-draw estimates per replication
///               (unbiased, noisier);
///   is_single:  one single-draw estimate per replication raised to the
///               n-th power (biased upward for n > 1).
enum class LaplaceMode { numeric, is_product, is_single };

/// Weighting scheme of the density estimator:
///   sum_weight:           exp{theta S_n + n kappa} times the smoothed sum;
///   leave_one_out_weight: per-term weights exp{theta S_{n,-i} + (n-1) kappa}.
enum class PdfVariant { sum_weight, leave_one_out_weight };

/// Relative error and MSE decay of the tail estimator along a grid marching
/// into the deep tail; `mse_ratio` holds MSE / alpha^(2-epsilon) with alpha
/// the numeric-mode estimate.
struct EfficiencyDiagnostic {
    std::vector<double> x_grid;
    std::vector<double> rel_err;
    std::vector<double> mse_ratio;
    std::vector<bool> degenerate;
    double epsilon = 0.0;
};

/// Importance-sampling estimate of P(S_n <= n x): draws X_1..X_n from the
/// law tilted at theta_tilde(x) and averages
/// exp{theta_tilde S_n} L^n 1{S_n < n x} over R replications.
MonteCarloEstimate cdf_is_estimate(const LognormalModel& m, int n, double x, long long R,
                                   LaplaceMode mode, std::uint64_t seed,
                                   const QuadratureConfig& cfg = {}, int threads = 0);

/// Importance-sampling estimate of the density of S_n at n x via conditional
/// smoothing on the leave-one-out sums S_{n,-i}. Requires n >= 2.
MonteCarloEstimate pdf_is_estimate(const LognormalModel& m, int n, double x, long long R,
                                   PdfVariant variant, std::uint64_t seed,
                                   const QuadratureConfig& cfg = {}, int threads = 0);

/// Crude Monte Carlo baseline: untilted sampling, indicator average.
MonteCarloEstimate naive_estimate(const LognormalModel& m, int n, double x, long long R,
                                  std::uint64_t seed, int threads = 0);

/// Per grid point: is_single-mode estimate, its relative error, and the MSE
/// proxy (squared standard error plus squared deviation from the
/// numeric-mode estimate) scaled by alpha^(2-epsilon). Degenerate points are
/// flagged and the sweep continues.
EfficiencyDiagnostic efficiency_diagnostic(const LognormalModel& m, int n,
                                           const std::vector<double>& x_grid, long long R,
                                           double epsilon, std::uint64_t seed,
                                           const QuadratureConfig& cfg = {}, int threads = 0);

}  // namespace lognsum
