#pragma once

#include <cstdint>

#include "lognsum/estimate.hpp"
#include "lognsum/model.hpp"
#include "lognsum/rng.hpp"

namespace lognsum {

/// Settings for the scale-adapted quadrature behind L_k(theta).
/// The integrand is standardized so that one node density serves every
/// theta; `nodes` is the trapezoid density per unit of the standardized
/// variable and `halfwidth` the truncation range. Refinement doubles the
/// density until successive passes agree to `tol` (relative).
struct QuadratureConfig {
    double c0 = 2.0;
    int nodes = 64;
    double halfwidth = 14.0;
    int max_refinements = 6;
    double tol = 1e-10;
};

/// kappa(theta) = log L_0(theta) and its first four derivatives, with the
/// standardized cumulants zeta_k = d_k / d2^(k/2).
struct CumulantSet {
    double theta = 0.0;
    double kappa = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double d4 = 0.0;
    double zeta3 = 0.0;
    double zeta4 = 0.0;
};

/// Closed-form approximations of L(theta): `plain` keeps only the leading
/// exponential exp{-(W^2 + 2W)/(2 sigma^2)} (the importance-sampling
/// normalizer); `corrected` divides by sqrt(1 + W) as well.
enum class AsymptoticForm { plain, corrected };

/// Strategies for estimating L(theta)^n from Monte Carlo draws.
enum class PowerStrategy { plain_power, bias_corrected, product };

/// L_k(theta) = E[X^k exp(-theta X)] for k = 0..4, by quadrature in the
/// standardized variable; relative accuracy is uniform in theta.
double laplace_k(const LognormalModel& m, double theta, int k, const QuadratureConfig& cfg = {});

/// log L_k(theta); survives magnitudes far below double underflow.
double log_laplace_k(const LognormalModel& m, double theta, int k, const QuadratureConfig& cfg = {});

/// kappa, kappa'...kappa'''' and standardized cumulants at theta > 0.
CumulantSet cumulants(const LognormalModel& m, double theta, const QuadratureConfig& cfg = {});

double laplace_asymptotic(const LognormalModel& m, double theta,
                          AsymptoticForm form = AsymptoticForm::corrected);
double log_laplace_asymptotic(const LognormalModel& m, double theta,
                              AsymptoticForm form = AsymptoticForm::corrected);

/// Closed-form approximation of L_k(theta) = E[X^k exp(-theta X)] built on
/// W(theta sigma^2 exp(k sigma^2)); reduces to the corrected form at k = 0.
double moment_asymptotic(const LognormalModel& m, double theta, int k);
double log_moment_asymptotic(const LognormalModel& m, double theta, int k);

/// Correction factor exp{-(W(theta sigma^2)/sigma^2) (e^t - 1 - t)} <= 1.
double tilt_correction(const LognormalModel& m, double theta, double t);

/// Single-draw unbiased estimate of L(theta): plain asymptotic form times
/// tilt_correction at Y ~ N(0, sigma^2).
double laplace_is_estimate(const LognormalModel& m, double theta, Rng& rng);
double log_laplace_is_estimate(const LognormalModel& m, double theta, Rng& rng);

/// Estimate L(theta)^n from R replications.
///   plain_power:    mean of R single draws, raised to the n-th power
///                   (delta-method variance n^2 l^(2n-2) t^2 / R);
///   bias_corrected: plain_power minus n(n-1) l^(n-2) t^2 / (2R);
///   product:        mean over R replications of products of n fresh draws
///                   (unbiased).
MonteCarloEstimate laplace_power_estimate(const LognormalModel& m, double theta, int n, long long R,
                                          PowerStrategy strategy, std::uint64_t seed, int threads = 0);

/// Exact mean of the control variate built from the quadratic exponent:
/// E[ L~(theta) exp{-(W/sigma^2) Y^2} ] = L~(theta) / sqrt(1 + 2W).
double control_variate_mean(const LognormalModel& m, double theta);

}  // namespace lognsum
