#pragma once

#include <utility>

#include "lognsum/laplace.hpp"
#include "lognsum/model.hpp"
#include "lognsum/rng.hpp"

namespace lognsum {

/// Parameters of the tilted law F_theta and of its lognormal approximation
/// LN(mu_theta, sigma2_theta), all in terms of w = W(theta sigma^2).
struct TiltedParams {
    double theta = 0.0;
    double w = 0.0;
    double mu_theta = 0.0;
    double sigma2_theta = 0.0;

    TiltedParams(const LognormalModel& m, double theta);
};

struct SamplerReport {
    long long draws_accepted = 0;
    long long proposals_used = 0;
    double acceptance() const {
        return proposals_used > 0 ? static_cast<double>(draws_accepted) / proposals_used : 0.0;
    }
};

/// Moments of the approximating LN(mu_theta, sigma2_theta).
std::pair<double, double> tilted_mean_var_asymptotic(const LognormalModel& m, double theta);

/// Exact tilted mean L_1(theta) / L_0(theta).
double tilted_mean_exact(const LognormalModel& m, double theta, const QuadratureConfig& cfg = {});

/// Three closed-form approximations of the tilted CDF F_theta(x).
double approx_cdf_lognormal(const LognormalModel& m, double theta, double x);
double approx_cdf_gamma(const LognormalModel& m, double theta, double x);
double approx_cdf_normal(const LognormalModel& m, double theta, double x);

/// Exact draw from F_theta by thinning plain lognormal proposals with
/// probability exp(-theta Z); expected acceptance L(theta).
double sample_naive(const LognormalModel& m, double theta, Rng& rng, SamplerReport* report = nullptr);

/// Exact draw from F_theta with a Gamma(w/sigma^2 + 1, w/sigma^2) proposal,
/// w = W(theta sigma^2 e^{-sigma^2}); accepted draws are scaled by
/// w/(theta sigma^2). Acceptance improves as theta grows.
double sample_gamma_ar(const LognormalModel& m, double theta, Rng& rng, SamplerReport* report = nullptr);

/// Analytic acceptance probability of the Gamma-proposal sampler.
double acceptance_prob_gamma(const LognormalModel& m, double theta, const QuadratureConfig& cfg = {});

/// Draw via whichever sampler has the larger estimated acceptance.
double sample_auto(const LognormalModel& m, double theta, Rng& rng, SamplerReport* report = nullptr);

/// Per-theta sampler with the dispatch decision and proposal constants
/// precomputed; the workhorse behind the importance-sampling estimators.
class TiltedSampler {
  public:
    enum class Algo { naive, gamma_proposal };

    TiltedSampler(const LognormalModel& m, double theta, const QuadratureConfig& cfg = {});
    TiltedSampler(const LognormalModel& m, double theta, Algo forced);

    double draw(Rng& rng, SamplerReport* report = nullptr) const;
    Algo algo() const { return algo_; }

    /// Per-draw proposal budget before giving up (cost of the naive sampler
    /// is 1/L(theta), which explodes for large theta).
    static constexpr long long kMaxProposals = 1000000000LL;

  private:
    void init_gamma(double theta);
    double sigma_ = 0.0;
    double sigma2_ = 0.0;
    double theta_ = 0.0;
    Algo algo_ = Algo::naive;
    // Gamma-proposal constants.
    double shape_ = 0.0;
    double rate_ = 0.0;
    double scale_back_ = 0.0;
};

}  // namespace lognsum
