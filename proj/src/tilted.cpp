#include "lognsum/tilted.hpp"

#include <cmath>
#include <stdexcept>

#include "lognsum/lambert_w.hpp"
#include "lognsum/special_functions.hpp"

namespace lognsum {

namespace {
void check_theta_nonneg(double theta) {
    if (!std::isfinite(theta) || theta < 0.0) {
        throw std::domain_error("tilted: theta must be nonnegative and finite");
    }
}

void check_theta_pos(double theta) {
    if (!std::isfinite(theta) || theta <= 0.0) {
        throw std::domain_error("tilted: theta must be positive and finite");
    }
}
}  // namespace

TiltedParams::TiltedParams(const LognormalModel& m, double th) {
    check_theta_nonneg(th);
    theta = th;
    w = lambert_w(theta * m.sigma2());
    mu_theta = -w;
    sigma2_theta = m.sigma2() / (1.0 + w);
}

std::pair<double, double> tilted_mean_var_asymptotic(const LognormalModel& m, double theta) {
    const TiltedParams p(m, theta);
    const double mean = std::exp(p.mu_theta + 0.5 * p.sigma2_theta);
    const double var = std::exp(2.0 * p.mu_theta + p.sigma2_theta) * std::expm1(p.sigma2_theta);
    return {mean, var};
}

double tilted_mean_exact(const LognormalModel& m, double theta, const QuadratureConfig& cfg) {
    return std::exp(log_laplace_k(m, theta, 1, cfg) - log_laplace_k(m, theta, 0, cfg));
}

double approx_cdf_lognormal(const LognormalModel& m, double theta, double x) {
    check_theta_nonneg(theta);
    if (!(x > 0.0)) return 0.0;
    const TiltedParams p(m, theta);
    return normal_cdf((std::log(x) - p.mu_theta) / std::sqrt(p.sigma2_theta));
}

double approx_cdf_gamma(const LognormalModel& m, double theta, double x) {
    check_theta_pos(theta);
    if (!(x > 0.0)) return 0.0;
    const double s2 = m.sigma2();
    const double w = lambert_w(theta * s2 * std::exp(-s2));
    return reg_gamma_p(w / s2 + 1.0, theta * x);
}

double approx_cdf_normal(const LognormalModel& m, double theta, double x) {
    check_theta_pos(theta);
    const double s2 = m.sigma2();
    const double w = lambert_w(theta * s2 * std::exp(-s2));
    const double mean = (w + s2) / (theta * s2);
    const double sd = std::sqrt(w + s2) / (theta * m.sigma);
    return normal_cdf((x - mean) / sd);
}

TiltedSampler::TiltedSampler(const LognormalModel& m, double theta, const QuadratureConfig& cfg)
    : sigma_(m.sigma), sigma2_(m.sigma2()), theta_(theta) {
    check_theta_nonneg(theta);
    if (theta == 0.0) {
        algo_ = Algo::naive;
        return;
    }
    const double naive_acceptance = laplace_asymptotic(m, theta, AsymptoticForm::corrected);
    const double gamma_acceptance = acceptance_prob_gamma(m, theta, cfg);
    algo_ = (gamma_acceptance > naive_acceptance) ? Algo::gamma_proposal : Algo::naive;
    if (algo_ == Algo::gamma_proposal) init_gamma(theta);
}

TiltedSampler::TiltedSampler(const LognormalModel& m, double theta, Algo forced)
    : sigma_(m.sigma), sigma2_(m.sigma2()), theta_(theta), algo_(forced) {
    if (forced == Algo::gamma_proposal) {
        check_theta_pos(theta);
        init_gamma(theta);
    } else {
        check_theta_nonneg(theta);
    }
}

void TiltedSampler::init_gamma(double theta) {
    const double w = lambert_w(theta * sigma2_ * std::exp(-sigma2_));
    shape_ = w / sigma2_ + 1.0;
    rate_ = w / sigma2_;
    scale_back_ = w / (theta * sigma2_);
}

double TiltedSampler::draw(Rng& rng, SamplerReport* report) const {
    for (long long i = 0; i < kMaxProposals; ++i) {
        if (report) ++report->proposals_used;
        if (algo_ == Algo::naive) {
            const double z = std::exp(sigma_ * rng.normal());
            // log-space comparison; theta*z overflows nothing this way
            if (std::log(rng.uniform()) <= -theta_ * z) {
                if (report) ++report->draws_accepted;
                return z;
            }
        } else {
            const double z = rng.gamma(shape_) / rate_;
            const double lz = std::log(z);
            if (std::log(rng.uniform()) <= -lz * lz / (2.0 * sigma2_)) {
                if (report) ++report->draws_accepted;
                return scale_back_ * z;
            }
        }
    }
    throw std::runtime_error("TiltedSampler: proposal budget exhausted (acceptance too small)");
}

double sample_naive(const LognormalModel& m, double theta, Rng& rng, SamplerReport* report) {
    return TiltedSampler(m, theta, TiltedSampler::Algo::naive).draw(rng, report);
}

double sample_gamma_ar(const LognormalModel& m, double theta, Rng& rng, SamplerReport* report) {
    return TiltedSampler(m, theta, TiltedSampler::Algo::gamma_proposal).draw(rng, report);
}

double acceptance_prob_gamma(const LognormalModel& m, double theta, const QuadratureConfig& cfg) {
    check_theta_pos(theta);
    const double s2 = m.sigma2();
    const double alpha = lambert_w(theta * s2 * std::exp(-s2)) / s2;
    const double lp = (alpha + 1.0) * std::log(alpha) - std::lgamma(alpha + 1.0)
                      + 0.5 * std::log(kTwoPi) + std::log(m.sigma)
                      + 0.5 * s2 * (alpha + 1.0) * (alpha + 1.0)
                      + log_laplace_k(m, alpha * std::exp(s2 * (alpha + 1.0)), 0, cfg);
    return std::min(std::exp(lp), 1.0);
}

double sample_auto(const LognormalModel& m, double theta, Rng& rng, SamplerReport* report) {
    return TiltedSampler(m, theta).draw(rng, report);
}

}  // namespace lognsum
