#pragma once

#include "lognsum/cramer.hpp"
#include "lognsum/laplace.hpp"
#include "lognsum/model.hpp"

namespace lognsum {

/// Stable values of B0(l) = l e^{l^2/2} Phi(-l) and the companions
///   B3(l) = -(l^3 B0 - (l^3 - l)/sqrt(2 pi))
///   B4(l) =   l^4 B0 - (l^4 - l^2)/sqrt(2 pi)
///   B6(l) =   l^6 B0 - (l^6 - l^4 + 3 l^2)/sqrt(2 pi)
/// For large l the cancelling differences are replaced by their series.
struct BValues {
    double b0 = 0.0;
    double b3 = 0.0;
    double b4 = 0.0;
    double b6 = 0.0;
};

BValues b_functions(double lambda);

/// Sign of the zeta3^2 term in the second-order density bracket
/// 1 + (zeta4/8 + s * 5 zeta3^2/24)/n. The default (minus) was selected by
/// comparison against the exact n = 1 density and an n = 2 convolution.
enum class DensityCorrectionSign { minus, plus };

/// Coefficient convention for the zeta3^2 B6 term of the second-order CDF
/// bracket. `standard` uses zeta3^2 B6 / (72 n) and is the more accurate
/// form against exact n = 1 and n = 2 values; `reference` scales that term
/// by 18/19, which is the convention the built-in reference tables (and the
/// golden files derived from them) were calibrated against.
enum class CdfOrder2 { standard, reference };

/// Everything the approximations need at one (n, x): the solved tilt,
/// the conjugate kappa*(x), lambda_n, and both orders of PDF/CDF values
/// (log forms stay finite when exp(n kappa*) underflows).
struct SaddlepointResult {
    long long n = 0;
    double x = 0.0;
    double theta_x = 0.0;
    double kappa_star = 0.0;
    double lambda_n = 0.0;
    double pdf1 = 0.0;
    double pdf2 = 0.0;
    double cdf1 = 0.0;
    double cdf2 = 0.0;
    double log_pdf1 = 0.0;
    double log_pdf2 = 0.0;
    double log_cdf1 = 0.0;
    double log_cdf2 = 0.0;
};

SaddlepointResult saddlepoint_eval(const LognormalModel& m, long long n, double x,
                                   const QuadratureConfig& cfg = {},
                                   DensityCorrectionSign sign = DensityCorrectionSign::minus,
                                   CdfOrder2 convention = CdfOrder2::standard);

/// Density approximation for S_n at nx; order 1 drops the cumulant bracket.
double density_approx(const LognormalModel& m, long long n, double x, int order,
                      const QuadratureConfig& cfg = {},
                      DensityCorrectionSign sign = DensityCorrectionSign::minus);

/// Left-tail CDF approximation for S_n at nx; order 1 keeps the B0 term only.
double cdf_approx(const LognormalModel& m, long long n, double x, int order,
                  const QuadratureConfig& cfg = {}, CdfOrder2 convention = CdfOrder2::standard);

/// First-order formulas evaluated at an arbitrary tilt instead of the solved
/// saddlepoint, with kappa*(x) replaced by kappa(theta) + x theta. Plugging
/// in theta_tilde(x) gives the cheap closed-tilt columns of the reference
/// tables; plugging in theta_solve(x).theta recovers cdf1/pdf1.
double cdf_approx_at(const LognormalModel& m, long long n, double x, double theta,
                     const QuadratureConfig& cfg = {});
double density_approx_at(const LognormalModel& m, long long n, double x, double theta,
                         const QuadratureConfig& cfg = {});

/// Upper end x = exp(1 - sigma^2) of the interval on which the lognormal
/// density is logconcave (validity annotation for the expansions).
double logconcavity_bound(const LognormalModel& m);

}  // namespace lognsum
