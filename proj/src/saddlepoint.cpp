#include "lognsum/saddlepoint.hpp"

#include <cmath>
#include <stdexcept>

#include "lognsum/special_functions.hpp"

namespace lognsum {

namespace {

// sum_{j>=0} (-1)^j (2(k0+j)-1)!! / lambda^{2j}; the residue that survives
// once the polynomial part of lambda^p B0(lambda) sqrt(2pi) is subtracted.
double mills_tail(double lambda, int k0) {
    const double il2 = 1.0 / (lambda * lambda);
    double dfact = 1.0;  // (2k0-1)!!
    for (int j = 3; j <= 2 * k0 - 1; j += 2) dfact *= j;
    double power = 1.0;
    double sign = 1.0;
    double sum = 0.0;
    for (int j = 0; j < 40; ++j) {
        const double term = sign * dfact * power;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
        dfact *= 2 * (k0 + j) + 1;
        power *= il2;
        sign = -sign;
    }
    return sum;
}

}  // namespace

BValues b_functions(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("b_functions: lambda must be positive");
    BValues b;
    b.b0 = scaled_normal_tail(lambda);
    const double l2 = lambda * lambda;
    const double l3 = l2 * lambda;
    const double l4 = l2 * l2;
    const double l6 = l4 * l2;
    if (lambda < 20.0) {
        b.b3 = -(l3 * b.b0 - (l3 - lambda) / kSqrtTwoPi);
        b.b4 = l4 * b.b0 - (l4 - l2) / kSqrtTwoPi;
        b.b6 = l6 * b.b0 - (l6 - l4 + 3.0 * l2) / kSqrtTwoPi;
    } else {
        const double t2 = mills_tail(lambda, 2);  // 3 - 15/l^2 + 105/l^4 - ...
        const double t3 = mills_tail(lambda, 3);  // 15 - 105/l^2 + 945/l^4 - ...
        b.b3 = -t2 / (lambda * kSqrtTwoPi);
        b.b4 = t2 / kSqrtTwoPi;
        b.b6 = -t3 / kSqrtTwoPi;
    }
    return b;
}

SaddlepointResult saddlepoint_eval(const LognormalModel& m, long long n, double x,
                                   const QuadratureConfig& cfg, DensityCorrectionSign sign,
                                   CdfOrder2 convention) {
    if (n < 1) throw std::domain_error("saddlepoint_eval: n must be >= 1");
    const SaddleSolve solve = theta_solve(m, x, cfg);
    const CumulantSet cum = cumulants(m, solve.theta, cfg);

    SaddlepointResult r;
    r.n = n;
    r.x = x;
    r.theta_x = solve.theta;
    r.kappa_star = cum.kappa + x * solve.theta;
    r.lambda_n = solve.theta * std::sqrt(n * cum.d2);

    const double ln_rate = n * r.kappa_star;
    const double sqrt_n = std::sqrt(static_cast<double>(n));

    const BValues b = b_functions(r.lambda_n);
    const double lead = b.b0 / r.lambda_n;  // = e^{lambda^2/2} Phi(-lambda)
    const double scale6 = (convention == CdfOrder2::reference) ? 18.0 / 19.0 : 1.0;
    const double corr = (cum.zeta3 * b.b3 / (6.0 * sqrt_n) + cum.zeta4 * b.b4 / (24.0 * n)
                         + scale6 * cum.zeta3 * cum.zeta3 * b.b6 / (72.0 * n))
                        / r.lambda_n;
    r.log_cdf1 = ln_rate + std::log(lead);
    const double bracket2 = lead + corr;
    if (!(bracket2 > 0.0)) {
        throw ConvergenceError("saddlepoint_eval: second-order CDF bracket not positive", bracket2);
    }
    r.log_cdf2 = ln_rate + std::log(bracket2);
    r.cdf1 = std::exp(r.log_cdf1);
    r.cdf2 = std::exp(r.log_cdf2);

    r.log_pdf1 = ln_rate - 0.5 * std::log(kTwoPi * n * cum.d2);
    const double s = (sign == DensityCorrectionSign::minus) ? -1.0 : 1.0;
    const double pdf_bracket = 1.0 + (cum.zeta4 / 8.0 + s * 5.0 * cum.zeta3 * cum.zeta3 / 24.0) / n;
    if (!(pdf_bracket > 0.0)) {
        throw ConvergenceError("saddlepoint_eval: second-order density bracket not positive",
                               pdf_bracket);
    }
    r.log_pdf2 = r.log_pdf1 + std::log(pdf_bracket);
    r.pdf1 = std::exp(r.log_pdf1);
    r.pdf2 = std::exp(r.log_pdf2);
    return r;
}

double density_approx(const LognormalModel& m, long long n, double x, int order,
                      const QuadratureConfig& cfg, DensityCorrectionSign sign) {
    if (order != 1 && order != 2) throw std::domain_error("density_approx: order must be 1 or 2");
    const SaddlepointResult r = saddlepoint_eval(m, n, x, cfg, sign);
    return order == 1 ? r.pdf1 : r.pdf2;
}

double cdf_approx(const LognormalModel& m, long long n, double x, int order,
                  const QuadratureConfig& cfg, CdfOrder2 convention) {
    if (order != 1 && order != 2) throw std::domain_error("cdf_approx: order must be 1 or 2");
    const SaddlepointResult r = saddlepoint_eval(m, n, x, cfg, DensityCorrectionSign::minus, convention);
    return order == 1 ? r.cdf1 : r.cdf2;
}

namespace {

// kappa, kappa'' at a given tilt; shared by the closed-tilt first-order forms.
struct TiltLocal {
    double kappa;
    double d2;
};

TiltLocal tilt_local(const LognormalModel& m, double theta, const QuadratureConfig& cfg) {
    const double l0 = log_laplace_k(m, theta, 0, cfg);
    const double r1 = std::exp(log_laplace_k(m, theta, 1, cfg) - l0);
    const double r2 = std::exp(log_laplace_k(m, theta, 2, cfg) - l0);
    return {l0, r2 - r1 * r1};
}

}  // namespace

double cdf_approx_at(const LognormalModel& m, long long n, double x, double theta,
                     const QuadratureConfig& cfg) {
    if (n < 1) throw std::domain_error("cdf_approx_at: n must be >= 1");
    const TiltLocal t = tilt_local(m, theta, cfg);
    const double lambda = theta * std::sqrt(n * t.d2);
    const double rate = n * (t.kappa + x * theta);
    return std::exp(rate + std::log(scaled_normal_tail(lambda) / lambda));
}

double density_approx_at(const LognormalModel& m, long long n, double x, double theta,
                         const QuadratureConfig& cfg) {
    if (n < 1) throw std::domain_error("density_approx_at: n must be >= 1");
    const TiltLocal t = tilt_local(m, theta, cfg);
    const double rate = n * (t.kappa + x * theta);
    return std::exp(rate - 0.5 * std::log(kTwoPi * n * t.d2));
}

double logconcavity_bound(const LognormalModel& m) {
    return std::exp(1.0 - m.sigma2());
}

}  // namespace lognsum
