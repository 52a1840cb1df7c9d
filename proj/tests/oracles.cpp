#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lognsum/special_functions.hpp"

namespace oracle {

double lambert_w_bisect(double a, double tol) {
    if (a < 0.0) throw std::domain_error("lambert_w_bisect: a must be nonnegative");
    if (a == 0.0) return 0.0;
    auto f = [a](double w) { return w * std::exp(w) - a; };
    double lo = 0.0;
    double hi = 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    while (hi - lo > tol * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1)
           + adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, eps, 18);
}

double log_laplace_quadrature_window(double sigma, double theta, int k, double y_lo, double y_hi,
                                     double rel_tol) {
    const double s2 = sigma * sigma;
    auto h = [=](double y) { return theta * std::exp(y) + y * y / (2.0 * s2) - k * y; };
    auto dh = [=](double y) { return theta * std::exp(y) + y / s2 - k; };

    // h is strictly convex; bracket and bisect its stationary point.
    double lo = 0.0;
    while (dh(lo) >= 0.0) lo -= 1.0;
    double hi = lo + 1.0;
    while (dh(hi) <= 0.0) hi += 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (dh(mid) < 0.0 ? lo : hi) = mid;
    }
    const double y0 = 0.5 * (lo + hi);
    const double h0 = h(y0);

    auto g = [=](double y) { return std::exp(-(h(y) - h0)); };
    const double coarse = integrate(g, y_lo, y_hi, 1e-4);
    const double eps = std::max(rel_tol * coarse, 1e-16 * (y_hi - y_lo));
    const double value = integrate(g, y_lo, y_hi, eps);
    return -h0 + std::log(value) - 0.5 * std::log(lognsum::kTwoPi * s2);
}

double log_laplace_quadrature(double sigma, double theta, int k, double rel_tol) {
    const double s2 = sigma * sigma;
    auto dh = [=](double y) { return theta * std::exp(y) + y / s2 - k; };
    double lo = 0.0;
    while (dh(lo) >= 0.0) lo -= 1.0;
    double hi = lo + 1.0;
    while (dh(hi) <= 0.0) hi += 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (dh(mid) < 0.0 ? lo : hi) = mid;
    }
    const double y0 = 0.5 * (lo + hi);
    // exp(-(h(y)-h(y0))) <= exp(-(y-y0)^2/(2 sigma^2)), so +-12 sigma
    // truncates at the e^-72 level, far below the requested tolerances.
    return log_laplace_quadrature_window(sigma, theta, k, y0 - 12.0 * sigma, y0 + 12.0 * sigma,
                                         rel_tol);
}

namespace {

double ln_pdf(double sigma, double t) {
    if (t <= 0.0) return 0.0;
    const double lt = std::log(t);
    return std::exp(-lt * lt / (2.0 * sigma * sigma)) / (t * sigma * std::sqrt(lognsum::kTwoPi));
}

double ln_cdf(double sigma, double t) {
    if (t <= 0.0) return 0.0;
    return 0.5 * std::erfc(-std::log(t) / (sigma * std::sqrt(2.0)));
}

}  // namespace

double convolution_pdf(double sigma, double z, int grid_points) {
    // f2(z) = int_0^z f(t) f(z-t) dt, trapezoid; integrand vanishes at both ends.
    double sum = 0.0;
    const double step = z / grid_points;
    for (int i = 1; i < grid_points; ++i) {
        const double t = i * step;
        sum += ln_pdf(sigma, t) * ln_pdf(sigma, z - t);
    }
    return sum * step;
}

double convolution_cdf(double sigma, double z, int grid_points) {
    // F2(z) = int_0^z f(t) F(z-t) dt
    double sum = 0.0;
    const double step = z / grid_points;
    for (int i = 1; i < grid_points; ++i) {
        const double t = i * step;
        sum += ln_pdf(sigma, t) * ln_cdf(sigma, z - t);
    }
    return sum * step;
}

FiniteDifferenceCumulants fd_cumulants(const std::function<double(double)>& log_laplace,
                                       double theta, double step) {
    const double h = step;
    const double f0 = log_laplace(theta);
    const double f1 = log_laplace(theta + h);
    const double f2 = log_laplace(theta + 2.0 * h);
    const double fm1 = log_laplace(theta - h);
    const double fm2 = log_laplace(theta - 2.0 * h);
    FiniteDifferenceCumulants out;
    out.d1 = (-f2 + 8.0 * f1 - 8.0 * fm1 + fm2) / (12.0 * h);
    out.d2 = (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    out.d3 = (f2 - 2.0 * f1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
    out.d4 = (f2 - 4.0 * f1 + 6.0 * f0 - 4.0 * fm1 + fm2) / (h * h * h * h);
    return out;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        const double fa = static_cast<double>(i) / a.size();
        const double fb = static_cast<double>(j) / b.size();
        d = std::max(d, std::fabs(fa - fb));
    }
    return d;
}

double ks_statistic_vs_cdf(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double c = cdf(sample[i]);
        d = std::max(d, std::fabs(c - i / n));
        d = std::max(d, std::fabs((i + 1) / n - c));
    }
    return d;
}

double ks_p_value(double d, double n_effective) {
    const double t = d * std::sqrt(n_effective);
    double p = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = 2.0 * ((j % 2) ? 1.0 : -1.0) * std::exp(-2.0 * j * j * t * t);
        p += term;
        if (std::fabs(term) < 1e-12) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

double chi2_survival(double stat, int dof) {
    return lognsum::reg_gamma_q(0.5 * dof, 0.5 * stat);
}

}  // namespace oracle
