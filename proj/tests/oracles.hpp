#pragma once

// Independent reference implementations used only by the test suites.
// Everything here deliberately avoids the code paths under test: the Lambert
// W oracle bisects w e^w - a, and the transform oracle integrates in the
// untransformed variable with its own minimizer and an adaptive Simpson rule.

#include <functional>
#include <vector>

namespace oracle {

/// Bisection solve of w e^w = a on [0, hi]; hi is grown until it brackets.
double lambert_w_bisect(double a, double tol = 1e-14);

/// Adaptive Simpson integral of f over [a, b] to absolute tolerance eps.
double integrate(const std::function<double(double)>& f, double a, double b, double eps);

/// log E[X^k exp(-theta X)] for X ~ LN(0, sigma^2) by brute-force quadrature
/// of exp(-h(y)) in the untransformed variable, standardized around a
/// bisection-located minimum of h. Optional fixed integration window.
double log_laplace_quadrature(double sigma, double theta, int k, double rel_tol = 1e-13);
double log_laplace_quadrature_window(double sigma, double theta, int k, double y_lo, double y_hi,
                                     double rel_tol);

/// Density and CDF of X1 + X2 (i.i.d. LN(0, sigma^2)) on a trapezoid grid.
double convolution_pdf(double sigma, double z, int grid_points = 10000);
double convolution_cdf(double sigma, double z, int grid_points = 10000);

/// Central finite differences of log L(theta) (five-point stencil) giving
/// kappa', kappa'', kappa''', kappa'''' at theta.
struct FiniteDifferenceCumulants {
    double d1, d2, d3, d4;
};
FiniteDifferenceCumulants fd_cumulants(const std::function<double(double)>& log_laplace,
                                       double theta, double step);

/// Two-sided Kolmogorov-Smirnov machinery. `ks_p_value` is the asymptotic
/// Kolmogorov distribution tail Q(t) = 2 sum (-1)^{j-1} exp(-2 j^2 t^2).
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);
double ks_statistic_vs_cdf(std::vector<double> sample, const std::function<double(double)>& cdf);
double ks_p_value(double d, double n_effective);

/// Chi-square survival function Q(stat | dof).
double chi2_survival(double stat, int dof);

}  // namespace oracle
