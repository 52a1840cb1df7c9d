#pragma once

#include <vector>

#include "lognsum/laplace.hpp"
#include "lognsum/model.hpp"

namespace lognsum {

/// Result of solving kappa'(theta) = -x: the closed-form start theta_tilde,
/// the Newton-refined theta, and the final residual kappa'(theta) + x.
struct SaddleSolve {
    double x = 0.0;
    double gamma_x = 0.0;
    double theta_tilde = 0.0;
    double theta = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

/// Scaled residuals of the deep-left-tail expansions of gamma(u) and
/// theta_tilde(u), evaluated on a grid u in (0, 0.1]. Each residual is
/// multiplied by the power of |log u| at which it should stay bounded:
///   gamma_residual:     (gamma(u) - |log u| - sigma^2/(2|log u|)) * log^2 u
///   theta_scale_residual: (u theta_tilde(u) - |log u|/sigma^2 - 1/2) * |log u|
///   conjugate_residual: ((gamma^2 - log^2 u)/(2 sigma^2) - 1/2) * |log u|
struct TailExpansionRow {
    double u = 0.0;
    double gamma_residual = 0.0;
    double theta_scale_residual = 0.0;
    double conjugate_residual = 0.0;
};

/// Positive root of gamma^2 + (1 + log x) gamma - sigma^2/2 + log x = 0.
double gamma_of_x(const LognormalModel& m, double x);

/// Closed-form saddlepoint approximation theta_tilde(x) = gamma e^gamma / sigma^2.
/// Defined on the strict left tail x < exp(sigma^2/2); throws otherwise.
double theta_tilde(const LognormalModel& m, double x);

/// Newton-Raphson refinement of theta_tilde(x) to |kappa'(theta)+x| <= tol*x.
/// Steps that would leave theta <= 0 are halved. Throws ConvergenceError
/// (std::runtime_error) after max_iter steps without convergence.
SaddleSolve theta_solve(const LognormalModel& m, double x, const QuadratureConfig& cfg = {},
                        double tol = 1e-10, int max_iter = 25);

std::vector<TailExpansionRow> tail_expansion_residuals(const LognormalModel& m,
                                                       const std::vector<double>& u_grid);

class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double last)
        : std::runtime_error(what), last_iterate(last) {}
    double last_iterate;
};

}  // namespace lognsum
