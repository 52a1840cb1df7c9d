#include "lognsum/cramer.hpp"

#include <cmath>
#include <string>

namespace lognsum {

double gamma_of_x(const LognormalModel& m, double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::domain_error("gamma_of_x: x must be positive and finite");
    }
    const double lx = std::log(x);
    const double disc = (1.0 - lx) * (1.0 - lx) + 2.0 * m.sigma2();
    return 0.5 * (-1.0 - lx + std::sqrt(disc));
}

double theta_tilde(const LognormalModel& m, double x) {
    const double g = gamma_of_x(m, x);
    if (!(g > 0.0)) {
        throw std::domain_error("theta_tilde: x not in the left tail (x >= exp(sigma^2/2))");
    }
    return g * std::exp(g) / m.sigma2();
}

SaddleSolve theta_solve(const LognormalModel& m, double x, const QuadratureConfig& cfg, double tol,
                        int max_iter) {
    SaddleSolve out;
    out.x = x;
    out.gamma_x = gamma_of_x(m, x);
    out.theta_tilde = theta_tilde(m, x);
    out.theta = out.theta_tilde;

    // kappa' and kappa'' alone drive the iteration; skip the higher moments.
    auto d1d2 = [&](double theta) {
        const double l0 = log_laplace_k(m, theta, 0, cfg);
        const double r1 = std::exp(log_laplace_k(m, theta, 1, cfg) - l0);
        const double r2 = std::exp(log_laplace_k(m, theta, 2, cfg) - l0);
        return std::pair<double, double>(-r1, r2 - r1 * r1);
    };

    auto [d1, d2] = d1d2(out.theta);
    out.residual = d1 + x;
    for (out.iterations = 0; out.iterations < max_iter; ) {
        if (std::fabs(out.residual) <= tol * x) return out;
        double step = out.residual / d2;
        while (out.theta - step <= 0.0) step *= 0.5;
        out.theta -= step;
        ++out.iterations;
        std::tie(d1, d2) = d1d2(out.theta);
        out.residual = d1 + x;
    }
    if (std::fabs(out.residual) <= tol * x) return out;
    throw ConvergenceError("theta_solve: no convergence after " + std::to_string(max_iter) +
                               " iterations (x=" + std::to_string(x) + ")",
                           out.theta);
}

std::vector<TailExpansionRow> tail_expansion_residuals(const LognormalModel& m,
                                                       const std::vector<double>& u_grid) {
    std::vector<TailExpansionRow> rows;
    rows.reserve(u_grid.size());
    const double s2 = m.sigma2();
    for (double u : u_grid) {
        if (!(u > 0.0) || u > 0.1) {
            throw std::domain_error("tail_expansion_residuals: grid must lie in (0, 0.1]");
        }
        const double al = -std::log(u);  // |log u|
        const double g = gamma_of_x(m, u);
        TailExpansionRow row;
        row.u = u;
        row.gamma_residual = (g - al - 0.5 * s2 / al) * al * al;
        row.theta_scale_residual = (u * theta_tilde(m, u) - al / s2 - 0.5) * al;
        row.conjugate_residual = ((g * g - al * al) / (2.0 * s2) - 0.5) * al;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lognsum
