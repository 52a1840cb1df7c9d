#include "lognsum/tables.hpp"

#include <cmath>
#include <stdexcept>

#include "lognsum/cramer.hpp"
#include "lognsum/montecarlo.hpp"
#include "lognsum/saddlepoint.hpp"
#include "lognsum/tilted.hpp"

namespace lognsum {

const std::vector<TableSpec>& reference_tables() {
    static const std::vector<TableSpec> tables = {
        // x grids are exact nx/n fractions; displays round them to 4 digits
        {"t1", TableKind::theta_solve, 1, 0.25, {1.0, 0.9, 0.8, 0.7, 0.5, 0.3, 0.1}},
        {"saddle-n4", TableKind::saddle_cdf, 4, 0.25, {0.65, 0.70, 0.75, 0.80, 0.85, 0.90}},
        {"saddle-n64", TableKind::saddle_cdf, 64, 0.25, {0.90, 0.91, 0.92, 0.93, 0.95, 0.97, 0.99}},
        {"cdf-n4", TableKind::cdf, 4, 0.25, {0.65, 0.70, 0.75, 0.80, 0.85, 0.90}},
        {"cdf-n64", TableKind::cdf, 64, 0.25,
         {59.0 / 64, 59.75 / 64, 60.5 / 64, 61.25 / 64, 62.0 / 64, 62.75 / 64}},
        {"cdf-n256", TableKind::cdf, 256, 0.25,
         {249.0 / 256, 251.0 / 256, 252.0 / 256, 253.0 / 256, 254.0 / 256, 1.0}},
        {"cdf-s0125", TableKind::cdf, 64, 0.125,
         {60.8 / 64, 61.2 / 64, 61.6 / 64, 62.0 / 64, 62.4 / 64, 62.8 / 64}},
        {"cdf-s0072", TableKind::cdf, 64, 0.072,
         {62.1 / 64, 62.3 / 64, 62.5 / 64, 62.7 / 64, 62.9 / 64, 63.1 / 64}},
        {"pdf-n4", TableKind::pdf, 4, 0.25, {0.65, 0.70, 0.75, 0.80, 0.85, 0.90}},
        {"pdf-n64", TableKind::pdf, 64, 0.25,
         {59.0 / 64, 59.75 / 64, 60.5 / 64, 61.25 / 64, 62.0 / 64, 62.75 / 64}},
        {"pdf-n256", TableKind::pdf, 256, 0.25,
         {249.0 / 256, 251.0 / 256, 252.0 / 256, 253.0 / 256, 254.0 / 256, 1.0}},
        {"pdf-s0125", TableKind::pdf, 64, 0.125,
         {60.8 / 64, 61.2 / 64, 61.6 / 64, 62.0 / 64, 62.4 / 64, 62.8 / 64}},
        {"pdf-s0072", TableKind::pdf, 64, 0.072,
         {62.1 / 64, 62.3 / 64, 62.5 / 64, 62.7 / 64, 62.9 / 64, 63.1 / 64}},
        {"laplace-n256", TableKind::laplace_power, 256, 0.25,
         {0.9705, 0.9010, 0.8322, 0.7642, 0.6971, 0.6307, 0.5651, 0.5002}},
    };
    return tables;
}

const TableSpec& find_table(const std::string& id) {
    for (const auto& t : reference_tables()) {
        if (t.id == id) return t;
    }
    throw std::invalid_argument("unknown table id: " + id);
}

OutputTable compute_table(const TableSpec& spec, long long R, std::uint64_t seed,
                          const QuadratureConfig& cfg, int threads) {
    const LognormalModel m(spec.sigma);
    OutputTable out;
    std::size_t row_index = 0;

    switch (spec.kind) {
        case TableKind::theta_solve: {
            out.columns = {"x", "mean_at_theta_tilde", "theta_tilde", "theta"};
            for (double x : spec.grid) {
                const SaddleSolve s = theta_solve(m, x, cfg);
                out.rows.push_back({x, tilted_mean_exact(m, s.theta_tilde, cfg), s.theta_tilde, s.theta});
            }
            break;
        }
        case TableKind::saddle_cdf: {
            out.columns = {"x", "theta", "cdf_order1", "cdf_order2"};
            for (double x : spec.grid) {
                const SaddlepointResult r = saddlepoint_eval(m, spec.n, x, cfg,
                                                             DensityCorrectionSign::minus,
                                                             CdfOrder2::reference);
                out.rows.push_back({x, r.theta_x, r.cdf1, r.cdf2});
            }
            break;
        }
        case TableKind::cdf: {
            out.columns = {"x", "nx", "theta_tilde", "cdf_saddle"};
            if (R > 0) {
                out.columns.push_back("mc");
                out.columns.push_back("mc_half_width");
            }
            for (double x : spec.grid) {
                const double tilt = theta_tilde(m, x);
                std::vector<double> row{x, spec.n * x, tilt, cdf_approx_at(m, spec.n, x, tilt, cfg)};
                if (R > 0) {
                    const MonteCarloEstimate e =
                        cdf_is_estimate(m, spec.n, x, R, LaplaceMode::numeric,
                                        derive_seed(seed, row_index), cfg, threads);
                    row.push_back(e.value);
                    row.push_back(e.half_width);
                }
                out.rows.push_back(std::move(row));
                ++row_index;
            }
            break;
        }
        case TableKind::pdf: {
            out.columns = {"x", "nx", "theta_tilde", "pdf_saddle"};
            if (R > 0) {
                out.columns.push_back("mc");
                out.columns.push_back("mc_half_width");
            }
            for (double x : spec.grid) {
                const double tilt = theta_tilde(m, x);
                std::vector<double> row{x, spec.n * x, tilt, density_approx_at(m, spec.n, x, tilt, cfg)};
                if (R > 0) {
                    const MonteCarloEstimate e =
                        pdf_is_estimate(m, spec.n, x, R, PdfVariant::leave_one_out_weight,
                                        derive_seed(seed, row_index), cfg, threads);
                    row.push_back(e.value);
                    row.push_back(e.half_width);
                }
                out.rows.push_back(std::move(row));
                ++row_index;
            }
            break;
        }
        case TableKind::laplace_power: {
            out.columns = {"theta", "asym_power"};
            if (R > 0) {
                for (const char* c : {"plain_power", "plain_half_width", "bias_corrected",
                                      "bias_corrected_half_width", "product", "product_half_width"}) {
                    out.columns.push_back(c);
                }
            }
            for (double theta : spec.grid) {
                std::vector<double> row{
                    theta, std::exp(spec.n * log_laplace_asymptotic(m, theta, AsymptoticForm::corrected))};
                if (R > 0) {
                    const MonteCarloEstimate plain = laplace_power_estimate(
                        m, theta, spec.n, R, PowerStrategy::plain_power,
                        derive_seed(seed, 3 * row_index), threads);
                    const MonteCarloEstimate bc = laplace_power_estimate(
                        m, theta, spec.n, R, PowerStrategy::bias_corrected,
                        derive_seed(seed, 3 * row_index), threads);
                    const MonteCarloEstimate prod = laplace_power_estimate(
                        m, theta, spec.n, R, PowerStrategy::product,
                        derive_seed(seed, 3 * row_index + 1), threads);
                    for (double v : {plain.value, plain.half_width, bc.value, bc.half_width,
                                     prod.value, prod.half_width}) {
                        row.push_back(v);
                    }
                }
                out.rows.push_back(std::move(row));
                ++row_index;
            }
            break;
        }
    }
    return out;
}

}  // namespace lognsum
