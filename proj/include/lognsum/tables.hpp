#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lognsum/format.hpp"
#include "lognsum/laplace.hpp"
#include "lognsum/model.hpp"

namespace lognsum {

enum class TableKind {
    theta_solve,    // x, exact tilted mean at theta_tilde, theta_tilde, theta
    saddle_cdf,     // x, theta, order-1 and order-2 CDF values
    cdf,            // x, nx, theta_tilde, order-1 CDF; MC columns when R > 0
    pdf,            // x, nx, theta_tilde, order-1 PDF; MC columns when R > 0
    laplace_power,  // theta, asymptotic L^n; estimator columns when R > 0
};

struct TableSpec {
    std::string id;
    TableKind kind;
    int n;
    double sigma;
    std::vector<double> grid;  // x values (theta values for laplace_power)
};

const std::vector<TableSpec>& reference_tables();
const TableSpec& find_table(const std::string& id);

/// Compute a reference table. R = 0 emits the deterministic columns only;
/// R > 0 appends the Monte Carlo columns, seeded per row from `seed`.
OutputTable compute_table(const TableSpec& spec, long long R, std::uint64_t seed,
                          const QuadratureConfig& cfg = {}, int threads = 0);

}  // namespace lognsum
