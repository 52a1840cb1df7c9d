#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lognsum {

/// Column-oriented result of a CLI command or reference table.
struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> meta;  // ordered key/value
};

/// Locale-independent formatting with 9 significant digits.
std::string format_double(double v);

std::string to_csv(const OutputTable& t);
std::string to_plain(const OutputTable& t);
std::string to_json(const OutputTable& t);

}  // namespace lognsum
