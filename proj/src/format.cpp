#include "lognsum/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "json.hpp"

namespace lognsum {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

std::string to_csv(const OutputTable& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += t.columns[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_plain(const OutputTable& t) {
    std::vector<std::size_t> width(t.columns.size());
    std::vector<std::vector<std::string>> cells;
    cells.reserve(t.rows.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(format_double(row[c]));
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    std::string out;
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += "  ";
        out += pad(t.columns[c], width[c]);
    }
    out += '\n';
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) out += "  ";
            out += pad(line[c], width[c]);
        }
        out += '\n';
    }
    for (const auto& [k, v] : t.meta) out += "# " + k + "=" + v + "\n";
    return out;
}

std::string to_json(const OutputTable& t) {
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (double v : row) {
            if (std::isfinite(v)) {
                r.push_back(v);
            } else {
                r.push_back(nullptr);
            }
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    auto meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta) meta[k] = v;
    j["meta"] = std::move(meta);
    return j.dump(2) + "\n";
}

}  // namespace lognsum
