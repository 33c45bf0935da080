#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace infogeo::cli {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& flag,
                                      std::size_t expected) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty())
            throw std::invalid_argument(flag + ": expected a comma-separated " +
                                        "list of numbers, got '" + text + "'");
        values.push_back(value);
        pos = comma + 1;
    }
    if (expected != 0 && values.size() != expected)
        throw std::invalid_argument(flag + ": expected " +
                                    std::to_string(expected) + " values, got " +
                                    std::to_string(values.size()));
    return values;
}

namespace {

std::string render_cell(const ordered_json& value) {
    if (value.is_null()) return "nan";
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    return format_double(value.get<double>());
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<ordered_json>& rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        os << columns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) os << ',';
            os << render_cell(row.at(columns[i]));
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const ordered_json& config,
                const std::vector<ordered_json>& rows,
                const ordered_json& metadata) {
    ordered_json doc;
    doc["config"] = config;
    doc["data"] = rows;
    doc["metadata"] = metadata;
    os << doc.dump(2) << '\n';
}

}  // namespace infogeo::cli
