#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace infogeo::cli {

using nlohmann::ordered_json;

// Full round-trip precision (17 significant digits) so cross-run diffs of the
// exported tables are meaningful.
std::string format_double(double v);

// Parses "0,1" style comma-separated doubles. flag names the offending option
// in the error; expected pins the count when nonzero. Throws
// std::invalid_argument on malformed input.
std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& flag,
                                      std::size_t expected = 0);

// Header row plus one line per row object, LF endings. Numbers render through
// format_double; nulls render as "nan"; strings and booleans render verbatim.
void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<ordered_json>& rows);

// One top-level object: {"config": ..., "data": [...], "metadata": ...}.
void write_json(std::ostream& os, const ordered_json& config,
                const std::vector<ordered_json>& rows,
                const ordered_json& metadata);

}  // namespace infogeo::cli
