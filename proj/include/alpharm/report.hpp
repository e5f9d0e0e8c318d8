#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace alpharm {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// Column-labelled rows; the one shape both CSV and JSON output understand.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest round-trip decimal form of a double (to_chars).
std::string format_double(double v);

std::string to_csv(const Table& table);

/// Rows as an array of column-keyed objects.
nlohmann::ordered_json rows_json(const Table& table);

/// Writes atomically via temp file + rename; nullopt streams to stdout.
/// No partial output is left behind on error.
void write_output(const std::string& text, const std::optional<std::string>& path);

}  // namespace alpharm
