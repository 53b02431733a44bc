#pragma once

// Result tables and their serialization: CSV with a commented config header,
// or JSON with the same structure. Formatting is deterministic so repeated
// runs of the same configuration are byte-identical.

#include <string>
#include <utility>
#include <vector>

#include "rindler/errors.hpp"

namespace rindler::output {

struct Row {
  std::vector<double> values;
  std::string status = "ok";  // or "error:<ErrorType>"
  // Text cells for the table's label columns, emitted before the numeric
  // cells; sized to Table::label_columns.
  std::vector<std::string> labels;
};

struct Table {
  // Key/value metadata, emitted sorted by key.
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  // Optional text columns (route names, kernel specs) leading each row.
  std::vector<std::string> label_columns;
};

// Shortest round-trip-exact decimal form (printf %.17g).
std::string format_number(double v);

// "# key = value" header lines (sorted), column header with a trailing
// status column, then one line per row.
std::string to_csv(const Table& t);

// {"config": {...}, "rows": [{column: value, ..., "status": ...}]} with
// config keys sorted and row keys in column order.
std::string to_json(const Table& t);

// Writes content to path, throwing ConfigError when the file cannot be
// created.
void write_file(const std::string& path, const std::string& content);

}  // namespace rindler::output
