#include "rindler/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace rindler::output {

namespace {

std::vector<std::pair<std::string, std::string>> sorted_config(
    const Table& t) {
  auto cfg = t.config;
  std::sort(cfg.begin(), cfg.end());
  return cfg;
}

// RFC 4180 quoting, applied only when the cell needs it.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (const auto& [key, value] : sorted_config(t)) {
    out += "# " + key + " = " + value + "\n";
  }
  for (const auto& col : t.label_columns) {
    out += col;
    out += ',';
  }
  for (const auto& col : t.columns) {
    out += col;
    out += ',';
  }
  out += "status\n";
  for (const auto& row : t.rows) {
    for (const auto& cell : row.labels) {
      out += csv_escape(cell);
      out += ',';
    }
    for (double v : row.values) {
      out += format_number(v);
      out += ',';
    }
    out += row.status;
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : sorted_config(t)) {
    j["config"][key] = value;
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t c = 0;
         c < t.label_columns.size() && c < row.labels.size(); ++c) {
      r[t.label_columns[c]] = row.labels[c];
    }
    for (std::size_t c = 0; c < t.columns.size() && c < row.values.size();
         ++c) {
      r[t.columns[c]] = row.values[c];
    }
    r["status"] = row.status;
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot open for writing: " + path);
  f << content;
  f.flush();
  if (!f) throw ConfigError("write failed: " + path);
}

}  // namespace rindler::output
