#pragma once

// Deterministic tabular output: every sweep emits a Table that renders to CSV
// or JSON with fixed column order, 12-significant-digit floats, per-column
// provenance metadata and per-row quality flags.  Identical tables render to
// byte-identical text.

#include "aho/version.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace aho {

// 12 significant digits, with negative zero normalized and non-finite values
// spelled "inf" / "-inf" / "nan".
inline std::string fmt12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// One table cell: empty, integer, real, text or boolean.
struct Value {
  std::variant<std::monostate, long, double, std::string, bool> v;

  Value() = default;
  Value(long x) : v(x) {}
  Value(int x) : v(static_cast<long>(x)) {}
  Value(double x) : v(x) {}
  Value(bool x) : v(x) {}
  Value(const char* x) : v(std::string(x)) {}
  Value(std::string x) : v(std::move(x)) {}

  bool empty() const { return std::holds_alternative<std::monostate>(v); }
};

// Column provenance: "input" and "flag" for plumbing, and the three formula
// provenances "closed-form", "from-scratch" and "oracle" for computed values.
struct Column {
  std::string name;
  std::string provenance;
};

struct Table {
  std::string subcommand;
  std::string config_echo;
  std::vector<Column> columns;
  std::vector<std::vector<Value>> rows;

  void add_row(std::vector<Value> row) {
    if (row.size() != columns.size())
      throw std::logic_error("Table: row width does not match column count");
    rows.push_back(std::move(row));
  }
};

namespace detail {

inline std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

inline std::string json_cell(const Value& val) {
  if (val.empty()) return "null";
  if (const auto* i = std::get_if<long>(&val.v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&val.v)) {
    if (!std::isfinite(*d)) return json_quote(fmt12(*d));
    return fmt12(*d);
  }
  if (const auto* s = std::get_if<std::string>(&val.v)) return json_quote(*s);
  return std::get<bool>(val.v) ? "true" : "false";
}

inline std::string csv_cell(const Value& val) {
  if (val.empty()) return "";
  if (const auto* i = std::get_if<long>(&val.v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&val.v)) return fmt12(*d);
  if (const auto* s = std::get_if<std::string>(&val.v)) {
    if (s->find_first_of(",\"\n") == std::string::npos) return *s;
    std::string out = "\"";
    for (char c : *s) {
      out += c;
      if (c == '"') out += '"';
    }
    return out + "\"";
  }
  return std::get<bool>(val.v) ? "true" : "false";
}

}  // namespace detail

// {meta:{version, subcommand, config_echo, columns:[{name, provenance}]},
//  rows:[{column: value, ...}, ...]}
inline std::string to_json(const Table& table) {
  std::string out = "{\n  \"meta\": {\n";
  out += "    \"version\": " + detail::json_quote(kVersion) + ",\n";
  out += "    \"subcommand\": " + detail::json_quote(table.subcommand) + ",\n";
  out += "    \"config_echo\": " + detail::json_quote(table.config_echo) + ",\n";
  out += "    \"columns\": [";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ", ";
    out += "{\"name\": " + detail::json_quote(table.columns[c].name) +
           ", \"provenance\": " + detail::json_quote(table.columns[c].provenance) +
           "}";
  }
  out += "]\n  },\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += (r ? ",\n    {" : "\n    {");
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ", ";
      out += detail::json_quote(table.columns[c].name) + ": " +
             detail::json_cell(table.rows[r][c]);
    }
    out += "}";
  }
  out += table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

// Comment lines carry the metadata; the header row mirrors the JSON keys.
inline std::string to_csv(const Table& table) {
  std::string out = "# aho ";
  out += kVersion;
  out += " ";
  out += table.subcommand;
  out += "\n# config: " + table.config_echo + "\n# provenance:";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out += (c ? "," : " ") + table.columns[c].provenance;
  out += "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ",";
    out += table.columns[c].name;
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += detail::csv_cell(row[c]);
    }
    out += "\n";
  }
  return out;
}

inline std::string render(const Table& table, const std::string& format) {
  if (format == "csv") return to_csv(table);
  if (format == "json") return to_json(table);
  throw std::invalid_argument("render: format must be csv or json");
}

}  // namespace aho
