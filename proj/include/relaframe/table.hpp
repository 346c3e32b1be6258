// Copyright 2026 The Relaframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELAFRAME_TABLE_HPP_
#define RELAFRAME_TABLE_HPP_

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "relaframe/errors.hpp"

namespace relaframe {

using Cell = std::variant<std::int64_t, double, std::string>;

// 12 significant digits, trailing noise trimmed by %g. Fixed formatting so
// that identical runs emit byte-identical text.
inline std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

inline std::string format_cell(const Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell)) {
    return std::to_string(std::get<std::int64_t>(cell));
  }
  if (std::holds_alternative<double>(cell)) {
    return format_number(std::get<double>(cell));
  }
  return std::get<std::string>(cell);
}

// Columnar experiment output plus metadata. `meta` is stable (echoed config,
// artifact version) and appears in every format; `volatile_meta` (wall time)
// appears only where determinism is not required.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::pair<std::string, std::string>> volatile_meta;
  // (x, y) column-name pairs: one plotdata block per pair.
  std::vector<std::pair<std::string, std::string>> plot_pairs;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
      throw ShapeError("ResultTable: row width " + std::to_string(row.size()) +
                       " != column count " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
  }

  int column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return static_cast<int>(i);
    }
    throw ShapeError("ResultTable: no column named '" + name + "'");
  }

  std::vector<double> numeric_column(const std::string& name) const {
    const int idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
      const Cell& c = row[idx];
      if (std::holds_alternative<double>(c)) {
        out.push_back(std::get<double>(c));
      } else if (std::holds_alternative<std::int64_t>(c)) {
        out.push_back(double(std::get<std::int64_t>(c)));
      } else {
        throw ShapeError("ResultTable: column '" + name + "' is not numeric");
      }
    }
    return out;
  }
};

enum class EmitFormat { csv, json, plotdata };

inline EmitFormat emit_format_from_name(const std::string& name) {
  if (name == "csv") return EmitFormat::csv;
  if (name == "json") return EmitFormat::json;
  if (name == "plotdata") return EmitFormat::plotdata;
  throw ParseError("unknown output format '" + name +
                   "' (expected csv, json or plotdata)");
}

// Comment block with the stable metadata, then header row, then data rows.
// Comma separated, LF line endings, 12 significant digits.
inline std::string emit_csv(const ResultTable& table) {
  std::string out;
  for (const auto& [key, value] : table.meta) {
    out += "# " + key + " = " + value + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ",";
    out += table.columns[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_cell(row[i]);
    }
    out += "\n";
  }
  return out;
}

inline std::string emit_json(const ResultTable& table) {
  nlohmann::json j;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : table.meta) meta[key] = value;
  for (const auto& [key, value] : table.volatile_meta) meta[key] = value;
  j["meta"] = meta;
  j["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<std::int64_t>(cell)) {
        jrow.push_back(std::get<std::int64_t>(cell));
      } else if (std::holds_alternative<double>(cell)) {
        jrow.push_back(std::get<double>(cell));
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

// One whitespace-separated x/y block per declared plot pair, blocks
// separated by blank lines (gnuplot index style).
inline std::string emit_plotdata(const ResultTable& table) {
  std::string out;
  for (const auto& [key, value] : table.meta) {
    out += "# " + key + " = " + value + "\n";
  }
  if (table.plot_pairs.empty()) {
    out += "# no plot pairs declared\n";
    return out;
  }
  bool first = true;
  for (const auto& [x, y] : table.plot_pairs) {
    if (!first) out += "\n";
    first = false;
    out += "# curve " + y + " vs " + x + "\n";
    const auto xs = table.numeric_column(x);
    const auto ys = table.numeric_column(y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += format_number(xs[i]) + " " + format_number(ys[i]) + "\n";
    }
  }
  return out;
}

inline std::string emit(const ResultTable& table, EmitFormat format) {
  switch (format) {
    case EmitFormat::csv: return emit_csv(table);
    case EmitFormat::json: return emit_json(table);
    case EmitFormat::plotdata: return emit_plotdata(table);
  }
  throw ParseError("emit: unknown format");
}

// Inverse of emit_json for round-trip checks and downstream consumers.
inline ResultTable parse_table_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  ResultTable table;
  if (j.contains("meta")) {
    for (const auto& [key, value] : j["meta"].items()) {
      table.meta.emplace_back(key, value.get<std::string>());
    }
  }
  table.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& jrow : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& cell : jrow) {
      if (cell.is_number_integer()) {
        row.emplace_back(cell.get<std::int64_t>());
      } else if (cell.is_number_float()) {
        row.emplace_back(cell.get<double>());
      } else {
        row.emplace_back(cell.get<std::string>());
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace relaframe

#endif  // RELAFRAME_TABLE_HPP_
