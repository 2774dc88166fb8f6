// Copyright 2026 The rindler_spin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/table.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

namespace rindler_spin::cli {

namespace {

struct CsvCell {
  std::ostream& os;
  void operator()(std::monostate) const {}
  void operator()(double v) const { os << format_number(v); }
  void operator()(const std::string& s) const { os << s; }
};

nlohmann::ordered_json to_json(const Cell& cell) {
  if (const double* v = std::get_if<double>(&cell)) {
    return std::isfinite(*v) ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  }
  if (const std::string* s = std::get_if<std::string>(&cell)) return *s;
  return nullptr;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 8);
  return std::string(buf, res.ptr);
}

void write_csv(const CommandOutput& out, std::ostream& os) {
  for (std::size_t t = 0; t < out.tables.size(); ++t) {
    const Table& table = out.tables[t];
    if (t > 0) os << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << ',';
        std::visit(CsvCell{os}, row[c]);
      }
      os << '\n';
    }
  }
}

void write_json(const CommandOutput& out, std::uint64_t seed, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["command"] = out.command;
  doc["seed"] = seed;
  doc["tables"] = nlohmann::ordered_json::array();
  for (const Table& table : out.tables) {
    nlohmann::ordered_json t;
    t["name"] = table.name;
    t["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      auto r = nlohmann::ordered_json::array();
      for (const Cell& cell : row) r.push_back(to_json(cell));
      rows.push_back(std::move(r));
    }
    t["rows"] = std::move(rows);
    doc["tables"].push_back(std::move(t));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace rindler_spin::cli
