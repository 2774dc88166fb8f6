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

#pragma once

// Tabular command output and its CSV / JSON renderings.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace rindler_spin::cli {

// Empty cell, number, or text (text only appears in key-value tables).
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CommandOutput {
  std::string command;
  std::vector<Table> tables;
};

// Scientific notation with 9 significant digits ("1.23456789e-03");
// "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double value);

// Header row per table, comma separated, tables separated by a blank line.
void write_csv(const CommandOutput& out, std::ostream& os);

// {"command": ..., "seed": ..., "tables": [{"name", "columns", "rows"}]}.
// Empty and non-finite cells become null.
void write_json(const CommandOutput& out, std::uint64_t seed, std::ostream& os);

}  // namespace rindler_spin::cli
