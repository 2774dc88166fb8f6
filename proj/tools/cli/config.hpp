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

// Run configuration for the command-line front end.
//
// Settings come from three layers, highest priority first: command-line
// flags, a config file (`key = value` lines, `#` comments; path from
// --config or $RINDLER_SPIN_CONFIG), and per-command defaults.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rindler_spin::cli {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct Physical {
  double mu = 0.0;   // erg / G
  double gap = 0.0;  // erg
};

struct RunConfig {
  std::vector<double> alpha_grid;
  std::vector<double> tau_grid;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;  // empty writes to stdout
  std::optional<Physical> physical;
  std::optional<double> accel;      // cm / s^2
  std::optional<double> target_t0;  // s
  bool oracle = false;
  std::string profile;
  std::uint64_t seed = 0;
};

// Canonical keys: alpha, alpha-grid, tau-grid, oracle, format, out, profile,
// mu, gap, accel, target-t0, seed. Underscores are accepted for dashes.
using Settings = std::map<std::string, std::string>;

const std::vector<std::string>& known_keys();

// Parses `key = value` text. Throws ArgumentError naming the line for
// malformed lines and unknown keys.
Settings parse_config_text(std::string_view text, std::string_view origin);

// Reads and parses a config file. Throws IoError if it cannot be read.
Settings read_config_file(const std::string& path);

// "lo:hi:n" (linear) or "lo:hi:n:log" (logarithmic; lo > 0). n >= 1; a
// single point yields {lo}. Throws ArgumentError.
std::vector<double> parse_grid(std::string_view spec);

std::vector<double> linspace(double lo, double hi, std::size_t n);
std::vector<double> logspace(double lo, double hi, std::size_t n);

// Merges the layers and applies the defaults of `command`. A grid given at
// one layer replaces any grid for the same axis from lower layers. Throws
// ArgumentError for invalid values.
RunConfig resolve_config(std::string_view command, const Settings& file, const Settings& flags);

}  // namespace rindler_spin::cli
