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

#include "cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rindler_spin/errors.hpp"
#include "rindler_spin/params.hpp"

namespace rindler_spin::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string canonical_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string s = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ArgumentError(std::string(what) + ": not a finite number: '" + s + "'");
  }
  return value;
}

std::uint64_t parse_seed(std::string_view text) {
  const std::string s = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ArgumentError("seed: not a non-negative integer: '" + s + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view what) {
  const std::string s = trim(text);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ArgumentError(std::string(what) + ": expected true or false, got '" + s + "'");
}

// A higher layer that sets either form of an axis overrides both forms below it.
Settings merge(const Settings& low, const Settings& high) {
  Settings out = low;
  if (high.count("alpha") || high.count("alpha-grid")) {
    out.erase("alpha");
    out.erase("alpha-grid");
  }
  for (const auto& [key, value] : high) out[key] = value;
  return out;
}

void require_sorted(const std::vector<double>& grid, const char* name) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ArgumentError(std::string(name) + " grid must be strictly ascending");
    }
  }
}

void require_non_negative(const std::vector<double>& grid, const char* name) {
  for (double v : grid) {
    if (!(v >= 0.0)) throw ArgumentError(std::string(name) + " grid values must be >= 0");
  }
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {"alpha", "alpha-grid", "tau-grid", "oracle",
                                                "format", "out", "profile", "mu",
                                                "gap", "accel", "target-t0", "seed"};
  return keys;
}

Settings parse_config_text(std::string_view text, std::string_view origin) {
  Settings out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(number);
    if (eq == std::string::npos) throw ArgumentError(where + ": expected 'key = value'");
    const std::string key = canonical_key(trim(std::string_view(body).substr(0, eq)));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ArgumentError(where + ": unknown key '" + key + "'");
    }
    if (key == "alpha" && out.count("alpha-grid")) throw ArgumentError(where + ": alpha and alpha-grid both set");
    if (key == "alpha-grid" && out.count("alpha")) throw ArgumentError(where + ": alpha and alpha-grid both set");
    out[key] = value;
  }
  return out;
}

Settings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), path);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double ratio = std::log(hi / lo);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> parse_grid(std::string_view spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : spec) {
    if (ch == ':') {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(trim(current));
  const std::string where = "grid '" + std::string(spec) + "'";
  if (parts.size() != 3 && parts.size() != 4) throw ArgumentError(where + ": expected lo:hi:n[:log]");
  const double lo = parse_double(parts[0], where);
  const double hi = parse_double(parts[1], where);
  const double count = parse_double(parts[2], where);
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e7) {
    throw ArgumentError(where + ": n must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(count);
  if (n > 1 && !(hi > lo)) throw ArgumentError(where + ": hi must exceed lo");
  if (parts.size() == 4) {
    if (parts[3] != "log") throw ArgumentError(where + ": fourth field must be 'log'");
    if (!(lo > 0.0)) throw ArgumentError(where + ": log grid needs lo > 0");
    return logspace(lo, hi, n);
  }
  return linspace(lo, hi, n);
}

RunConfig resolve_config(std::string_view command, const Settings& file, const Settings& flags) {
  if (flags.count("alpha") && flags.count("alpha-grid")) {
    throw ArgumentError("--alpha and --alpha-grid are mutually exclusive");
  }
  const Settings s = merge(file, flags);
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = s.find(key);
    return it == s.end() ? nullptr : &it->second;
  };

  RunConfig cfg;
  if (command == "rates") {
    cfg.alpha_grid = logspace(0.05, 10.0, 200);
  } else if (command == "curve") {
    cfg.alpha_grid = {1.0};
    cfg.tau_grid = linspace(0.0, 5.0, 120);
  } else if (command == "surface") {
    cfg.alpha_grid = linspace(0.5, 5.0, 60);
    cfg.tau_grid = linspace(0.0, 5.0, 120);
  } else if (command == "worldline") {
    cfg.tau_grid = linspace(0.0, 10.0, 101);
    cfg.profile = "constant:1";
  } else if (command != "constants") {
    throw ArgumentError("unknown command '" + std::string(command) + "'");
  }

  if (const auto* v = get("alpha")) cfg.alpha_grid = {parse_double(*v, "alpha")};
  if (const auto* v = get("alpha-grid")) cfg.alpha_grid = parse_grid(*v);
  if (const auto* v = get("tau-grid")) cfg.tau_grid = parse_grid(*v);
  if (const auto* v = get("oracle")) cfg.oracle = parse_bool(*v, "oracle");
  if (const auto* v = get("format")) {
    if (*v == "csv") {
      cfg.output_format = OutputFormat::csv;
    } else if (*v == "json") {
      cfg.output_format = OutputFormat::json;
    } else {
      throw ArgumentError("format must be csv or json, got '" + *v + "'");
    }
  }
  if (const auto* v = get("out")) cfg.output_path = *v;
  if (const auto* v = get("profile")) cfg.profile = *v;
  if (const auto* v = get("seed")) cfg.seed = parse_seed(*v);
  if (const auto* v = get("accel")) cfg.accel = parse_double(*v, "accel");
  if (const auto* v = get("target-t0")) cfg.target_t0 = parse_double(*v, "target-t0");

  const auto* mu = get("mu");
  const auto* gap = get("gap");
  if (mu || gap || command == "constants") {
    Physical p;
    p.mu = mu ? parse_double(*mu, "mu") : kCodata2018.bohr_magneton;
    if (!(p.mu > 0.0)) throw ArgumentError("mu must be > 0");
    // Default splitting: g = 2 electron in a 1 gauss field.
    p.gap = gap ? parse_double(*gap, "gap") : 2.0 * p.mu;
    if (!(p.gap > 0.0)) throw ArgumentError("gap must be > 0");
    cfg.physical = p;
  }

  if (command != "constants" && command != "worldline") {
    if (cfg.alpha_grid.empty()) throw ArgumentError("alpha grid is empty");
    require_sorted(cfg.alpha_grid, "alpha");
    require_non_negative(cfg.alpha_grid, "alpha");
  }
  if (command == "curve" && cfg.alpha_grid.size() != 1) {
    throw ArgumentError("curve takes a single alpha (use surface for a sweep)");
  }
  if (command == "curve" || command == "surface" || command == "worldline") {
    if (cfg.tau_grid.empty()) throw ArgumentError("tau grid is empty");
    require_sorted(cfg.tau_grid, "tau");
    require_non_negative(cfg.tau_grid, "tau");
  }
  return cfg;
}

}  // namespace rindler_spin::cli
