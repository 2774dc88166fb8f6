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

#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>

#include "rindler_spin/entanglement.hpp"
#include "rindler_spin/errors.hpp"
#include "rindler_spin/kinematics.hpp"

namespace rindler_spin::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPaperExponentSi = 3.8e61;  // m^2 s^-4

// Evaluates fn(0..n-1) concurrently; results come back in index order and
// the lowest-index exception, if any, is rethrown.
template <class F>
auto parallel_map(std::size_t n, const F& fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

double max_rate(const RateSet& g) { return std::max({g.g_minus, g.g_plus, 4.0 * g.g_z}); }

AccelerationProfile parse_profile(const std::string& spec, double& constant_accel) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto number = [&](const std::string& text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
      throw ArgumentError("profile '" + spec + "': bad number '" + text + "'");
    }
    return v;
  };
  constant_accel = 0.0;
  if (name == "zero" && args.empty()) return AccelerationProfile::zero();
  if (name == "constant" && !args.empty()) {
    const double a = number(args);
    if (!(a > 0.0)) throw ArgumentError("profile constant:a needs a > 0 (use 'zero' for free motion)");
    constant_accel = a;
    return AccelerationProfile::constant(a);
  }
  if (name == "sinusoid") {
    const auto comma = args.find(',');
    if (comma != std::string::npos) {
      return AccelerationProfile::sinusoid(number(args.substr(0, comma)), number(args.substr(comma + 1)));
    }
  }
  throw ArgumentError("unknown profile '" + spec +
                      "'; known profiles: constant:a, sinusoid:a0,omega, zero");
}

}  // namespace

CommandOutput cmd_rates(const RunConfig& cfg) {
  Table table{"rates", {"alpha", "n", "g_plus", "g_minus", "g_z", "T1", "T2"}, {}};
  if (cfg.oracle) {
    for (const char* c : {"g_plus_numeric", "g_minus_numeric", "oracle_residual"}) table.columns.push_back(c);
  }
  if (cfg.physical) {
    for (const char* c : {"accel", "T1_s", "T2_s"}) table.columns.push_back(c);
  }
  table.rows = parallel_map(cfg.alpha_grid.size(), [&](std::size_t i) {
    const double alpha = cfg.alpha_grid[i];
    const RateSet g = rates_closed(alpha);
    const RelaxationTimes t = relaxation_times(alpha);
    std::vector<Cell> row{alpha, g.n, g.g_plus, g.g_minus, g.g_z, t.t1, t.t2};
    if (cfg.oracle) {
      double plus = kNaN, minus = kNaN, residual = kNaN;
      try {
        const NumericRates num = rates_numeric(alpha);
        plus = num.rates.g_plus;
        minus = num.rates.g_minus;
        residual = std::max({rel_err(plus, g.g_plus), rel_err(minus, g.g_minus),
                             rel_err(num.rates.g_z, g.g_z)});
      } catch (const NumericError&) {
      } catch (const DomainError&) {
      }
      row.insert(row.end(), {plus, minus, residual});
    }
    if (cfg.physical) {
      const double g0 = gamma0(cfg.physical->mu, cfg.physical->gap);
      row.insert(row.end(), {accel_of(alpha, cfg.physical->gap), t.t1 / g0, t.t2 / g0});
    }
    return row;
  });
  return {"rates", {std::move(table)}};
}

CommandOutput cmd_curve(const RunConfig& cfg) {
  const double alpha = cfg.alpha_grid.at(0);
  LindbladSpec spec;
  spec.rates = rates_closed(alpha);
  spec.dt = std::min(1e-3, 0.05 / max_rate(spec.rates));
  const auto rho0 = density_from_coefficients(bell_state()).rho;
  const auto path = evolve_numeric_path(rho0, spec, cfg.tau_grid);
  const std::optional<double> tau0 =
      alpha > 0.0 ? std::optional<double>(disentanglement_time(alpha)) : std::nullopt;

  Table table{"curve", {"tau", "c_closed", "c_numeric", "tau0"}, {}};
  for (std::size_t i = 0; i < cfg.tau_grid.size(); ++i) {
    const double tau = cfg.tau_grid[i];
    std::vector<Cell> row{tau, concurrence_closed(alpha, tau), concurrence(path[i]), std::monostate{}};
    if (i + 1 == cfg.tau_grid.size() && tau0) row.back() = *tau0;
    table.rows.push_back(std::move(row));
  }
  return {"curve", {std::move(table)}};
}

CommandOutput cmd_surface(const RunConfig& cfg) {
  struct Slice {
    std::vector<double> c;
    std::optional<double> tau0;
  };
  const auto slices = parallel_map(cfg.alpha_grid.size(), [&](std::size_t i) {
    const double alpha = cfg.alpha_grid[i];
    Slice s;
    for (double tau : cfg.tau_grid) s.c.push_back(concurrence_closed(alpha, tau));
    if (alpha > 0.0) s.tau0 = disentanglement_time(alpha);
    return s;
  });

  Table surface{"concurrence", {"alpha", "tau", "c"}, {}};
  Table overlay{"disentanglement", {"alpha", "tau0", "tau0_asymptotic"}, {}};
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const double alpha = cfg.alpha_grid[i];
    for (std::size_t j = 0; j < cfg.tau_grid.size(); ++j) {
      surface.rows.push_back({alpha, cfg.tau_grid[j], slices[i].c[j]});
    }
    if (slices[i].tau0) {
      overlay.rows.push_back({alpha, *slices[i].tau0, tau0_asymptotic_scaled(alpha)});
    } else {
      overlay.rows.push_back({alpha, std::monostate{}, std::monostate{}});
    }
  }
  return {"surface", {std::move(surface), std::move(overlay)}};
}

CommandOutput cmd_worldline(const RunConfig& cfg) {
  double accel = 0.0;
  const AccelerationProfile profile = parse_profile(cfg.profile, accel);
  const auto events = worldline(profile, cfg.tau_grid, 1.0);
  Table table{"worldline", {"tau", "t", "z", "rapidity", "beta"}, {}};
  if (accel > 0.0) table.columns.push_back("closed_form_residual");
  for (const auto& e : events) {
    std::vector<Cell> row{e.tau, e.t, e.z, e.rapidity, e.beta};
    if (accel > 0.0) {
      const WorldlineEvent want = rindler_event(accel, e.tau, 1.0);
      row.push_back(std::max(rel_err(e.t, want.t), rel_err(e.z, want.z)));
    }
    table.rows.push_back(std::move(row));
  }
  return {"worldline", {std::move(table)}};
}

CommandOutput cmd_constants(const RunConfig& cfg) {
  if (!cfg.physical) throw ArgumentError("constants needs the physical parameters (--mu, --gap)");
  if (cfg.accel && cfg.target_t0) throw ArgumentError("--accel and --target-t0 are mutually exclusive");
  if (!cfg.accel && !cfg.target_t0) throw ArgumentError("constants needs --accel or --target-t0");
  const PhysicalConstants& k = kCodata2018;
  const double mu = cfg.physical->mu;
  const double gap = cfg.physical->gap;

  Table table{"constants", {"quantity", "value", "unit"}, {}};
  const auto add = [&](const char* name, double value, const char* unit) {
    table.rows.push_back({std::string(name), value, std::string(unit)});
  };

  double accel = 0.0;
  if (cfg.target_t0) {
    accel = accel_for_t0(*cfg.target_t0, k, mu);
    add("target_t0", *cfg.target_t0, "s");
  } else {
    accel = *cfg.accel;
    if (!(accel > 0.0)) throw ArgumentError("--accel must be > 0");
  }
  const double alpha = alpha_of(accel, gap, k);
  const double g0 = gamma0(mu, gap, k);
  const LabTime lab = t0_lab(accel, k, mu);
  const double big_k = lab_exponent_constant(k, mu);

  add("mu", mu, "erg/G");
  add("gap", gap, "erg");
  add("accel", accel, "cm/s^2");
  add("alpha", alpha, "1");
  add("gamma0", g0, "1/s");
  add("unruh_temperature", unruh_temperature(accel, k), "K");
  add("tau0", disentanglement_time(alpha) / g0, "s");
  add("tau0_asymptotic", tau0_asymptotic(accel, k, mu), "s");
  add("t0", lab.t0, "s");
  add("ln_t0", lab.log_t0, "ln(s)");
  add("t0_exponent", lab.exponent, "1");
  add("exponent_constant_cgs", big_k, "cm^2/s^4");
  add("exponent_constant_si", big_k * 1e-4, "m^2/s^4");
  add("exponent_constant_deviation", big_k * 1e-4 / kPaperExponentSi - 1.0, "1");
  if (cfg.target_t0) {
    add("roundtrip_rel_error", std::abs(std::exp(lab.log_t0 - std::log(*cfg.target_t0)) - 1.0), "1");
  }
  return {"constants", {std::move(table)}};
}

}  // namespace rindler_spin::cli
