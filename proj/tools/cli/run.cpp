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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "rindler_spin/errors.hpp"

namespace rindler_spin::cli {

namespace {

struct FlagSpec {
  const char* key;
  const char* help;
};

constexpr FlagSpec kValueFlags[] = {
    {"alpha", "single dimensionless acceleration alpha = a hbar / (c Delta)"},
    {"alpha-grid", "alpha grid lo:hi:n[:log]"},
    {"tau-grid", "proper-time grid lo:hi:n, in 1/gamma0 (worldline: units with c = 1)"},
    {"format", "csv or json"},
    {"out", "output file (default: stdout)"},
    {"profile", "worldline profile: constant:a, sinusoid:a0,omega or zero"},
    {"mu", "magnetic moment, erg/G (default: Bohr magneton)"},
    {"gap", "energy splitting, erg (default: 2 mu x 1 G)"},
    {"accel", "proper acceleration, cm/s^2"},
    {"target-t0", "solve for the acceleration giving this lab time, s"},
    {"seed", "integer seed recorded with the output"},
};

struct Subcommand {
  const char* name;
  const char* help;
  CommandOutput (*run)(const RunConfig&);
};

constexpr Subcommand kSubcommands[] = {
    {"rates", "transition and dephasing rates, T1 and T2 over an alpha grid", cmd_rates},
    {"curve", "concurrence of the Bell pair against proper time at one alpha", cmd_curve},
    {"surface", "concurrence over an (alpha, tau) grid with the disentanglement line", cmd_surface},
    {"worldline", "proper-time worldline of an acceleration profile (c = 1)", cmd_worldline},
    {"constants", "physical-unit timescales at one acceleration", cmd_constants},
};

void emit(const CommandOutput& result, const RunConfig& cfg, std::ostream& out) {
  std::ostringstream text;
  if (cfg.output_format == OutputFormat::json) {
    write_json(result, cfg.seed, text);
  } else {
    write_csv(result, text);
  }
  if (cfg.output_path.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file: " + cfg.output_path);
  file << text.str();
  file.flush();
  if (!file) throw IoError("cannot write output file: " + cfg.output_path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin entanglement decay of a uniformly accelerated electron", "rindler-spin"};
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::string config_path;
  bool oracle = false;
  std::vector<std::pair<CLI::App*, const Subcommand*>> subs;
  std::vector<std::pair<CLI::Option*, std::string>> options;
  for (const Subcommand& sc : kSubcommands) {
    CLI::App* sub = app.add_subcommand(sc.name, sc.help);
    for (const FlagSpec& f : kValueFlags) {
      options.emplace_back(sub->add_option(std::string("--") + f.key, values[f.key], f.help), f.key);
    }
    sub->add_option("--config", config_path, "config file of key = value lines");
    if (std::string_view(sc.name) == "rates") {
      sub->add_flag("--oracle", oracle, "add the quadrature-oracle columns");
    }
    subs.emplace_back(sub, &sc);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Settings flags;
    for (const auto& [opt, key] : options) {
      if (opt->count() > 0) flags[key] = values[key];
    }
    if (oracle) flags["oracle"] = "true";

    if (config_path.empty()) {
      if (const char* env = std::getenv("RINDLER_SPIN_CONFIG"); env && *env) config_path = env;
    }
    const Settings file = config_path.empty() ? Settings{} : read_config_file(config_path);

    for (const auto& [sub, sc] : subs) {
      if (!sub->parsed()) continue;
      const RunConfig cfg = resolve_config(sc->name, file, flags);
      emit(sc->run(cfg), cfg, out);
      return 0;
    }
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << " (residual " << e.residual() << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    // ArgumentError, ValidationError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rindler_spin::cli
