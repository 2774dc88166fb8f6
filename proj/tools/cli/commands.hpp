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

// Subcommands of the command-line tool. Each returns its tables; rendering
// and file output happen in run_cli.

#include <iosfwd>

#include "cli/config.hpp"
#include "cli/table.hpp"

namespace rindler_spin::cli {

// alpha,n,g_plus,g_minus,g_z,T1,T2
//   [,g_plus_numeric,g_minus_numeric,oracle_residual]   with --oracle
//   [,accel,T1_s,T2_s]                                   with --mu / --gap
CommandOutput cmd_rates(const RunConfig& cfg);

// tau,c_closed,c_numeric,tau0   (tau0 only on the final row)
CommandOutput cmd_curve(const RunConfig& cfg);

// alpha,tau,c   then   alpha,tau0,tau0_asymptotic
CommandOutput cmd_surface(const RunConfig& cfg);

// tau,t,z,rapidity,beta[,closed_form_residual]   in units with c = 1
CommandOutput cmd_worldline(const RunConfig& cfg);

// quantity,value,unit
CommandOutput cmd_constants(const RunConfig& cfg);

// Full CLI: parses argv, runs the subcommand, writes the output.
// Returns 0 on success, 2 for argument errors, 3 for numeric failures and
// 4 for I/O errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rindler_spin::cli
