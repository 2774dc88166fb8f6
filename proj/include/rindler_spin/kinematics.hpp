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

// Proper-time worldlines of a particle accelerated along z.
//
// For an IRF acceleration a(tau) the rapidity is r(tau) = (1/c) int_0^tau a,
// and the lab coordinates follow from
//   t(tau) = int_0^tau cosh r,   z(tau) = z0 + c int_0^tau sinh r.
// z0 = c^2 / a(0) when a(0) > 0, so that constant acceleration reproduces the
// Rindler hyperbola exactly; otherwise z0 = 0.
//
// Units are whatever the caller uses consistently with `c` (cgs by default).

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rindler_spin/params.hpp"

namespace rindler_spin {

struct AccelerationProfile {
  std::function<double(double)> a_of_tau;  // must be safe to call concurrently
  std::string description;

  static AccelerationProfile constant(double a);
  static AccelerationProfile sinusoid(double a0, double omega);  // a0 * sin(omega * tau)
  static AccelerationProfile zero();
};

struct WorldlineEvent {
  double tau = 0.0;
  double t = 0.0;
  double z = 0.0;
  double rapidity = 0.0;
  double beta = 0.0;  // tanh(rapidity)
};

// Cumulative rapidity r(tau) by adaptive quadrature. Throws DomainError for
// tau < 0 and NumericError if the quadrature does not converge.
double rapidity(const AccelerationProfile& profile, double tau, double c = kCodata2018.c);

// Rapidity accumulated between two proper times.
double rapidity_between(const AccelerationProfile& profile, double tau_from, double tau_to,
                        double c = kCodata2018.c);

// Worldline events on an ascending grid starting at 0. Throws ArgumentError
// for an empty, unsorted or non-zero-based grid.
std::vector<WorldlineEvent> worldline(const AccelerationProfile& profile,
                                      std::span<const double> tau_grid,
                                      double c = kCodata2018.c);

// Closed-form constant-acceleration event:
//   t = (c/a) sinh(a tau / c),  z = (c^2/a) cosh(a tau / c).
// Throws DomainError for accel <= 0.
WorldlineEvent rindler_event(double accel, double tau, double c = kCodata2018.c);

using Vec3 = std::array<double, 3>;

// Thomas angular velocity gamma^2/(gamma+1) * (dbeta/dt x beta).
// Throws DomainError for |beta| >= 1.
Vec3 thomas_omega(const Vec3& beta, const Vec3& dbeta_dt);

}  // namespace rindler_spin
