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

#include "rindler_spin/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rindler_spin/errors.hpp"

namespace rindler_spin {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " +
                      std::to_string(value));
  }
}

}  // namespace

void PhysicalConstants::validate() const {
  require_positive(hbar, "hbar");
  require_positive(c, "c");
  require_positive(electron_charge, "electron_charge");
  require_positive(electron_mass, "electron_mass");
  require_positive(bohr_magneton, "bohr_magneton");
  require_positive(boltzmann, "boltzmann");
}

OperatingPoint OperatingPoint::from_accel(double accel, double gap, double mu,
                                          const PhysicalConstants& k) {
  require_positive(mu, "mu");
  const double alpha = alpha_of(accel, gap, k);
  return OperatingPoint(alpha, gap, mu, accel);
}

OperatingPoint OperatingPoint::from_alpha(double alpha, double gap, double mu,
                                          const PhysicalConstants& k) {
  require_positive(mu, "mu");
  const double accel = accel_of(alpha, gap, k);
  return OperatingPoint(alpha, gap, mu, accel);
}

double alpha_of(double accel, double gap, const PhysicalConstants& k) {
  require_positive(gap, "gap");
  if (!(accel >= 0.0) || !std::isfinite(accel)) {
    throw DomainError("acceleration must be finite and >= 0");
  }
  return accel * k.hbar / (k.c * gap);
}

double accel_of(double alpha, double gap, const PhysicalConstants& k) {
  require_positive(gap, "gap");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and >= 0");
  }
  return alpha * k.c * gap / k.hbar;
}

double energy_gap(double mu, double b_z) {
  require_positive(mu, "mu");
  require_positive(b_z, "B_z");
  return 2.0 * mu * b_z;
}

double acceleration_from_field(double e_z, const PhysicalConstants& k) {
  const double charge = -k.electron_charge;
  return -(charge / k.electron_mass) * e_z;
}

double gamma0(double mu, double gap, const PhysicalConstants& k) {
  require_positive(mu, "mu");
  require_positive(gap, "gap");
  const double hbar2 = k.hbar * k.hbar;
  return (8.0 / 3.0) * (mu * mu) * (gap * gap * gap) / (hbar2 * hbar2 * k.c * k.c * k.c);
}

double unruh_temperature(double accel, const PhysicalConstants& k) {
  if (!(accel >= 0.0)) {
    throw DomainError("acceleration must be >= 0");
  }
  return k.hbar * accel / (2.0 * std::numbers::pi * k.c * k.boltzmann);
}

}  // namespace rindler_spin
