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

// Physical constants and the dimensionless parameterization.
//
// Everything physical is Gaussian-cgs: erg, cm, s, G, statC. Downstream
// modules work with the dimensionless acceleration alpha = a*hbar/(c*Delta),
// rates in units of the zero-acceleration spin-flip rate gamma0, and times
// in units of 1/gamma0.

namespace rindler_spin {

// CODATA 2018 values, Gaussian-cgs. The electron charge is stored as a
// magnitude; the sign is applied where the electron's charge enters.
struct PhysicalConstants {
  double hbar = 1.054571817e-27;            // erg s
  double c = 2.99792458e10;                 // cm / s (exact)
  double electron_charge = 4.803204713e-10; // statC, |e|
  double electron_mass = 9.1093837015e-28;  // g
  double bohr_magneton = 9.2740100783e-21;  // erg / G, e*hbar/(2 m c)
  double boltzmann = 1.380649e-16;          // erg / K (exact)

  // Throws DomainError unless every field is finite and strictly positive.
  void validate() const;
};

inline constexpr PhysicalConstants kCodata2018{};

// One physical operating point together with its dimensionless alpha.
// Construct through the factories so alpha, gap and accel stay consistent.
class OperatingPoint {
 public:
  static OperatingPoint from_accel(double accel, double gap, double mu,
                                   const PhysicalConstants& k = kCodata2018);
  static OperatingPoint from_alpha(double alpha, double gap, double mu,
                                   const PhysicalConstants& k = kCodata2018);

  double alpha() const noexcept { return alpha_; }
  double gap() const noexcept { return gap_; }
  double mu() const noexcept { return mu_; }
  double accel() const noexcept { return accel_; }

 private:
  OperatingPoint(double alpha, double gap, double mu, double accel)
      : alpha_(alpha), gap_(gap), mu_(mu), accel_(accel) {}

  double alpha_;
  double gap_;
  double mu_;
  double accel_;
};

// alpha = a*hbar / (c*Delta).
double alpha_of(double accel, double gap, const PhysicalConstants& k = kCodata2018);

// Inverse of alpha_of: a = alpha*c*Delta / hbar.
double accel_of(double alpha, double gap, const PhysicalConstants& k = kCodata2018);

// Zeeman splitting Delta = 2*mu*B_z.
double energy_gap(double mu, double b_z);

// IRF acceleration a = -(e/m)*E_z for the electron (e < 0). Positive E_z
// (field along -z in the lab) gives positive a.
double acceleration_from_field(double e_z, const PhysicalConstants& k = kCodata2018);

// Zero-acceleration spontaneous spin-flip rate (8/3) mu^2 Delta^3 / (hbar^4 c^3), in 1/s.
double gamma0(double mu, double gap, const PhysicalConstants& k = kCodata2018);

// Unruh temperature hbar*a / (2*pi*c*k_B), in kelvin.
double unruh_temperature(double accel, const PhysicalConstants& k = kCodata2018);

}  // namespace rindler_spin
