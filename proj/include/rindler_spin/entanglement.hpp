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

// Concurrence, relaxation times and disentanglement times for an initially
// maximally entangled pair with one accelerated spin.
//
// Dimensionless quantities use alpha = a*hbar/(c*Delta), time in 1/gamma0.

#include <optional>
#include <span>
#include <vector>

#include "rindler_spin/dynamics.hpp"
#include "rindler_spin/params.hpp"

namespace rindler_spin {

// Wootters concurrence from the eigenvalues of rho (s2 x s2) rho* (s2 x s2).
// Eigenvalues with real part in [-1e-10, 0) are clamped to 0. Throws
// NumericError if an eigenvalue has an imaginary part above 1e-8 or a real
// part below -1e-10 (rho is not a valid state).
double concurrence(const DensityMatrix& rho);

// Concurrence of a real density matrix from the absolute eigenvalues of
// rho (s2 x s2). Throws ValidationError if any entry has |Im| >= 1e-12.
double concurrence_real(const DensityMatrix& rho);

struct RelaxationTimes {
  double t1 = 1.0;  // population relaxation, 1/gamma0
  double t2 = 2.0;  // coherence decay, 1/gamma0
};

// 1/T1 = (1 + alpha^2) coth(pi/alpha)
// 1/T2 = [(1 + alpha^2) coth(pi/alpha) + alpha^3/pi] / 2
// For alpha <= 0 returns the inertial limit t1 = 1, t2 = 2.
RelaxationTimes relaxation_times(double alpha);

// Concurrence of the evolved Bell state:
//   max{exp(-tau/T2) - (1 - exp(-tau/T1)) sech(pi/alpha) / 2, 0}.
// alpha = 0 is the inertial limit. Throws DomainError for alpha < 0 or tau < 0.
double concurrence_closed(double alpha, double tau);

// The unique tau0 > 0 where concurrence_closed first reaches zero, by
// bisection to 1e-12 relative. Throws DomainError for alpha <= 0 and
// NumericError if no sign change is found.
double disentanglement_time(double alpha);

struct ConcurrenceSample {
  double tau = 0.0;
  double c = 0.0;
};

struct ConcurrenceCurve {
  double alpha = 0.0;
  std::vector<ConcurrenceSample> samples;
  std::optional<double> tau0;  // absent in the inertial limit alpha = 0
};

// Closed-form concurrence sampled on tau_grid, which must be ascending and
// non-negative (ArgumentError otherwise).
ConcurrenceCurve concurrence_curve(double alpha, std::span<const double> tau_grid);

// Large-alpha asymptote of disentanglement_time in units of 1/gamma0:
// pi ln 3 / alpha^3.
double tau0_asymptotic_scaled(double alpha);

// Large-alpha proper disentanglement time in seconds:
// (3 pi ln3 / 8) hbar c^6 / (mu^2 a^3). Throws DomainError for accel <= 0.
double tau0_asymptotic(double accel, const PhysicalConstants& k, double mu);

// (3 pi ln3 / 8) hbar c^5 / mu^2 in cm^2 s^-4.
double lab_exponent_constant(const PhysicalConstants& k, double mu);

struct LabTime {
  double t0 = 0.0;        // seconds; +inf when exp overflows
  double exponent = 0.0;  // log(t0 * 2a / c) = lab_exponent_constant / a^2
  double log_t0 = 0.0;    // natural log of t0 in seconds
};

// Lab-frame disentanglement time t0 = (c / 2a) exp(K / a^2) with
// K = lab_exponent_constant. Throws DomainError for accel <= 0.
LabTime t0_lab(double accel, const PhysicalConstants& k, double mu);

// Acceleration (cm/s^2) at which t0_lab equals target_t0 seconds, by
// bisection on log(a). Throws DomainError for target_t0 <= 0 and
// NumericError if no bracket is found.
double accel_for_t0(double target_t0, const PhysicalConstants& k, double mu);

}  // namespace rindler_spin
