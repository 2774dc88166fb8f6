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

// Magnetic-field Wightman functions along inertial and uniformly accelerated
// worldlines, and the Markovian spin-flip / dephasing rates built from them.
//
// Rates are dimensionless: g = gamma / gamma0, as functions of
// alpha = a*hbar/(c*Delta). Closed forms:
//   g_plus  = (1 + alpha^2) n
//   g_minus = (1 + alpha^2) (n + 1)
//   g_z     = alpha^3 / (4 pi)
// with the Bose occupation n = 1 / (exp(2 pi / alpha) - 1).

#include <complex>
#include <vector>

#include "rindler_spin/params.hpp"

namespace rindler_spin {

struct RateSet {
  double alpha = 0.0;
  double n = 0.0;
  double g_plus = 0.0;
  double g_minus = 0.0;
  double g_z = 0.0;
};

// Regulator schedule for the quadrature oracle. Epsilons and the window are
// in units of c/a (the dimensionless proper-time separation s' = a s / c).
struct EpsilonSchedule {
  std::vector<double> epsilons{0.2, 0.1, 0.05, 0.025};
  double window = 40.0;
  // Maximum accepted |difference of the last two extrapolants| / |value|.
  double residual_tol = 1e-3;

  // Throws ArgumentError unless epsilons are positive and strictly
  // decreasing (at least two of them) and window > 0.
  void validate() const;
};

// 4 hbar c / pi * interval_sq^-2, where interval_sq = c^2 dt^2 - dz^2 carries
// the i*epsilon shift. Throws DomainError for an exactly zero interval.
std::complex<double> wightman_flat(std::complex<double> interval_sq,
                                   const PhysicalConstants& k = kCodata2018);

// (hbar a^4 / (4 pi c^7)) sinh^-4[a (s - i eps) / (2c)] for proper-time
// separation s and regulator eps (seconds). Throws DomainError for
// accel <= 0 or s == eps == 0.
std::complex<double> wightman_rindler(double accel, double s, double eps,
                                      const PhysicalConstants& k = kCodata2018);

// 1 / (exp(2 pi / alpha) - 1); 0 for alpha <= 0 (the inertial vacuum).
double bose_occupation(double alpha);

// Closed-form rates. Throws DomainError for alpha < 0.
RateSet rates_closed(double alpha);

struct NumericRates {
  RateSet rates;
  // |difference of the last two Richardson extrapolants| / |value|.
  double residual_plus = 0.0;
  double residual_minus = 0.0;
  double residual_z = 0.0;
  // Largest adaptive-quadrature error estimate, relative to the value.
  double quadrature_error = 0.0;
  // |Im| / |Re| of the extrapolated integrals (zero in exact arithmetic).
  double imaginary_ratio = 0.0;
};

// Independent oracle: regulated real-axis quadrature of
//   g_(+/-) = 3 alpha^3 / (16 pi) int exp(-/+ i s'/alpha) sinh^-4((s' - i eps')/2) ds'
//   g_z     = 3 alpha^3 / (32 pi) int sinh^-4((s' - i eps')/2) ds'
// over |s'| <= window for each eps' in the schedule, followed by polynomial
// extrapolation eps' -> 0.
//
// Throws DomainError for alpha <= 0. Throws NumericError for alpha < 0.1
// (the phase oscillates too fast for the real-axis rule to stay accurate)
// and when an extrapolation residual exceeds schedule.residual_tol.
NumericRates rates_numeric(double alpha, const EpsilonSchedule& schedule = {});

inline constexpr double kMinOracleAlpha = 0.1;

}  // namespace rindler_spin
