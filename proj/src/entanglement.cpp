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

#include "rindler_spin/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "rindler_spin/errors.hpp"

namespace rindler_spin {

namespace {

using std::numbers::pi;
constexpr double kLn3 = 1.0986122886681098;
constexpr double kClampFloor = -1e-10;
constexpr double kImagLimit = 1e-8;

// s2 (x) s2, which is real.
const Eigen::Matrix4d& spin_flip() {
  static const Eigen::Matrix4d m = pauli_product(2, 2).real();
  return m;
}

double wootters(std::array<double, 4> lambda) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0);
}

// 1/cosh overflows gracefully to 0 for large |x|.
double sech(double x) { return 1.0 / std::cosh(x); }

double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi,
                         double rel_tol) {
  for (int iter = 0; iter < 400 && (hi - lo) > rel_tol * std::abs(hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
  const Matrix4c& m = rho.matrix();
  const Matrix4c flip = spin_flip().cast<std::complex<double>>();
  const Matrix4c product = m * flip * m.conjugate() * flip;
  const Eigen::ComplexEigenSolver<Matrix4c> solver(product, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("concurrence: eigenvalue iteration failed", 0.0);
  }
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> mu = solver.eigenvalues()(i);
    if (std::abs(mu.imag()) > kImagLimit) {
      throw NumericError("concurrence: complex eigenvalue (invalid state?)", mu.imag());
    }
    if (mu.real() < kClampFloor) {
      throw NumericError("concurrence: negative eigenvalue (invalid state?)", mu.real());
    }
    lambda[i] = std::sqrt(std::max(mu.real(), 0.0));
  }
  return wootters(lambda);
}

double concurrence_real(const DensityMatrix& rho) {
  const Matrix4c& m = rho.matrix();
  if (m.imag().cwiseAbs().maxCoeff() >= 1e-12) {
    throw ValidationError("concurrence_real: density matrix has imaginary entries");
  }
  const Eigen::Matrix4d product = m.real() * spin_flip();
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(product, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("concurrence_real: eigenvalue iteration failed", 0.0);
  }
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) lambda[i] = std::abs(solver.eigenvalues()(i));
  return wootters(lambda);
}

RelaxationTimes relaxation_times(double alpha) {
  if (!(alpha > 0.0)) return {};
  const RateSet g = rates_closed(alpha);
  // g_minus + g_plus = (1 + alpha^2)(2n + 1) = (1 + alpha^2) coth(pi/alpha)
  const double gamma1 = g.g_minus + g.g_plus;
  const double gamma2 = 0.5 * gamma1 + 2.0 * g.g_z;
  return {1.0 / gamma1, 1.0 / gamma2};
}

double concurrence_closed(double alpha, double tau) {
  if (!(alpha >= 0.0)) throw DomainError("concurrence_closed: alpha must be >= 0");
  if (!(tau >= 0.0)) throw DomainError("concurrence_closed: tau must be >= 0");
  const RelaxationTimes t = relaxation_times(alpha);
  const double mixing = alpha > 0.0 ? sech(pi / alpha) : 0.0;
  const double c = std::exp(-tau / t.t2) + 0.5 * std::expm1(-tau / t.t1) * mixing;
  return std::max(c, 0.0);
}

double disentanglement_time(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("disentanglement_time: alpha must be > 0");
  const RelaxationTimes t = relaxation_times(alpha);
  const double gamma1 = 1.0 / t.t1;
  const double gamma2 = 1.0 / t.t2;
  // Root of exp(-G2 tau) = (1 - exp(-G1 tau)) sech(pi/alpha) / 2, taken in
  // logs so that sech(pi/alpha) may lie far below the double range.
  const double x = pi / alpha;
  const double log_half_sech = -x - std::log1p(std::exp(-2.0 * x));
  const auto f = [&](double tau) {
    return -gamma2 * tau - std::log(-std::expm1(-gamma1 * tau)) - log_half_sech;
  };
  double hi = 10.0 * kLn3 / gamma2;
  int expansions = 0;
  while (f(hi) > 0.0) {
    if (++expansions > 200 || !std::isfinite(hi)) {
      throw NumericError("disentanglement_time: bracket expansion failed", f(hi));
    }
    hi *= 2.0;
  }
  return bisect_decreasing(f, 0.0, hi, 1e-12);
}

ConcurrenceCurve concurrence_curve(double alpha, std::span<const double> tau_grid) {
  if (!std::is_sorted(tau_grid.begin(), tau_grid.end())) {
    throw ArgumentError("concurrence_curve: tau grid must be ascending");
  }
  if (!tau_grid.empty() && !(tau_grid.front() >= 0.0)) {
    throw ArgumentError("concurrence_curve: tau grid must be non-negative");
  }
  ConcurrenceCurve curve;
  curve.alpha = alpha;
  curve.samples.reserve(tau_grid.size());
  for (const double tau : tau_grid) curve.samples.push_back({tau, concurrence_closed(alpha, tau)});
  if (alpha > 0.0) curve.tau0 = disentanglement_time(alpha);
  return curve;
}

double tau0_asymptotic_scaled(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("tau0_asymptotic_scaled: alpha must be > 0");
  return pi * kLn3 / (alpha * alpha * alpha);
}

double tau0_asymptotic(double accel, const PhysicalConstants& k, double mu) {
  if (!(accel > 0.0)) throw DomainError("tau0_asymptotic: acceleration must be > 0");
  const double c3 = k.c * k.c * k.c;
  return (3.0 * pi * kLn3 / 8.0) * k.hbar * c3 * c3 / (mu * mu * accel * accel * accel);
}

double lab_exponent_constant(const PhysicalConstants& k, double mu) {
  if (!(mu > 0.0)) throw DomainError("lab_exponent_constant: mu must be > 0");
  const double c2 = k.c * k.c;
  return (3.0 * pi * kLn3 / 8.0) * k.hbar * c2 * c2 * k.c / (mu * mu);
}

LabTime t0_lab(double accel, const PhysicalConstants& k, double mu) {
  if (!(accel > 0.0)) throw DomainError("t0_lab: acceleration must be > 0");
  LabTime out;
  out.exponent = lab_exponent_constant(k, mu) / (accel * accel);
  out.log_t0 = std::log(k.c / (2.0 * accel)) + out.exponent;
  out.t0 = out.log_t0 < std::log(std::numeric_limits<double>::max())
               ? std::exp(out.log_t0)
               : std::numeric_limits<double>::infinity();
  return out;
}

double accel_for_t0(double target_t0, const PhysicalConstants& k, double mu) {
  if (!(target_t0 > 0.0)) throw DomainError("accel_for_t0: target time must be > 0");
  const double goal = std::log(target_t0);
  const double big_k = lab_exponent_constant(k, mu);
  // Decreasing in x = ln a.
  const auto g = [&](double x) {
    return std::log(k.c / 2.0) - x + big_k * std::exp(-2.0 * x) - goal;
  };
  double lo = 0.0, hi = 1.0;
  while (g(lo) <= 0.0) {
    lo -= 16.0;
    if (lo < -700.0) throw NumericError("accel_for_t0: no lower bracket", g(lo));
  }
  while (g(hi) > 0.0) {
    hi += 16.0;
    if (hi > 700.0) throw NumericError("accel_for_t0: no upper bracket", g(hi));
  }
  // Bisection on ln a to full double resolution.
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace rindler_spin
