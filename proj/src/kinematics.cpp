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

#include "rindler_spin/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "rindler_spin/errors.hpp"
#include "rindler_spin/quadrature.hpp"

namespace rindler_spin {

namespace {

constexpr double kRelTol = 1e-13;
constexpr std::size_t kRapidityKnots = 1024;

quad::Options tight() {
  quad::Options opt;
  opt.rel_tol = kRelTol;
  return opt;
}

// Rapidity on a uniform knot grid over [0, tau_max], with a fixed 15-point
// Kronrod panel from the nearest knot below for off-knot evaluations. This
// keeps the nested integral t(tau) = int cosh r(tau) linear in the grid size.
class RapidityCache {
 public:
  RapidityCache(const AccelerationProfile& profile, double tau_max, double c)
      : profile_(profile), c_(c) {
    knots_.push_back(0.0);
    if (tau_max <= 0.0) return;
    step_ = tau_max / static_cast<double>(kRapidityKnots);
    double r = 0.0;
    for (std::size_t k = 0; k < kRapidityKnots; ++k) {
      r += rapidity_between(profile_, step_ * k, step_ * (k + 1), c_);
      knots_.push_back(r);
    }
  }

  double operator()(double tau) const {
    if (step_ == 0.0) return 0.0;
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(tau / step_), kRapidityKnots - 1);
    const double from = step_ * static_cast<double>(k);
    if (tau == from) return knots_[k];
    const auto accel = [&](double s) { return profile_.a_of_tau(s) / c_; };
    return knots_[k] + quad::gauss_kronrod15(accel, from, tau).kronrod;
  }

 private:
  const AccelerationProfile& profile_;
  double c_;
  double step_ = 0.0;
  std::vector<double> knots_;
};

}  // namespace

AccelerationProfile AccelerationProfile::constant(double a) {
  std::ostringstream label;
  label << "constant:" << a;
  return {[a](double) { return a; }, label.str()};
}

AccelerationProfile AccelerationProfile::sinusoid(double a0, double omega) {
  std::ostringstream label;
  label << "sinusoid:" << a0 << "," << omega;
  return {[a0, omega](double tau) { return a0 * std::sin(omega * tau); }, label.str()};
}

AccelerationProfile AccelerationProfile::zero() {
  return {[](double) { return 0.0; }, "zero"};
}

double rapidity_between(const AccelerationProfile& profile, double tau_from, double tau_to,
                        double c) {
  if (tau_to == tau_from) return 0.0;
  const auto accel = [&](double s) { return profile.a_of_tau(s) / c; };
  return quad::integrate_function(accel, tau_from, tau_to, tight()).value;
}

double rapidity(const AccelerationProfile& profile, double tau, double c) {
  if (!(tau >= 0.0)) throw DomainError("rapidity: tau must be >= 0");
  return rapidity_between(profile, 0.0, tau, c);
}

std::vector<WorldlineEvent> worldline(const AccelerationProfile& profile,
                                      std::span<const double> tau_grid, double c) {
  if (tau_grid.empty()) throw ArgumentError("worldline: empty tau grid");
  if (tau_grid.front() != 0.0) throw ArgumentError("worldline: tau grid must start at 0");
  if (!std::is_sorted(tau_grid.begin(), tau_grid.end())) {
    throw ArgumentError("worldline: tau grid must be sorted ascending");
  }

  const RapidityCache r(profile, tau_grid.back(), c);
  const double a0 = profile.a_of_tau(0.0);
  const double z0 = a0 > 0.0 ? c * c / a0 : 0.0;

  // Real part accumulates t, imaginary part accumulates z / c.
  const auto line_element = [&](double tau) {
    const double rap = r(tau);
    return std::complex<double>(std::cosh(rap), std::sinh(rap));
  };

  std::vector<WorldlineEvent> events;
  events.reserve(tau_grid.size());
  events.push_back({0.0, 0.0, z0, 0.0, 0.0});
  std::complex<double> acc{};
  for (std::size_t i = 1; i < tau_grid.size(); ++i) {
    const double lo = tau_grid[i - 1];
    const double hi = tau_grid[i];
    if (hi > lo) acc += quad::integrate_function(line_element, lo, hi, tight()).value;
    const double rap = r(hi);
    events.push_back({hi, acc.real(), z0 + c * acc.imag(), rap, std::tanh(rap)});
  }
  return events;
}

WorldlineEvent rindler_event(double accel, double tau, double c) {
  if (!(accel > 0.0)) {
    throw DomainError("rindler_event: acceleration must be > 0 (use worldline for free motion)");
  }
  const double x = accel * tau / c;
  return {tau, (c / accel) * std::sinh(x), (c * c / accel) * std::cosh(x), x, std::tanh(x)};
}

Vec3 thomas_omega(const Vec3& beta, const Vec3& dbeta_dt) {
  const double b2 = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
  if (!(b2 < 1.0)) throw DomainError("thomas_omega: |beta| must be < 1");
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  const double f = gamma * gamma / (gamma + 1.0);
  const Vec3& u = dbeta_dt;
  const Vec3& v = beta;
  return {f * (u[1] * v[2] - u[2] * v[1]), f * (u[2] * v[0] - u[0] * v[2]),
          f * (u[0] * v[1] - u[1] * v[0])};
}

}  // namespace rindler_spin
