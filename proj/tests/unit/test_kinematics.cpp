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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "check.hpp"
#include "rindler_spin/errors.hpp"
#include "rindler_spin/kinematics.hpp"

using namespace rindler_spin;
using rindler_spin::testing::rel_diff;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

}  // namespace

TEST_CASE("rapidity for simple profiles") {
  const double c = kCodata2018.c;
  const double a = 9.81e2;
  CHECK(rel_diff(rapidity(AccelerationProfile::constant(a), 3.0e7), a * 3.0e7 / c) < 1e-13);
  CHECK(rapidity(AccelerationProfile::zero(), 5.0) == 0.0);
  CHECK(rapidity(AccelerationProfile::constant(a), 0.0) == 0.0);
  CHECK_THROWS_AS(rapidity(AccelerationProfile::constant(a), -1.0), DomainError);

  const double a0 = 2.0, omega = 3.0;
  const auto wiggle = AccelerationProfile::sinusoid(a0, omega);
  for (double tau : {0.1, 0.7, 2.0, 5.5, 13.0}) {
    const double want = a0 / omega * (1.0 - std::cos(omega * tau));
    CHECK(std::abs(rapidity(wiggle, tau, 1.0) - want) < 1e-10);
  }
}

TEST_CASE("rapidity is additive over split intervals") {
  const auto p = AccelerationProfile::sinusoid(1.3, 0.7);
  for (double t1 : {0.5, 2.0, 4.1}) {
    for (double t2 : {0.3, 1.9, 6.0}) {
      const double whole = rapidity(p, t1 + t2, 1.0);
      const double split = rapidity(p, t1, 1.0) + rapidity_between(p, t1, t1 + t2, 1.0);
      CHECK(std::abs(whole - split) < 1e-12);
    }
  }
}

TEST_CASE("rindler_event closed form") {
  const auto e0 = rindler_event(1.0, 0.0, 1.0);
  CHECK(e0.t == 0.0);
  CHECK(e0.z == 1.0);
  const auto e1 = rindler_event(1.0, 1.0, 1.0);
  CHECK(std::abs(e1.t - 1.1752011936438014) < 1e-15);
  CHECK(std::abs(e1.z - 1.5430806348152437) < 1e-15);
  CHECK_THROWS_AS(rindler_event(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(rindler_event(-2.0, 1.0), DomainError);

  const double c = kCodata2018.c;
  const double a = 3.0e20;
  // z and ct cancel at large rapidity, so the invariant keeps about
  // exp(2 a tau / c) * 1e-16 relative precision; stay where 1e-10 is meaningful.
  for (double tau : linspace(0.0, 5.0 * c / a, 100)) {
    const auto e = rindler_event(a, tau);
    const double invariant = e.z * e.z - c * c * e.t * e.t;
    CHECK(rel_diff(invariant, c * c * c * c / (a * a)) < 1e-10);
  }
}

TEST_CASE("worldline reproduces the Rindler hyperbola") {
  const double a = 1.0;
  const auto grid = linspace(0.0, 10.0, 101);
  const auto events = worldline(AccelerationProfile::constant(a), grid, 1.0);
  REQUIRE(events.size() == grid.size());
  CHECK(events.front().t == 0.0);
  CHECK(events.front().z == 1.0);
  for (std::size_t i = 1; i < events.size(); ++i) {
    const auto want = rindler_event(a, grid[i], 1.0);
    CHECK(rel_diff(events[i].t, want.t) < 1e-8);
    CHECK(rel_diff(events[i].z, want.z) < 1e-8);
    CHECK(rel_diff(events[i].rapidity, want.rapidity) < 1e-12);
    CHECK(events[i].beta == doctest::Approx(std::tanh(events[i].rapidity)).epsilon(1e-15));
  }
}

TEST_CASE("worldline in cgs units") {
  const double c = kCodata2018.c;
  const double a = 2.2e21;
  const auto grid = linspace(0.0, 10.0 * c / a, 41);
  const auto events = worldline(AccelerationProfile::constant(a), grid);
  for (std::size_t i = 1; i < events.size(); ++i) {
    const auto want = rindler_event(a, grid[i]);
    CHECK(rel_diff(events[i].t, want.t) < 1e-8);
    CHECK(rel_diff(events[i].z, want.z) < 1e-8);
  }
}

TEST_CASE("zero profile is inertial") {
  const auto grid = linspace(0.0, 4.0, 17);
  const auto events = worldline(AccelerationProfile::zero(), grid, 1.0);
  for (std::size_t i = 0; i < events.size(); ++i) {
    CHECK(events[i].t == grid[i]);
    CHECK(events[i].z == 0.0);
    CHECK(events[i].beta == 0.0);
  }
}

TEST_CASE("line element holds along a non-uniform worldline") {
  // Centered differences carry an h^2 / 3 truncation term, so h = 5e-4.
  const auto grid = linspace(0.0, 6.0, 12001);
  const auto events = worldline(AccelerationProfile::sinusoid(1.5, 1.1), grid, 1.0);
  const double h = grid[1] - grid[0];
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < events.size(); ++i) {
    const double dt = (events[i + 1].t - events[i - 1].t) / (2.0 * h);
    const double dz = (events[i + 1].z - events[i - 1].z) / (2.0 * h);
    worst = std::max(worst, std::abs(dt * dt - dz * dz - 1.0));
  }
  CHECK(worst < 1e-6);
  for (const auto& e : events) CHECK(std::abs(e.beta) < 1.0);
}

TEST_CASE("worldline rejects malformed grids") {
  const auto p = AccelerationProfile::constant(1.0);
  CHECK_THROWS_AS(worldline(p, std::vector<double>{}, 1.0), ArgumentError);
  CHECK_THROWS_AS(worldline(p, std::vector<double>{0.5, 1.0}, 1.0), ArgumentError);
  CHECK_THROWS_AS(worldline(p, std::vector<double>{0.0, 2.0, 1.0}, 1.0), ArgumentError);
}

TEST_CASE("thomas_omega") {
  const Vec3 zero{0.0, 0.0, 0.0};
  CHECK(thomas_omega(zero, {0.3, -0.1, 0.2}) == zero);
  const Vec3 beta{0.6, 0.0, 0.0};
  const Vec3 w = thomas_omega(beta, {0.0, 0.1, 0.0});
  CHECK(w[0] == 0.0);
  CHECK(w[1] == 0.0);
  CHECK(std::abs(w[2] - (-0.041666666666666667)) < 1e-16);
  const Vec3 b{0.1, -0.4, 0.3};
  for (double lambda : {-3.0, 0.5, 2.0, 17.0}) {
    const Vec3 o = thomas_omega(b, {lambda * b[0], lambda * b[1], lambda * b[2]});
    for (double x : o) CHECK(std::abs(x) < 1e-16);
  }
  CHECK_THROWS_AS(thomas_omega({1.0, 0.0, 0.0}, zero), DomainError);
  CHECK_THROWS_AS(thomas_omega({0.8, 0.7, 0.0}, zero), DomainError);
}
