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
#include <complex>
#include <numbers>
#include <vector>

#include "check.hpp"
#include "rindler_spin/correlator.hpp"
#include "rindler_spin/errors.hpp"

using namespace rindler_spin;
using rindler_spin::testing::rel_diff;
using cplx = std::complex<double>;

namespace {

const PhysicalConstants& k = kCodata2018;

double crel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return out;
}

}  // namespace

TEST_CASE("wightman_flat on a static separation") {
  const double c = k.c;
  for (double s : {1e-3, 0.5, 2.0, 40.0}) {
    const cplx shifted(s, -1e-4);
    const cplx g = wightman_flat(c * c * shifted * shifted);
    const cplx want = 4.0 * k.hbar / (std::numbers::pi * c * c * c) / std::pow(shifted, 4);
    CHECK(crel(g, want) < 1e-13);
    // Mirror separation with the conjugate regulator.
    const cplx mirrored(-s, 1e-4);
    CHECK(crel(wightman_flat(c * c * mirrored * mirrored), g) < 1e-15);
  }
  CHECK_THROWS_AS(wightman_flat(cplx(0.0, 0.0)), DomainError);
}

TEST_CASE("wightman_rindler is even and decays like exp(-2 a s / c)") {
  const double a = 4.0e20;
  const double unit = k.c / a;
  for (double s : {0.3, 1.0, 2.5, 7.0}) {
    const cplx plus = wightman_rindler(a, s * unit, 0.01 * unit);
    const cplx minus = wightman_rindler(a, -s * unit, -0.01 * unit);
    CHECK(crel(minus, plus) < 1e-14);
  }
  const double ratio =
      std::abs(wightman_rindler(a, 11.0 * unit, 0.0)) / std::abs(wightman_rindler(a, 10.0 * unit, 0.0));
  CHECK(std::abs(ratio / std::exp(-2.0) - 1.0) < 0.05);

  const cplx mid = wightman_rindler(a, std::numbers::pi * unit, 0.0);
  const double c7 = std::pow(k.c, 7);
  const double want = k.hbar * std::pow(a, 4) / (4.0 * std::numbers::pi * c7) * 0.035653968688685669;
  CHECK(rel_diff(mid.real(), want) < 1e-13);
  CHECK(mid.imag() == 0.0);
  CHECK(mid.real() > 0.0);

  CHECK_THROWS_AS(wightman_rindler(0.0, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(wightman_rindler(-a, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(wightman_rindler(a, 0.0, 0.0), DomainError);
}

TEST_CASE("small acceleration recovers the inertial correlator") {
  const double c = k.c;
  const double a = 2e-4 * c;  // a s / 2c = 1e-4 at s = 1 s
  const double eps = 1e-3;
  for (int i = 1; i <= 10; ++i) {
    const double s = 0.2 * i;
    const cplx shifted(s, -eps);
    const cplx flat = wightman_flat(c * c * shifted * shifted);
    CHECK(crel(wightman_rindler(a, s, eps), flat) < 1e-6);
  }
}

TEST_CASE("bose_occupation") {
  CHECK(bose_occupation(0.0) == 0.0);
  CHECK(bose_occupation(-2.0) == 0.0);
  CHECK(bose_occupation(0.01) < 1e-200);
  CHECK(rel_diff(bose_occupation(1.0), 0.0018709365986606441) < 1e-14);
  CHECK(rel_diff(bose_occupation(100.0), 15.420729952463711) < 1e-14);
  CHECK(rel_diff(bose_occupation(100.0), 100.0 / (2.0 * std::numbers::pi) - 0.5) < 1e-3);
}

TEST_CASE("rates_closed reference values") {
  const RateSet zero = rates_closed(0.0);
  CHECK(zero.g_plus == 0.0);
  CHECK(zero.g_minus == 1.0);
  CHECK(zero.g_z == 0.0);

  const RateSet one = rates_closed(1.0);
  CHECK(one.alpha == 1.0);
  CHECK(rel_diff(one.n, 0.0018709365986606441) < 1e-14);
  CHECK(rel_diff(one.g_plus, 0.0037418731973212882) < 1e-14);
  CHECK(rel_diff(one.g_minus, 2.0037418731973213) < 1e-15);
  CHECK(rel_diff(one.g_z, 0.079577471545947668) < 1e-15);
  CHECK(rel_diff(one.g_plus / one.g_minus, std::exp(-2.0 * std::numbers::pi)) < 1e-12);

  const RateSet ten = rates_closed(10.0);
  CHECK(rel_diff(ten.g_plus, 115.50036809612054) < 1e-14);
  CHECK(rel_diff(ten.g_minus, 216.50036809612054) < 1e-14);
  CHECK(rel_diff(ten.g_z, 79.577471545947668) < 1e-14);

  CHECK_THROWS_AS(rates_closed(-0.5), DomainError);
}

TEST_CASE("rates_closed invariants on a log grid") {
  const auto grid = log_grid(0.01, 100.0, 50);
  RateSet prev{};
  bool first = true;
  for (double alpha : grid) {
    const RateSet g = rates_closed(alpha);
    CHECK(g.g_plus >= 0.0);
    CHECK(g.g_minus >= g.g_plus);
    CHECK(rel_diff(g.g_minus - g.g_plus, 1.0 + alpha * alpha) < 1e-12);
    if (g.g_plus > 0.0) {
      CHECK(rel_diff(g.g_plus / g.g_minus, std::exp(-2.0 * std::numbers::pi / alpha)) < 1e-12);
    }
    if (!first) {
      CHECK(g.g_plus >= prev.g_plus);
      CHECK(g.g_minus > prev.g_minus);
      CHECK(g.g_z > prev.g_z);
      if (prev.g_plus > 0.0) CHECK(g.g_plus > prev.g_plus);
    }
    prev = g;
    first = false;
  }
}

TEST_CASE("rates_numeric agrees with the closed forms") {
  for (double alpha : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    CAPTURE(alpha);
    const NumericRates num = rates_numeric(alpha);
    const RateSet ref = rates_closed(alpha);
    CHECK(rel_diff(num.rates.g_plus, ref.g_plus) < 1e-4);
    CHECK(rel_diff(num.rates.g_minus, ref.g_minus) < 1e-4);
    CHECK(rel_diff(num.rates.g_z, ref.g_z) < 1e-4);
    CHECK(num.residual_plus < 1e-3);
    CHECK(num.residual_minus < 1e-3);
    CHECK(num.imaginary_ratio < 1e-6);
  }
  const NumericRates five = rates_numeric(5.0);
  CHECK(rel_diff(five.rates.g_plus / five.rates.g_minus, std::exp(-2.0 * std::numbers::pi / 5.0)) <
        1e-4);
  CHECK(rel_diff(rates_numeric(2.0).rates.g_z, 2.0 / std::numbers::pi) < 1e-4);
}

TEST_CASE("rates_numeric refuses what it cannot resolve") {
  CHECK_THROWS_AS(rates_numeric(0.0), DomainError);
  CHECK_THROWS_AS(rates_numeric(-1.0), DomainError);
  CHECK_THROWS_AS(rates_numeric(0.05), NumericError);
  try {
    rates_numeric(0.3);
    FAIL("expected the extrapolation residual to exceed tolerance");
  } catch (const NumericError& e) {
    CHECK(e.residual() > 1e-3);
  }

  EpsilonSchedule bad;
  bad.epsilons = {0.1, 0.2};
  CHECK_THROWS_AS(bad.validate(), ArgumentError);
  CHECK_THROWS_AS(rates_numeric(1.0, bad), ArgumentError);
  bad.epsilons = {0.1};
  CHECK_THROWS_AS(bad.validate(), ArgumentError);
  bad.epsilons = {0.2, -0.1};
  CHECK_THROWS_AS(bad.validate(), ArgumentError);
  bad = {};
  bad.window = 0.0;
  CHECK_THROWS_AS(bad.validate(), ArgumentError);
}
