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

// Globally adaptive Gauss-Kronrod (7, 15) quadrature.
//
// The integrator works on "panel rules": callables that return the Kronrod
// and Gauss estimates of one subinterval. This lets callers batch the node
// evaluations (see simd::KernelTable::rate_panel) while sharing the adaptive
// driver. Values may be double or std::complex<double>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "rindler_spin/errors.hpp"

namespace rindler_spin::quad {

// Abscissae of the 15-point Kronrod rule on [-1, 1] (non-negative half,
// descending). Odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for kKronrodNodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// The 15 nodes of [a, b] in ascending order with their Kronrod and Gauss
// weights (Gauss weight 0 at Kronrod-only nodes), scaled to the interval.
struct PanelNodes {
  std::array<double, 15> x;
  std::array<double, 15> kronrod_w;
  std::array<double, 15> gauss_w;
};

inline PanelNodes panel_nodes(double a, double b) {
  PanelNodes p{};
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < 7; ++i) {
    const double gw = (i % 2 == 1) ? kGaussWeights[i / 2] * half : 0.0;
    const double kw = kKronrodWeights[i] * half;
    p.x[i] = center - half * kKronrodNodes[i];
    p.x[14 - i] = center + half * kKronrodNodes[i];
    p.kronrod_w[i] = p.kronrod_w[14 - i] = kw;
    p.gauss_w[i] = p.gauss_w[14 - i] = gw;
  }
  p.x[7] = center;
  p.kronrod_w[7] = kKronrodWeights[7] * half;
  p.gauss_w[7] = kGaussWeights[3] * half;
  return p;
}

template <class T>
struct PanelEstimate {
  T kronrod{};
  T gauss{};
  double abs_integral = 0.0;  // Kronrod estimate of the integral of |f|
};

// Non-adaptive 15-point panel of a pointwise integrand.
template <class F>
auto gauss_kronrod15(const F& f, double a, double b) {
  using T = decltype(f(a));
  const PanelNodes p = panel_nodes(a, b);
  PanelEstimate<T> est;
  for (std::size_t i = 0; i < 15; ++i) {
    const T v = f(p.x[i]);
    est.kronrod += p.kronrod_w[i] * v;
    est.gauss += p.gauss_w[i] * v;
    est.abs_integral += p.kronrod_w[i] * std::abs(v);
  }
  return est;
}

struct Options {
  double abs_tol = 0.0;
  double rel_tol = 1e-12;
  std::size_t max_panels = 4000;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;         // sum of panel error estimates |K - G|
  double abs_integral = 0.0;  // estimate of the integral of |f|
  std::size_t panels = 0;
};

// Adaptive driver: repeatedly bisects the panel with the largest error until
//   error <= max(abs_tol, rel_tol * |value|, roundoff floor),
// where the roundoff floor is 50 * eps * integral of |f|. Throws NumericError
// with the achieved error if max_panels is exhausted. Deterministic: ties are
// broken by position and the final sum runs left to right.
template <class PanelRule>
auto integrate(const PanelRule& rule, double a, double b, const Options& opt = {}) {
  using Estimate = decltype(rule(a, b));
  using T = decltype(Estimate{}.kronrod);

  struct Panel {
    double lo;
    double hi;
    Estimate est;
    double err;
  };
  auto make = [&](double lo, double hi) {
    Estimate est = rule(lo, hi);
    return Panel{lo, hi, est, std::abs(est.kronrod - est.gauss)};
  };
  auto worse = [](const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.lo > y.lo;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

  T value{};
  double error = 0.0;
  double abs_integral = 0.0;
  auto accept = [&](const Panel& p, int sign) {
    value += static_cast<double>(sign) * p.est.kronrod;
    error += sign * p.err;
    abs_integral += sign * p.est.abs_integral;
  };

  {
    Panel first = make(a, b);
    accept(first, +1);
    queue.push(first);
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  auto tolerance = [&] {
    return std::max({opt.abs_tol, opt.rel_tol * std::abs(value), 50.0 * kEps * abs_integral});
  };

  while (error > tolerance()) {
    if (queue.size() >= opt.max_panels) {
      throw NumericError("adaptive quadrature did not converge", error);
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw NumericError("adaptive quadrature hit machine resolution", error);
    }
    Panel left = make(worst.lo, mid);
    Panel right = make(mid, worst.hi);
    accept(worst, -1);
    accept(left, +1);
    accept(right, +1);
    queue.push(left);
    queue.push(right);
  }

  // Re-sum in a fixed order so the result does not depend on the history of
  // incremental updates.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  Result<T> out;
  for (const Panel& p : panels) {
    out.value += p.est.kronrod;
    out.error += p.err;
    out.abs_integral += p.est.abs_integral;
  }
  out.panels = panels.size();
  return out;
}

// Convenience overload for a pointwise integrand.
template <class F>
auto integrate_function(const F& f, double a, double b, const Options& opt = {}) {
  return integrate([&](double lo, double hi) { return gauss_kronrod15(f, lo, hi); }, a, b, opt);
}

}  // namespace rindler_spin::quad
