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

// Scalar building blocks shared by every kernel variant (reference loops and
// vector tails), so all variants perform identical floating-point operations.

#include <cmath>
#include <cstddef>

#include "rindler_spin/simd/kernels.hpp"

namespace rindler_spin::simd::detail {

struct NodeValue {
  double re;
  double im;
};

// exp(i*phase) / sinh^4((s - i*eps)/2) for one node.
inline NodeValue rate_node(double sh, double ch, double cp, double sp, double ce, double se) {
  // z = sinh(s/2) cos(eps/2) - i cosh(s/2) sin(eps/2)
  const double x = sh * ce;
  const double y = -(ch * se);
  const double u = x * x - y * y;
  const double xy = x * y;
  const double v = xy + xy;
  const double p = u * u - v * v;
  const double uv = u * v;
  const double q = uv + uv;
  const double den = p * p + q * q;
  const double ir = p / den;
  const double ii = -q / den;
  return {ir * cp - ii * sp, ir * sp + ii * cp};
}

inline void accumulate_node(const RatePanelInput& in, std::size_t k, RatePanelSums& acc) {
  const NodeValue f = rate_node(in.sinh_half[k], in.cosh_half[k], in.cos_phase[k],
                                in.sin_phase[k], in.cos_half_eps, in.sin_half_eps);
  const double wk = in.kronrod_w[k];
  const double wg = in.gauss_w[k];
  const double mag = std::sqrt(f.re * f.re + f.im * f.im);
  acc.kronrod_re += wk * f.re;
  acc.kronrod_im += wk * f.im;
  acc.gauss_re += wg * f.re;
  acc.gauss_im += wg * f.im;
  acc.kronrod_abs += wk * mag;
}

inline double reduce4(const double lane[4]) {
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace rindler_spin::simd::detail
