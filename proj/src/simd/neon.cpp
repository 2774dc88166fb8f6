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

// AArch64 only. Two float64x2 accumulators reproduce the four-lane tree of
// the scalar reference.

#include <arm_neon.h>

#include <cassert>

#include "detail.hpp"
#include "rindler_spin/simd/kernels.hpp"

namespace rindler_spin::simd::neon {

namespace {

struct Quad {
  float64x2_t lo;
  float64x2_t hi;
};

inline Quad load(const double* p) { return {vld1q_f64(p), vld1q_f64(p + 2)}; }
inline Quad splat(double v) { return {vdupq_n_f64(v), vdupq_n_f64(v)}; }
inline Quad add(Quad a, Quad b) { return {vaddq_f64(a.lo, b.lo), vaddq_f64(a.hi, b.hi)}; }
inline Quad sub(Quad a, Quad b) { return {vsubq_f64(a.lo, b.lo), vsubq_f64(a.hi, b.hi)}; }
inline Quad mul(Quad a, Quad b) { return {vmulq_f64(a.lo, b.lo), vmulq_f64(a.hi, b.hi)}; }
inline Quad div(Quad a, Quad b) { return {vdivq_f64(a.lo, b.lo), vdivq_f64(a.hi, b.hi)}; }
inline Quad neg(Quad a) { return {vnegq_f64(a.lo), vnegq_f64(a.hi)}; }
inline Quad sqrt(Quad a) { return {vsqrtq_f64(a.lo), vsqrtq_f64(a.hi)}; }

inline double hsum(Quad v) {
  const double lane[4] = {vgetq_lane_f64(v.lo, 0), vgetq_lane_f64(v.lo, 1),
                          vgetq_lane_f64(v.hi, 0), vgetq_lane_f64(v.hi, 1)};
  return detail::reduce4(lane);
}

void matvec(std::span<const double> a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  assert(a.size() == n * n && y.size() == n);
  const std::size_t body = n - n % 4;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.data() + i * n;
    Quad acc = splat(0.0);
    for (std::size_t j = 0; j < body; j += 4) acc = add(acc, mul(load(row + j), load(x.data() + j)));
    double sum = hsum(acc);
    for (std::size_t j = body; j < n; ++j) sum += row[j] * x[j];
    y[i] = sum;
  }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const std::size_t body = n - n % 2;
  const float64x2_t va = vdupq_n_f64(alpha);
  for (std::size_t i = 0; i < body; i += 2) {
    vst1q_f64(y.data() + i, vaddq_f64(vld1q_f64(y.data() + i), vmulq_f64(va, vld1q_f64(x.data() + i))));
  }
  for (std::size_t i = body; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_to(double alpha, std::span<const double> x, std::span<const double> y,
             std::span<double> out) {
  assert(x.size() == y.size() && y.size() == out.size());
  const std::size_t n = x.size();
  const std::size_t body = n - n % 2;
  const float64x2_t va = vdupq_n_f64(alpha);
  for (std::size_t i = 0; i < body; i += 2) {
    vst1q_f64(out.data() + i,
              vaddq_f64(vld1q_f64(y.data() + i), vmulq_f64(va, vld1q_f64(x.data() + i))));
  }
  for (std::size_t i = body; i < n; ++i) out[i] = y[i] + alpha * x[i];
}

RatePanelSums rate_panel(const RatePanelInput& in) {
  const std::size_t n = in.sinh_half.size();
  const std::size_t body = n - n % 4;
  const Quad ce = splat(in.cos_half_eps);
  const Quad se = splat(in.sin_half_eps);
  Quad kr = splat(0.0), ki = kr, gr = kr, gi = kr, ka = kr;
  for (std::size_t k = 0; k < body; k += 4) {
    const Quad sh = load(in.sinh_half.data() + k);
    const Quad ch = load(in.cosh_half.data() + k);
    const Quad cp = load(in.cos_phase.data() + k);
    const Quad sp = load(in.sin_phase.data() + k);
    const Quad wk = load(in.kronrod_w.data() + k);
    const Quad wg = load(in.gauss_w.data() + k);

    const Quad x = mul(sh, ce);
    const Quad y = neg(mul(ch, se));
    const Quad u = sub(mul(x, x), mul(y, y));
    const Quad xy = mul(x, y);
    const Quad v = add(xy, xy);
    const Quad p = sub(mul(u, u), mul(v, v));
    const Quad uv = mul(u, v);
    const Quad q = add(uv, uv);
    const Quad den = add(mul(p, p), mul(q, q));
    const Quad ir = div(p, den);
    const Quad ii = div(neg(q), den);
    const Quad fr = sub(mul(ir, cp), mul(ii, sp));
    const Quad fi = add(mul(ir, sp), mul(ii, cp));
    const Quad mag = sqrt(add(mul(fr, fr), mul(fi, fi)));

    kr = add(kr, mul(wk, fr));
    ki = add(ki, mul(wk, fi));
    gr = add(gr, mul(wg, fr));
    gi = add(gi, mul(wg, fi));
    ka = add(ka, mul(wk, mag));
  }
  RatePanelSums out;
  out.kronrod_re = hsum(kr);
  out.kronrod_im = hsum(ki);
  out.gauss_re = hsum(gr);
  out.gauss_im = hsum(gi);
  out.kronrod_abs = hsum(ka);
  for (std::size_t k = body; k < n; ++k) detail::accumulate_node(in, k, out);
  return out;
}

}  // namespace

const KernelTable& table() noexcept {
  static const KernelTable t{Isa::neon, &matvec, &axpy, &axpy_to, &rate_panel};
  return t;
}

}  // namespace rindler_spin::simd::neon
