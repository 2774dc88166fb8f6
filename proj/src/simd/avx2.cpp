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

// Compiled with -mavx2 only; dispatch guarantees this code runs on AVX2 CPUs.
// FMA is deliberately left disabled so results match the scalar reference.

#include <immintrin.h>

#include <cassert>

#include "detail.hpp"
#include "rindler_spin/simd/kernels.hpp"

namespace rindler_spin::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, v);
  return detail::reduce4(lane);
}

void matvec(std::span<const double> a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  assert(a.size() == n * n && y.size() == n);
  const std::size_t body = n - n % 4;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.data() + i * n;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < body; j += 4) {
      const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x.data() + j));
      acc = _mm256_add_pd(acc, prod);
    }
    double sum = hsum(acc);
    for (std::size_t j = body; j < n; ++j) sum += row[j] * x[j];
    y[i] = sum;
  }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const __m256d va = _mm256_set1_pd(alpha);
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i));
    _mm256_storeu_pd(y.data() + i, _mm256_add_pd(_mm256_loadu_pd(y.data() + i), prod));
  }
  for (std::size_t i = body; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_to(double alpha, std::span<const double> x, std::span<const double> y,
             std::span<double> out) {
  assert(x.size() == y.size() && y.size() == out.size());
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const __m256d va = _mm256_set1_pd(alpha);
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_loadu_pd(y.data() + i), prod));
  }
  for (std::size_t i = body; i < n; ++i) out[i] = y[i] + alpha * x[i];
}

RatePanelSums rate_panel(const RatePanelInput& in) {
  const std::size_t n = in.sinh_half.size();
  const std::size_t body = n - n % 4;
  const __m256d ce = _mm256_set1_pd(in.cos_half_eps);
  const __m256d se = _mm256_set1_pd(in.sin_half_eps);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d kr = _mm256_setzero_pd(), ki = kr, gr = kr, gi = kr, ka = kr;
  for (std::size_t k = 0; k < body; k += 4) {
    const __m256d sh = _mm256_loadu_pd(in.sinh_half.data() + k);
    const __m256d ch = _mm256_loadu_pd(in.cosh_half.data() + k);
    const __m256d cp = _mm256_loadu_pd(in.cos_phase.data() + k);
    const __m256d sp = _mm256_loadu_pd(in.sin_phase.data() + k);
    const __m256d wk = _mm256_loadu_pd(in.kronrod_w.data() + k);
    const __m256d wg = _mm256_loadu_pd(in.gauss_w.data() + k);

    const __m256d x = _mm256_mul_pd(sh, ce);
    const __m256d y = _mm256_xor_pd(_mm256_mul_pd(ch, se), sign);
    const __m256d u = _mm256_sub_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
    const __m256d xy = _mm256_mul_pd(x, y);
    const __m256d v = _mm256_add_pd(xy, xy);
    const __m256d p = _mm256_sub_pd(_mm256_mul_pd(u, u), _mm256_mul_pd(v, v));
    const __m256d uv = _mm256_mul_pd(u, v);
    const __m256d q = _mm256_add_pd(uv, uv);
    const __m256d den = _mm256_add_pd(_mm256_mul_pd(p, p), _mm256_mul_pd(q, q));
    const __m256d ir = _mm256_div_pd(p, den);
    const __m256d ii = _mm256_div_pd(_mm256_xor_pd(q, sign), den);
    const __m256d fr = _mm256_sub_pd(_mm256_mul_pd(ir, cp), _mm256_mul_pd(ii, sp));
    const __m256d fi = _mm256_add_pd(_mm256_mul_pd(ir, sp), _mm256_mul_pd(ii, cp));
    const __m256d mag =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(fr, fr), _mm256_mul_pd(fi, fi)));

    kr = _mm256_add_pd(kr, _mm256_mul_pd(wk, fr));
    ki = _mm256_add_pd(ki, _mm256_mul_pd(wk, fi));
    gr = _mm256_add_pd(gr, _mm256_mul_pd(wg, fr));
    gi = _mm256_add_pd(gi, _mm256_mul_pd(wg, fi));
    ka = _mm256_add_pd(ka, _mm256_mul_pd(wk, mag));
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
  static const KernelTable t{Isa::avx2, &matvec, &axpy, &axpy_to, &rate_panel};
  return t;
}

}  // namespace rindler_spin::simd::avx2
