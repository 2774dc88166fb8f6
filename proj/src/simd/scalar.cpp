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

#include <cassert>

#include "detail.hpp"
#include "rindler_spin/simd/kernels.hpp"

namespace rindler_spin::simd::scalar {

namespace {

double dot(const double* a, const double* x, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t body = n - n % 4;
  for (std::size_t j = 0; j < body; j += 4) {
    for (std::size_t l = 0; l < 4; ++l) lane[l] += a[j + l] * x[j + l];
  }
  double sum = detail::reduce4(lane);
  for (std::size_t j = body; j < n; ++j) sum += a[j] * x[j];
  return sum;
}

void matvec(std::span<const double> a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  assert(a.size() == n * n && y.size() == n);
  for (std::size_t i = 0; i < n; ++i) y[i] = dot(a.data() + i * n, x.data(), n);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void axpy_to(double alpha, std::span<const double> x, std::span<const double> y,
             std::span<double> out) {
  assert(x.size() == y.size() && y.size() == out.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[i] + alpha * x[i];
}

RatePanelSums rate_panel(const RatePanelInput& in) {
  const std::size_t n = in.sinh_half.size();
  RatePanelSums lane[4];
  const std::size_t body = n - n % 4;
  for (std::size_t k = 0; k < body; k += 4) {
    for (std::size_t l = 0; l < 4; ++l) detail::accumulate_node(in, k + l, lane[l]);
  }
  auto reduce = [&](double RatePanelSums::*field) {
    const double v[4] = {lane[0].*field, lane[1].*field, lane[2].*field, lane[3].*field};
    return detail::reduce4(v);
  };
  RatePanelSums out;
  out.kronrod_re = reduce(&RatePanelSums::kronrod_re);
  out.kronrod_im = reduce(&RatePanelSums::kronrod_im);
  out.gauss_re = reduce(&RatePanelSums::gauss_re);
  out.gauss_im = reduce(&RatePanelSums::gauss_im);
  out.kronrod_abs = reduce(&RatePanelSums::kronrod_abs);
  for (std::size_t k = body; k < n; ++k) detail::accumulate_node(in, k, out);
  return out;
}

}  // namespace

const KernelTable& table() noexcept {
  static const KernelTable t{Isa::scalar, &matvec, &axpy, &axpy_to, &rate_panel};
  return t;
}

}  // namespace rindler_spin::simd::scalar
