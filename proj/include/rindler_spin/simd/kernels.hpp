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

// Data-parallel inner loops used by the solvers.
//
// Every kernel has a scalar reference implementation and vector variants
// (AVX2 on x86-64, NEON on AArch64) selected at runtime. All variants use the
// same summation tree: four interleaved partial sums (element k goes to lane
// k % 4), reduced as (l0 + l1) + (l2 + l3), with tails added afterwards in
// index order. No fused multiply-add is used, so the variants agree bit for
// bit.

#include <cstddef>
#include <span>
#include <string_view>

namespace rindler_spin::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

// Nodes of one Gauss-Kronrod panel of the regulated rate integrand
//   w(s) * exp(i*phase(s)) / sinh^4((s - i*eps)/2).
// The caller evaluates the transcendental parts per node; the kernel does the
// complex arithmetic and the weighted reductions.
struct RatePanelInput {
  std::span<const double> sinh_half;  // sinh(s_k / 2)
  std::span<const double> cosh_half;  // cosh(s_k / 2)
  std::span<const double> cos_phase;  // cos(phase_k)
  std::span<const double> sin_phase;  // sin(phase_k)
  std::span<const double> kronrod_w;
  std::span<const double> gauss_w;    // zero at Kronrod-only nodes
  double cos_half_eps = 1.0;          // cos(eps / 2)
  double sin_half_eps = 0.0;          // sin(eps / 2)
};

struct RatePanelSums {
  double kronrod_re = 0.0;
  double kronrod_im = 0.0;
  double gauss_re = 0.0;
  double gauss_im = 0.0;
  double kronrod_abs = 0.0;  // sum of w_k * |f_k|
};

struct KernelTable {
  Isa isa;
  // y = A x for a row-major n x n matrix A (a.size() == n*n).
  void (*matvec)(std::span<const double> a, std::span<const double> x, std::span<double> y);
  // y += alpha * x
  void (*axpy)(double alpha, std::span<const double> x, std::span<double> y);
  // out = y + alpha * x
  void (*axpy_to)(double alpha, std::span<const double> x, std::span<const double> y,
                  std::span<double> out);
  RatePanelSums (*rate_panel)(const RatePanelInput& in);
};

// True if this build contains the variant and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

// Kernel table for a specific ISA. Throws std::runtime_error if unavailable.
const KernelTable& kernels_for(Isa isa);

// Best available variant, detected once per process.
const KernelTable& active_kernels();

// Per-variant entry points, exposed for equivalence tests.
namespace scalar {
const KernelTable& table() noexcept;
}
#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
const KernelTable& table() noexcept;
}
#endif
#if defined(__aarch64__)
namespace neon {
const KernelTable& table() noexcept;
}
#endif

}  // namespace rindler_spin::simd
