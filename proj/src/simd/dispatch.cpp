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

#include <stdexcept>
#include <string>

#include "rindler_spin/simd/kernels.hpp"

namespace rindler_spin::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(RINDLER_SPIN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(RINDLER_SPIN_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::runtime_error("kernel variant '" + std::string(isa_name(isa)) +
                             "' is not available on this build/CPU");
  }
  switch (isa) {
#if defined(RINDLER_SPIN_HAVE_AVX2)
    case Isa::avx2:
      return avx2::table();
#endif
#if defined(RINDLER_SPIN_HAVE_NEON)
    case Isa::neon:
      return neon::table();
#endif
    default:
      return scalar::table();
  }
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    for (Isa isa : {Isa::avx2, Isa::neon}) {
      if (isa_available(isa)) return kernels_for(isa);
    }
    return scalar::table();
  }();
  return chosen;
}

}  // namespace rindler_spin::simd
