// Copyright 2026 The sumattack Authors.
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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sumattack/kernels/kernels.h"

namespace sumattack::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SUMATTACK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("SUMATTACK_ISA")) {
    if (std::string(env) == "scalar") return Isa::kScalar;
  }
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool isa_supported(Isa isa) {
  return isa == Isa::kScalar || (isa == Isa::kAvx2 && cpu_has_avx2());
}

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("ISA not supported on this host: " +
                                std::string(isa_name(isa)));
  }
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

void dot_matrix(std::span<const std::int16_t> a, std::size_t a_rows,
                std::span<const std::int16_t> b, std::size_t b_rows,
                std::span<std::int32_t> out) {
  if (a.size() < a_rows * kEmbeddingDim || b.size() < b_rows * kEmbeddingDim ||
      out.size() < a_rows * b_rows) {
    throw std::invalid_argument("dot_matrix: buffer too small");
  }
#if defined(SUMATTACK_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) {
    avx2::dot_matrix(a.data(), a_rows, b.data(), b_rows, out.data());
    return;
  }
#endif
  scalar::dot_matrix(a.data(), a_rows, b.data(), b_rows, out.data());
}

void classify_bytes(std::span<const std::uint8_t> in,
                    std::span<std::uint8_t> out) {
  if (out.size() < in.size()) {
    throw std::invalid_argument("classify_bytes: output too small");
  }
#if defined(SUMATTACK_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) {
    avx2::classify_bytes(in.data(), in.size(), out.data());
    return;
  }
#endif
  scalar::classify_bytes(in.data(), in.size(), out.data());
}

}  // namespace sumattack::kernels
