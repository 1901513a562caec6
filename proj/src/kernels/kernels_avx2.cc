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

// Compiled with -mavx2. Only reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include "sumattack/kernels/kernels.h"

namespace sumattack::kernels::avx2 {
namespace {

static_assert(kEmbeddingDim == 64, "dot_matrix unrolls exactly four lanes");

inline std::int32_t horizontal_sum(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(s);
}

inline __m256i in_range(__m256i x, char lo, char hi) {
  const __m256i shifted = _mm256_sub_epi8(x, _mm256_set1_epi8(lo));
  const __m256i clipped =
      _mm256_min_epu8(shifted, _mm256_set1_epi8(static_cast<char>(hi - lo)));
  return _mm256_cmpeq_epi8(shifted, clipped);
}

}  // namespace

void dot_matrix(const std::int16_t* a, std::size_t a_rows,
                const std::int16_t* b, std::size_t b_rows, std::int32_t* out) {
  for (std::size_t i = 0; i < a_rows; ++i) {
    const auto* row_a = reinterpret_cast<const __m256i*>(a + i * kEmbeddingDim);
    const __m256i a0 = _mm256_loadu_si256(row_a + 0);
    const __m256i a1 = _mm256_loadu_si256(row_a + 1);
    const __m256i a2 = _mm256_loadu_si256(row_a + 2);
    const __m256i a3 = _mm256_loadu_si256(row_a + 3);
    for (std::size_t j = 0; j < b_rows; ++j) {
      const auto* row_b =
          reinterpret_cast<const __m256i*>(b + j * kEmbeddingDim);
      __m256i acc = _mm256_madd_epi16(a0, _mm256_loadu_si256(row_b + 0));
      acc = _mm256_add_epi32(
          acc, _mm256_madd_epi16(a1, _mm256_loadu_si256(row_b + 1)));
      acc = _mm256_add_epi32(
          acc, _mm256_madd_epi16(a2, _mm256_loadu_si256(row_b + 2)));
      acc = _mm256_add_epi32(
          acc, _mm256_madd_epi16(a3, _mm256_loadu_si256(row_b + 3)));
      out[i * b_rows + j] = horizontal_sum(acc);
    }
  }
}

void classify_bytes(const std::uint8_t* in, std::size_t n, std::uint8_t* out) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i symbol = _mm256_set1_epi8(kSymbol);
  const __m256i space_val = _mm256_set1_epi8(kSpace);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i x =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    const __m256i high = _mm256_cmpgt_epi8(zero, x);  // byte >= 0x80
    const __m256i text = _mm256_or_si256(
        _mm256_or_si256(in_range(x, '0', '9'), in_range(x, 'a', 'z')),
        _mm256_or_si256(in_range(x, 'A', 'Z'), high));
    const __m256i space = _mm256_or_si256(
        _mm256_cmpeq_epi8(x, _mm256_set1_epi8(' ')), in_range(x, '\t', '\r'));
    __m256i r = _mm256_blendv_epi8(symbol, space_val, space);
    r = _mm256_blendv_epi8(r, zero, text);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  scalar::classify_bytes(in + i, n - i, out + i);
}

}  // namespace sumattack::kernels::avx2
