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

#ifndef SUMATTACK_KERNELS_KERNELS_H_
#define SUMATTACK_KERNELS_KERNELS_H_

// Data-parallel inner loops shared by the similarity scorer and the defence
// checks. Every kernel has a scalar reference implementation and, on x86-64,
// an AVX2 variant compiled in its own translation unit. The variant is picked
// once at runtime from CPUID and can be overridden with SUMATTACK_ISA=scalar
// or with set_isa() (tests use this to compare both paths).
//
// All kernels are integer/byte kernels, so the variants agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace sumattack::kernels {

enum class Isa { kScalar, kAvx2 };

// Width of the hashed trigram embeddings used by the mock similarity scorer.
inline constexpr std::size_t kEmbeddingDim = 64;

Isa active_isa();
void set_isa(Isa isa);  // throws std::invalid_argument if unsupported here
bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

// out[i * b_rows + j] = <a_i, b_j> for row-major int16 matrices with
// kEmbeddingDim columns. Callers keep every |row|_1 <= 4096 so the int32
// accumulators cannot overflow.
void dot_matrix(std::span<const std::int16_t> a, std::size_t a_rows,
                std::span<const std::int16_t> b, std::size_t b_rows,
                std::span<std::int32_t> out);

enum ByteClass : std::uint8_t {
  kText = 0,    // ASCII alphanumeric or any byte >= 0x80
  kSpace = 1,   // ' ', \t, \n, \v, \f, \r
  kSymbol = 2,  // everything else, including control bytes
};

// out[i] = class of in[i]; out.size() must be >= in.size().
void classify_bytes(std::span<const std::uint8_t> in,
                    std::span<std::uint8_t> out);

namespace scalar {
void dot_matrix(const std::int16_t* a, std::size_t a_rows,
                const std::int16_t* b, std::size_t b_rows, std::int32_t* out);
void classify_bytes(const std::uint8_t* in, std::size_t n, std::uint8_t* out);
}  // namespace scalar

#if defined(SUMATTACK_HAVE_AVX2)
namespace avx2 {
void dot_matrix(const std::int16_t* a, std::size_t a_rows,
                const std::int16_t* b, std::size_t b_rows, std::int32_t* out);
void classify_bytes(const std::uint8_t* in, std::size_t n, std::uint8_t* out);
}  // namespace avx2
#endif

}  // namespace sumattack::kernels

#endif  // SUMATTACK_KERNELS_KERNELS_H_
