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

#include "sumattack/kernels/kernels.h"

namespace sumattack::kernels::scalar {

void dot_matrix(const std::int16_t* a, std::size_t a_rows,
                const std::int16_t* b, std::size_t b_rows, std::int32_t* out) {
  for (std::size_t i = 0; i < a_rows; ++i) {
    const std::int16_t* row_a = a + i * kEmbeddingDim;
    for (std::size_t j = 0; j < b_rows; ++j) {
      const std::int16_t* row_b = b + j * kEmbeddingDim;
      std::int32_t acc = 0;
      for (std::size_t k = 0; k < kEmbeddingDim; ++k) {
        acc += static_cast<std::int32_t>(row_a[k]) * row_b[k];
      }
      out[i * b_rows + j] = acc;
    }
  }
}

void classify_bytes(const std::uint8_t* in, std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t c = in[i];
    if ((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
        (c >= 'A' && c <= 'Z') || c >= 0x80) {
      out[i] = kText;
    } else if (c == ' ' || (c >= '\t' && c <= '\r')) {
      out[i] = kSpace;
    } else {
      out[i] = kSymbol;
    }
  }
}

}  // namespace sumattack::kernels::scalar
