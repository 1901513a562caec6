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

#include <cmath>
#include <stdexcept>

#include "sumattack/similarity.h"
#include "sumattack/text_core.h"

namespace sumattack {
namespace {

constexpr std::uint32_t kBoundary = 0x100;  // outside the byte range

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t trigram_bucket(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ MockScorer::kSeed;
  for (std::uint32_t v : {a, b, c}) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(mix64(h) % kernels::kEmbeddingDim);
}

void require_non_empty(std::string_view candidate, std::string_view reference) {
  if (candidate.empty() || reference.empty()) {
    throw std::invalid_argument("similarity scoring needs non-empty texts");
  }
}

}  // namespace

std::vector<SimilarityScore> SimilarityScorer::batch_score(
    std::span<const TextPair> pairs) {
  std::vector<SimilarityScore> out;
  out.reserve(pairs.size());
  for (const auto& [c, r] : pairs) out.push_back(score(c, r));
  return out;
}

MockScorer::Embedding MockScorer::embed_token(std::string_view token) {
  Embedding e{};
  const std::size_t n = token.size();
  auto sym = [&](std::size_t padded) -> std::uint32_t {
    if (padded == 0 || padded == n + 1) return kBoundary;
    return static_cast<unsigned char>(token[padded - 1]);
  };
  const std::size_t trigrams = std::min(n, kMaxTrigrams);
  for (std::size_t i = 0; i < trigrams; ++i) {
    ++e[trigram_bucket(sym(i), sym(i + 1), sym(i + 2))];
  }
  return e;
}

MockScorer::Embedded MockScorer::embed_text(std::string_view text) {
  const TokenSequence tokens = tokenize(text, TokenizerMode::kRaw);
  Embedded out;
  out.rows.reserve(tokens.size() * kernels::kEmbeddingDim);
  out.norms.reserve(tokens.size());
  for (const auto& t : tokens.tokens) {
    const Embedding e = embed_token(t);
    std::int64_t norm = 0;
    for (std::int16_t v : e) norm += static_cast<std::int64_t>(v) * v;
    out.rows.insert(out.rows.end(), e.begin(), e.end());
    out.norms.push_back(norm);
  }
  return out;
}

SimilarityScore MockScorer::score_embedded(const Embedded& cand,
                                           const Embedded& ref) {
  const std::size_t m = cand.size(), n = ref.size();
  if (m == 0 || n == 0) return {};
  std::vector<std::int32_t> dots(m * n);
  kernels::dot_matrix(cand.rows, m, ref.rows, n, dots);

  std::vector<double> row_max(m, -1.0), col_max(n, -1.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // The product of squared norms is exact in double, so cos(x, x) == 1.
      const double denom =
          std::sqrt(static_cast<double>(cand.norms[i] * ref.norms[j]));
      const double cos = static_cast<double>(dots[i * n + j]) / denom;
      if (cos > row_max[i]) row_max[i] = cos;
      if (cos > col_max[j]) col_max[j] = cos;
    }
  }
  double p = 0.0, r = 0.0;
  for (double v : row_max) p += v;
  for (double v : col_max) r += v;
  p /= static_cast<double>(m);
  r /= static_cast<double>(n);
  const double f1 = (p + r) > 0.0 ? 2.0 * (p * r) / (p + r) : 0.0;
  return {p, r, f1};
}

SimilarityScore MockScorer::score(std::string_view candidate,
                                  std::string_view reference) {
  require_non_empty(candidate, reference);
  return score_embedded(embed_text(candidate), embed_text(reference));
}

}  // namespace sumattack
