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

#ifndef SUMATTACK_METRICS_H_
#define SUMATTACK_METRICS_H_

// Lexical summary-scoring metrics. All scores are fractions in [0, 1];
// reports render them as percentages.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sumattack/text_core.h"

namespace sumattack {

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;

  // Throws std::invalid_argument unless alpha in (0,1), beta > 0,
  // gamma in [0,1].
  void validate() const;
};

struct RougeMeans {
  double am = 0.0;
  double gm = 0.0;
};

struct MetricReport {
  std::optional<double> rouge1;
  std::optional<double> rouge2;
  std::optional<double> rougeL;
  std::optional<double> meteor;
  std::optional<double> similarity;
  std::optional<double> rouge_am;
  std::optional<double> rouge_gm;
};

// F-measure over n-gram multisets: 2 * clipped overlap / (cand n-grams + ref n-grams), 0 when
// both bags are empty.
double rouge_n(const TokenSequence& cand, const TokenSequence& ref,
               std::size_t n);

// 2 lcs(c, r) / (|c| + |r|), 0 when both are empty.
double rouge_l(const TokenSequence& cand, const TokenSequence& ref);

// Summary-level ROUGE-L: for each reference sentence, the union of its LCS
// positions against every candidate sentence, hits clipped by the global
// token counts of both sides (the rouge-score "Lsum" rule). Reduces to
// rouge_l when each side is a single sentence.
double rouge_lsum(const std::vector<TokenSequence>& cand_sentences,
                  const std::vector<TokenSequence>& ref_sentences);

// Splits a candidate summary into sentences: at newlines, and after
// '.', '!' or '?' when followed by whitespace and an uppercase letter.
std::vector<std::string_view> split_summary_sentences(std::string_view text);

// Staged unigram alignment (exact, then Porter stem), fragmentation
// penalty and weighted harmonic mean. Tokens without any ASCII alphanumeric
// character take no part in alignment or in the lengths.
double meteor(const TokenSequence& cand, const TokenSequence& ref,
              const MeteorParams& params = {});

struct MeteorAlignment {
  std::size_t matches = 0;
  std::size_t chunks = 0;
  std::size_t cand_length = 0;
  std::size_t ref_length = 0;
  // (candidate index, reference index) into the filtered sequences, sorted
  // by candidate index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
MeteorAlignment meteor_align(const TokenSequence& cand,
                             const TokenSequence& ref);

RougeMeans aggregate(double rouge1, double rouge2, double rougeL);

// Tokenizes both texts and fills rouge1/2/L (summary-level L), meteor and the
// ROUGE means. similarity stays empty.
MetricReport score_pair(std::string_view candidate, std::string_view reference,
                        const MeteorParams& params = {});

}  // namespace sumattack

#endif  // SUMATTACK_METRICS_H_
