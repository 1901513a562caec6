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

#ifndef SUMATTACK_ROUGE_ATTACK_H_
#define SUMATTACK_ROUGE_ATTACK_H_

// White-box attack on ROUGE/METEOR: predict the reference's bag of words,
// then rebuild a token sequence from the longest salient runs of the
// document.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumattack/corpus.h"
#include "sumattack/text_core.h"

namespace sumattack {

// Predicted bag of reference words. Counts are 1 or 2.
class WordBag {
 public:
  static constexpr std::size_t kMaxCount = 2;

  // Throws std::invalid_argument if the count would exceed kMaxCount.
  void add(const std::string& token, std::size_t times = 1);
  // Saturating removal.
  void remove(const std::string& token, std::size_t times = 1);

  std::size_t count(const std::string& token) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::map<std::string, std::size_t>& counts() const { return counts_; }

  friend bool operator==(const WordBag&, const WordBag&) = default;

 private:
  std::map<std::string, std::size_t> counts_;
  std::size_t size_ = 0;
};

enum class BagPredictorKind { kOracle, kFrequency };

struct PredictorConfig {
  BagPredictorKind kind = BagPredictorKind::kOracle;
  std::size_t frequency_k = 40;
};

// oracle: min(count in reference, count in document, 2) per token.
// frequency: the k most frequent non-stop-list document tokens, count 1,
// ties broken by first occurrence. Oracle without a reference throws
// std::invalid_argument.
WordBag predict_bag(const TokenSequence& document,
                    const std::optional<TokenSequence>& reference,
                    const PredictorConfig& config);

// The bundled function-word stop-list (lowercase).
const std::vector<std::string>& stop_words();

struct RunSequence {
  TokenSequence tokens;  // concatenated runs, spans point into the document
  // Half-open document index ranges of the emitted runs, in emission order.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
};

// Repeatedly takes the longest window of consecutive document tokens whose
// multiset fits in the remaining bag (earliest on ties), appends it and
// removes its tokens, until the bag is empty or the best window is shorter
// than c_min. Throws std::invalid_argument if c_min == 0.
RunSequence bag_to_sequence(const TokenSequence& document, const WordBag& bag,
                            std::size_t c_min);

struct AttackConfig {
  std::size_t c_min = 3;
  PredictorConfig predictor;
};

// Runs are rendered with the document's original casing, each run closed by
// a period and separated by one space.
std::string render_runs(std::string_view document, const RunSequence& runs);

std::string attack_rouge(const CorpusPair& pair, const AttackConfig& config);

}  // namespace sumattack

#endif  // SUMATTACK_ROUGE_ATTACK_H_
