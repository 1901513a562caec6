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

#include "sumattack/rouge_attack.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sumattack {

// Generated from data/stopwords.txt at configure time.
extern const char kStopWordsText[];

namespace {

std::map<std::string, std::size_t> token_counts(const TokenSequence& seq) {
  std::map<std::string, std::size_t> counts;
  for (const auto& t : seq.tokens) ++counts[t];
  return counts;
}

}  // namespace

void WordBag::add(const std::string& token, std::size_t times) {
  if (times == 0) return;
  std::size_t& c = counts_[token];
  if (c + times > kMaxCount) {
    throw std::invalid_argument("word bag count above " +
                                std::to_string(kMaxCount) + " for '" + token + "'");
  }
  c += times;
  size_ += times;
}

void WordBag::remove(const std::string& token, std::size_t times) {
  auto it = counts_.find(token);
  if (it == counts_.end()) return;
  const std::size_t taken = std::min(times, it->second);
  it->second -= taken;
  size_ -= taken;
  if (it->second == 0) counts_.erase(it);
}

std::size_t WordBag::count(const std::string& token) const {
  auto it = counts_.find(token);
  return it == counts_.end() ? 0 : it->second;
}

const std::vector<std::string>& stop_words() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out;
    std::istringstream in(kStopWordsText);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      out.push_back(line);
    }
    return out;
  }();
  return words;
}

WordBag predict_bag(const TokenSequence& document,
                    const std::optional<TokenSequence>& reference,
                    const PredictorConfig& config) {
  WordBag bag;
  switch (config.kind) {
    case BagPredictorKind::kOracle: {
      if (!reference) {
        throw std::invalid_argument("oracle bag predictor needs a reference");
      }
      const auto doc_counts = token_counts(document);
      for (const auto& [token, ref_count] : token_counts(*reference)) {
        auto it = doc_counts.find(token);
        if (it == doc_counts.end()) continue;
        bag.add(token, std::min({ref_count, it->second, WordBag::kMaxCount}));
      }
      break;
    }
    case BagPredictorKind::kFrequency: {
      const auto& stops = stop_words();
      const std::unordered_set<std::string> stop_set(stops.begin(), stops.end());
      struct Candidate {
        std::string token;
        std::size_t count = 0;
        std::size_t first = 0;
      };
      std::unordered_map<std::string, std::size_t> index;
      std::vector<Candidate> candidates;
      for (std::size_t i = 0; i < document.size(); ++i) {
        const std::string& t = document[i];
        if (stop_set.count(t) != 0) continue;
        auto [it, inserted] = index.emplace(t, candidates.size());
        if (inserted) candidates.push_back({t, 0, i});
        ++candidates[it->second].count;
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) {
                         if (a.count != b.count) return a.count > b.count;
                         return a.first < b.first;
                       });
      const std::size_t k = std::min(config.frequency_k, candidates.size());
      for (std::size_t i = 0; i < k; ++i) bag.add(candidates[i].token);
      break;
    }
  }
  return bag;
}

RunSequence bag_to_sequence(const TokenSequence& document, const WordBag& bag,
                            std::size_t c_min) {
  if (c_min == 0) throw std::invalid_argument("c_min must be positive");
  WordBag remaining = bag;
  RunSequence out;
  std::unordered_map<std::string, std::size_t> window;
  while (!remaining.empty()) {
    // Longest window whose token multiset fits in the remaining bag.
    std::size_t best_begin = 0, best_len = 0, left = 0;
    window.clear();
    for (std::size_t right = 0; right < document.size(); ++right) {
      const std::string& t = document[right];
      const std::size_t allowed = remaining.count(t);
      if (allowed == 0) {
        window.clear();
        left = right + 1;
        continue;
      }
      std::size_t& in_window = ++window[t];
      while (in_window > allowed) {
        --window[document[left]];
        ++left;
      }
      if (right + 1 - left > best_len) {
        best_len = right + 1 - left;
        best_begin = left;
      }
    }
    if (best_len < c_min) break;
    for (std::size_t i = best_begin; i < best_begin + best_len; ++i) {
      out.tokens.tokens.push_back(document.tokens[i]);
      out.tokens.spans.push_back(document.spans[i]);
      remaining.remove(document.tokens[i]);
    }
    out.runs.emplace_back(best_begin, best_begin + best_len);
  }
  return out;
}

std::string render_runs(std::string_view document, const RunSequence& runs) {
  std::string out;
  std::size_t k = 0;
  for (const auto& [begin, end] : runs.runs) {
    if (!out.empty()) out.push_back(' ');
    for (std::size_t i = begin; i < end; ++i, ++k) {
      if (i != begin) out.push_back(' ');
      const Span& s = runs.tokens.spans[k];
      out.append(document.substr(s.begin, s.end - s.begin));
    }
    out.push_back('.');
  }
  return out;
}

std::string attack_rouge(const CorpusPair& pair, const AttackConfig& config) {
  const TokenSequence document = tokenize(pair.document, TokenizerMode::kRouge);
  if (document.empty()) {
    throw std::invalid_argument("attack_rouge: document '" + pair.id +
                                "' has no tokens");
  }
  std::optional<TokenSequence> reference;
  if (config.predictor.kind == BagPredictorKind::kOracle) {
    reference = tokenize(pair.reference, TokenizerMode::kRouge);
  }
  const WordBag bag = predict_bag(document, reference, config.predictor);
  return render_runs(pair.document, bag_to_sequence(document, bag, config.c_min));
}

}  // namespace sumattack
