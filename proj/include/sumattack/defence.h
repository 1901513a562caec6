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

#ifndef SUMATTACK_DEFENCE_H_
#define SUMATTACK_DEFENCE_H_

// Input sanitization applied before scoring.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sumattack {

struct DefenceThresholds {
  double max_non_alnum_ratio = 0.3;
  std::size_t max_non_alnum_run = 5;
  double max_fragment_ratio = 0.4;

  void validate() const;
};

// Reason identifiers.
inline constexpr const char* kReasonNonAlnumRatio = "non_alnum_ratio";
inline constexpr const char* kReasonNonAlnumRun = "non_alnum_run";
inline constexpr const char* kReasonFragments = "fragment_count";

struct DefenceVerdict {
  bool passed = true;
  std::vector<std::string> reasons;
  double non_alnum_ratio = 0.0;     // symbol bytes / non-whitespace bytes
  std::size_t max_non_alnum_run = 0;  // whitespace neither counts nor breaks
  std::size_t fragment_count = 0;
  std::size_t sentence_count = 0;
};

// A sentence (split after . ! ?) counts as a fragment when it ends in a
// period and has fewer than three alphabetic words, ends on a dangling
// function word or a lone letter, or has its period detached by whitespace.
DefenceVerdict sanitize(std::string_view text, const DefenceThresholds& thresholds = {});

std::vector<std::string> split_sentences(std::string_view text);
bool is_fragment(std::string_view sentence);

struct DependencyTriple {
  std::string head;
  std::string relation;
  std::string dependent;

  friend auto operator<=>(const DependencyTriple&, const DependencyTriple&) = default;
};

class ParseProvider {
 public:
  virtual ~ParseProvider() = default;
  // Must be deterministic per input.
  virtual std::vector<DependencyTriple> parse(std::string_view text) = 0;
};

// Stand-in with no grammar: (previous token, "adjacent", token) per token,
// "<root>" heading the first.
class AdjacencyParseProvider final : public ParseProvider {
 public:
  std::vector<DependencyTriple> parse(std::string_view text) override;
};

// Multiset F1 over the two triple bags; 0 when either side is empty.
double dependency_triple_f1(std::string_view candidate, std::string_view reference,
                            ParseProvider& provider);

}  // namespace sumattack

#endif  // SUMATTACK_DEFENCE_H_
