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

#ifndef SUMATTACK_TEXT_CORE_H_
#define SUMATTACK_TEXT_CORE_H_

// Tokenization and n-gram bag algebra shared by every metric and attack.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sumattack {

// Half-open byte range [begin, end) into the text a sequence came from.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

// Ordered tokens with their source offsets. Spans are strictly increasing
// and non-overlapping; tokens and spans always have equal length.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::vector<Span> spans;

  // Builds a sequence from bare tokens; spans are those of the tokens joined
  // by single spaces.
  static TokenSequence of(std::vector<std::string> tokens);

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens[i]; }
};

enum class TokenizerMode {
  kRouge,   // lowercase maximal runs of ASCII alphanumerics; rest discarded
  kMeteor,  // lowercase words, each punctuation character its own token
  kRaw,     // whitespace split, case and content preserved
};

TokenSequence tokenize(std::string_view text, TokenizerMode mode);

bool is_ascii_alnum(char c);
bool is_ascii_space(char c);
// True if any byte of `s` is an ASCII letter or digit.
bool has_alnum(std::string_view s);

using NGram = std::vector<std::string>;

// Multiset of contiguous n-token windows.
class NGramBag {
 public:
  explicit NGramBag(std::size_t n);  // n == 0 throws std::invalid_argument

  std::size_t n() const { return n_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t count(const NGram& gram) const;
  const std::map<NGram, std::size_t>& counts() const { return counts_; }

  void add(const NGram& gram, std::size_t times = 1);

  friend bool operator==(const NGramBag&, const NGramBag&) = default;

 private:
  std::size_t n_;
  std::size_t size_ = 0;
  std::map<NGram, std::size_t> counts_;
};

NGramBag ngram_bag(const TokenSequence& seq, std::size_t n);

// Sum over keys of min(count_1, count_2). Mismatched n throws.
std::size_t bag_intersection_size(const NGramBag& a, const NGramBag& b);

// Inputs longer than this are rejected by lcs() to bound DP memory.
inline constexpr std::size_t kMaxLcsTokens = 10000;

std::size_t lcs(const TokenSequence& a, const TokenSequence& b);
std::size_t lcs(const std::vector<std::string>& a,
                const std::vector<std::string>& b);

// Indices into `a` of one longest common subsequence of a and b. Ties are
// broken the way the reference rouge-score package backtracks.
std::vector<std::size_t> lcs_positions(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b);

}  // namespace sumattack

#endif  // SUMATTACK_TEXT_CORE_H_
