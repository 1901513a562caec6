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

#include "sumattack/text_core.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sumattack {
namespace {

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool is_meteor_word_byte(char c) {
  return is_ascii_alnum(c) || static_cast<unsigned char>(c) >= 0x80;
}

void push_token(TokenSequence& seq, std::string_view text, std::size_t begin,
                std::size_t end, bool lower) {
  std::string token(text.substr(begin, end - begin));
  if (lower) {
    for (char& c : token) c = ascii_lower(c);
  }
  seq.tokens.push_back(std::move(token));
  seq.spans.push_back({begin, end});
}

void check_lcs_input(std::size_t a, std::size_t b) {
  if (a > kMaxLcsTokens || b > kMaxLcsTokens) {
    throw std::invalid_argument("lcs: input longer than " +
                                std::to_string(kMaxLcsTokens) + " tokens");
  }
}

}  // namespace

bool is_ascii_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

bool is_ascii_space(char c) { return c == ' ' || (c >= '\t' && c <= '\r'); }

bool has_alnum(std::string_view s) {
  return std::any_of(s.begin(), s.end(), is_ascii_alnum);
}

TokenSequence TokenSequence::of(std::vector<std::string> tokens) {
  TokenSequence seq;
  std::size_t offset = 0;
  seq.spans.reserve(tokens.size());
  for (const auto& t : tokens) {
    seq.spans.push_back({offset, offset + t.size()});
    offset += t.size() + 1;
  }
  seq.tokens = std::move(tokens);
  return seq;
}

TokenSequence tokenize(std::string_view text, TokenizerMode mode) {
  TokenSequence seq;
  const std::size_t n = text.size();
  std::size_t i = 0;
  switch (mode) {
    case TokenizerMode::kRouge:
      while (i < n) {
        if (!is_ascii_alnum(text[i])) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < n && is_ascii_alnum(text[j])) ++j;
        push_token(seq, text, i, j, /*lower=*/true);
        i = j;
      }
      break;
    case TokenizerMode::kMeteor:
      while (i < n) {
        if (is_ascii_space(text[i])) {
          ++i;
        } else if (is_meteor_word_byte(text[i])) {
          std::size_t j = i;
          while (j < n && is_meteor_word_byte(text[j])) ++j;
          push_token(seq, text, i, j, /*lower=*/true);
          i = j;
        } else {
          push_token(seq, text, i, i + 1, /*lower=*/false);
          ++i;
        }
      }
      break;
    case TokenizerMode::kRaw:
      while (i < n) {
        if (is_ascii_space(text[i])) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < n && !is_ascii_space(text[j])) ++j;
        push_token(seq, text, i, j, /*lower=*/false);
        i = j;
      }
      break;
  }
  return seq;
}

NGramBag::NGramBag(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("n-gram order must be positive");
}

std::size_t NGramBag::count(const NGram& gram) const {
  auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

void NGramBag::add(const NGram& gram, std::size_t times) {
  if (gram.size() != n_) {
    throw std::invalid_argument("n-gram has wrong order for this bag");
  }
  if (times == 0) return;
  counts_[gram] += times;
  size_ += times;
}

NGramBag ngram_bag(const TokenSequence& seq, std::size_t n) {
  NGramBag bag(n);
  if (seq.size() < n) return bag;
  NGram window;
  for (std::size_t i = 0; i + n <= seq.size(); ++i) {
    window.assign(seq.tokens.begin() + static_cast<std::ptrdiff_t>(i),
                  seq.tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    bag.add(window);
  }
  return bag;
}

std::size_t bag_intersection_size(const NGramBag& a, const NGramBag& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("bag intersection of different n-gram orders");
  }
  const NGramBag& small = a.counts().size() <= b.counts().size() ? a : b;
  const NGramBag& large = &small == &a ? b : a;
  std::size_t total = 0;
  for (const auto& [gram, c] : small.counts()) {
    total += std::min(c, large.count(gram));
  }
  return total;
}

std::size_t lcs(const TokenSequence& a, const TokenSequence& b) {
  return lcs(a.tokens, b.tokens);
}

std::size_t lcs(const std::vector<std::string>& a,
                const std::vector<std::string>& b) {
  check_lcs_input(a.size(), b.size());
  if (a.empty() || b.empty()) return 0;
  // Two rolling rows over the shorter sequence.
  const auto& outer = a.size() >= b.size() ? a : b;
  const auto& inner = &outer == &a ? b : a;
  std::vector<std::size_t> prev(inner.size() + 1, 0), cur(inner.size() + 1, 0);
  for (const auto& x : outer) {
    for (std::size_t j = 1; j <= inner.size(); ++j) {
      cur[j] = x == inner[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[inner.size()];
}

std::vector<std::size_t> lcs_positions(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  check_lcs_input(a.size(), b.size());
  const std::size_t rows = a.size() + 1, cols = b.size() + 1;
  std::vector<std::size_t> table(rows * cols, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return table[i * cols + j];
  };
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      at(i, j) = a[i - 1] == b[j - 1] ? at(i - 1, j - 1) + 1
                                      : std::max(at(i - 1, j), at(i, j - 1));
    }
  }
  std::vector<std::size_t> out;
  std::size_t i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    if (a[i - 1] == b[j - 1]) {
      out.push_back(i - 1);
      --i;
      --j;
    } else if (at(i, j - 1) > at(i - 1, j)) {
      --j;
    } else {
      --i;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace sumattack
