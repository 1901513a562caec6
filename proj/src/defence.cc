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

#include "sumattack/defence.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "sumattack/kernels/kernels.h"
#include "sumattack/text_core.h"

namespace sumattack {
namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Closed-class words that do not end an English sentence.
const std::set<std::string>& dangling_words() {
  static const std::set<std::string> words = {
      "a",    "an",   "the",  "and",   "or",    "but",  "nor",   "of",
      "in",   "on",   "at",   "to",    "for",   "from", "with",  "by",
      "into", "onto", "upon", "about", "after", "than", "since", "as",
      "if",   "that", "which", "whose", "his",  "her",  "their", "its",
      "our",  "my",   "your", "is",    "are",   "was",  "were",  "been",
      "be",   "has",  "have", "had"};
  return words;
}

}  // namespace

void DefenceThresholds::validate() const {
  auto fraction = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!fraction(max_non_alnum_ratio)) {
    throw std::invalid_argument("max_non_alnum_ratio must be in [0, 1]");
  }
  if (!fraction(max_fragment_ratio)) {
    throw std::invalid_argument("max_fragment_ratio must be in [0, 1]");
  }
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view s = text.substr(start, end - start);
    const auto b = s.find_first_not_of(" \t\n\v\f\r");
    if (b != std::string_view::npos) {
      const auto e = s.find_last_not_of(" \t\n\v\f\r");
      out.emplace_back(s.substr(b, e - b + 1));
    }
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i + 1;
    while (j < text.size() && (text[j] == '.' || text[j] == '!' || text[j] == '?' ||
                               text[j] == '"' || text[j] == '\'' || text[j] == ')')) {
      ++j;
    }
    if (j == text.size() || is_ascii_space(text[j])) {
      flush(j);
      i = j - 1;
    }
  }
  flush(text.size());
  return out;
}

bool is_fragment(std::string_view sentence) {
  if (sentence.empty() || sentence.back() != '.') return false;
  std::vector<std::string> words;
  std::size_t last_start = 0;
  for (std::size_t i = 0; i < sentence.size();) {
    if (!is_alpha(sentence[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < sentence.size() && is_alpha(sentence[j])) ++j;
    std::string w(sentence.substr(i, j - i));
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    words.push_back(std::move(w));
    last_start = i;
    i = j;
  }
  if (words.size() < 3) return true;
  const std::size_t stop = sentence.find_last_not_of(".");
  if (stop == std::string_view::npos || is_ascii_space(sentence[stop])) return true;
  if (!is_ascii_alnum(sentence[stop])) return false;
  const std::string& last = words.back();
  // "U.S." is an abbreviation, "he s." is not.
  const bool abbreviation = last_start > 0 && sentence[last_start - 1] == '.';
  return (last.size() == 1 && !abbreviation) || dangling_words().count(last) != 0;
}

DefenceVerdict sanitize(std::string_view text, const DefenceThresholds& thresholds) {
  DefenceVerdict v;
  std::vector<std::uint8_t> classes(text.size());
  kernels::classify_bytes(
      {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()}, classes);
  std::size_t visible = 0, symbols = 0, run = 0;
  for (std::uint8_t c : classes) {
    if (c == kernels::kSpace) continue;
    ++visible;
    if (c == kernels::kSymbol) {
      ++symbols;
      v.max_non_alnum_run = std::max(v.max_non_alnum_run, ++run);
    } else {
      run = 0;
    }
  }
  v.non_alnum_ratio = visible == 0 ? 0.0 : static_cast<double>(symbols) / visible;

  const auto sentences = split_sentences(text);
  v.sentence_count = sentences.size();
  for (const auto& s : sentences) v.fragment_count += is_fragment(s) ? 1 : 0;

  if (v.non_alnum_ratio > thresholds.max_non_alnum_ratio) {
    v.reasons.emplace_back(kReasonNonAlnumRatio);
  }
  if (v.max_non_alnum_run > thresholds.max_non_alnum_run) {
    v.reasons.emplace_back(kReasonNonAlnumRun);
  }
  if (v.sentence_count > 0 &&
      static_cast<double>(v.fragment_count) / v.sentence_count >
          thresholds.max_fragment_ratio) {
    v.reasons.emplace_back(kReasonFragments);
  }
  v.passed = v.reasons.empty();
  return v;
}

std::vector<DependencyTriple> AdjacencyParseProvider::parse(std::string_view text) {
  const TokenSequence toks = tokenize(text, TokenizerMode::kRouge);
  std::vector<DependencyTriple> out;
  out.reserve(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) {
    out.push_back({i == 0 ? "<root>" : toks[i - 1], "adjacent", toks[i]});
  }
  return out;
}

double dependency_triple_f1(std::string_view candidate, std::string_view reference,
                            ParseProvider& provider) {
  std::map<DependencyTriple, std::size_t> a, b;
  std::size_t na = 0, nb = 0;
  for (auto& t : provider.parse(candidate)) ++a[std::move(t)], ++na;
  for (auto& t : provider.parse(reference)) ++b[std::move(t)], ++nb;
  if (na == 0 || nb == 0) return 0.0;
  std::size_t overlap = 0;
  for (const auto& [t, c] : a) {
    auto it = b.find(t);
    if (it != b.end()) overlap += std::min(c, it->second);
  }
  return 2.0 * static_cast<double>(overlap) / static_cast<double>(na + nb);
}

}  // namespace sumattack
