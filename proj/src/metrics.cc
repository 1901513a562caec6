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

#include "sumattack/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sumattack/porter_stemmer.h"

namespace sumattack {
namespace {

double f_measure(std::size_t overlap, std::size_t size_a, std::size_t size_b) {
  const std::size_t denom = size_a + size_b;
  if (denom == 0) return 0.0;
  return 2.0 * static_cast<double>(overlap) / static_cast<double>(denom);
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

struct Indexed {
  std::size_t index;
  std::string word;
};

// One alignment stage: scan the candidate from the back and pair each word
// with the latest still-unused reference position of the same form.
void match_stage(std::vector<Indexed>& cand, std::vector<Indexed>& ref,
                 std::vector<std::pair<std::size_t, std::size_t>>& out) {
  std::unordered_map<std::string, std::vector<std::size_t>> positions;
  for (std::size_t j = 0; j < ref.size(); ++j) {
    positions[ref[j].word].push_back(j);
  }
  std::vector<bool> cand_used(cand.size(), false), ref_used(ref.size(), false);
  for (std::size_t i = cand.size(); i-- > 0;) {
    auto it = positions.find(cand[i].word);
    if (it == positions.end() || it->second.empty()) continue;
    const std::size_t j = it->second.back();
    it->second.pop_back();
    cand_used[i] = true;
    ref_used[j] = true;
    out.emplace_back(cand[i].index, ref[j].index);
  }
  auto compact = [](std::vector<Indexed>& v, const std::vector<bool>& used) {
    std::vector<Indexed> kept;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!used[k]) kept.push_back(std::move(v[k]));
    }
    v = std::move(kept);
  };
  compact(cand, cand_used);
  compact(ref, ref_used);
}

std::vector<Indexed> alignable(const TokenSequence& seq) {
  std::vector<Indexed> out;
  for (const auto& t : seq.tokens) {
    if (has_alnum(t)) out.push_back({out.size(), t});
  }
  return out;
}

}  // namespace

void MeteorParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("METEOR alpha must lie in (0, 1)");
  }
  if (!(beta > 0.0)) throw std::invalid_argument("METEOR beta must be > 0");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("METEOR gamma must lie in [0, 1]");
  }
}

double rouge_n(const TokenSequence& cand, const TokenSequence& ref,
               std::size_t n) {
  const NGramBag a = ngram_bag(cand, n);
  const NGramBag b = ngram_bag(ref, n);
  return f_measure(bag_intersection_size(a, b), a.size(), b.size());
}

double rouge_l(const TokenSequence& cand, const TokenSequence& ref) {
  return f_measure(lcs(cand, ref), cand.size(), ref.size());
}

double rouge_lsum(const std::vector<TokenSequence>& cand_sentences,
                  const std::vector<TokenSequence>& ref_sentences) {
  std::map<std::string, std::size_t> cand_counts, ref_counts;
  std::size_t cand_len = 0, ref_len = 0;
  for (const auto& s : cand_sentences) {
    for (const auto& t : s.tokens) ++cand_counts[t];
    cand_len += s.size();
  }
  for (const auto& s : ref_sentences) {
    for (const auto& t : s.tokens) ++ref_counts[t];
    ref_len += s.size();
  }
  std::size_t hits = 0;
  for (const auto& r : ref_sentences) {
    std::set<std::size_t> united;
    for (const auto& c : cand_sentences) {
      for (std::size_t p : lcs_positions(r.tokens, c.tokens)) united.insert(p);
    }
    for (std::size_t p : united) {
      const std::string& t = r.tokens[p];
      auto ci = cand_counts.find(t);
      auto ri = ref_counts.find(t);
      if (ci != cand_counts.end() && ri != ref_counts.end() && ci->second > 0 &&
          ri->second > 0) {
        ++hits;
        --ci->second;
        --ri->second;
      }
    }
  }
  return f_measure(hits, cand_len, ref_len);
}

std::vector<std::string_view> split_summary_sentences(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (text[i] == '\n') {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
      continue;
    }
    if (text[i] != '.' && text[i] != '!' && text[i] != '?') continue;
    std::size_t j = i + 1;
    while (j < n && is_ascii_space(text[j]) && text[j] != '\n') ++j;
    if (j > i + 1 && j < n && is_upper(text[j])) {
      out.push_back(text.substr(start, i + 1 - start));
      start = j;
      i = j - 1;
    }
  }
  if (start < n) out.push_back(text.substr(start));
  return out;
}

MeteorAlignment meteor_align(const TokenSequence& cand,
                             const TokenSequence& ref) {
  std::vector<Indexed> c = alignable(cand), r = alignable(ref);
  MeteorAlignment result;
  result.cand_length = c.size();
  result.ref_length = r.size();
  match_stage(c, r, result.pairs);
  for (auto& x : c) x.word = porter_stem(x.word);
  for (auto& x : r) x.word = porter_stem(x.word);
  match_stage(c, r, result.pairs);
  std::sort(result.pairs.begin(), result.pairs.end());
  result.matches = result.pairs.size();
  if (result.matches > 0) {
    result.chunks = 1;
    for (std::size_t k = 0; k + 1 < result.pairs.size(); ++k) {
      const auto& [ci, ri] = result.pairs[k];
      const auto& [cn, rn] = result.pairs[k + 1];
      if (!(cn == ci + 1 && rn == ri + 1)) ++result.chunks;
    }
  }
  return result;
}

double meteor(const TokenSequence& cand, const TokenSequence& ref,
              const MeteorParams& params) {
  params.validate();
  const MeteorAlignment a = meteor_align(cand, ref);
  if (a.matches == 0) return 0.0;
  const double m = static_cast<double>(a.matches);
  const double precision = m / static_cast<double>(a.cand_length);
  const double recall = m / static_cast<double>(a.ref_length);
  const double fmean = precision * recall /
                       (params.alpha * precision + (1.0 - params.alpha) * recall);
  const double frag = static_cast<double>(a.chunks) / m;
  const double penalty = params.gamma * std::pow(frag, params.beta);
  return (1.0 - penalty) * fmean;
}

RougeMeans aggregate(double rouge1, double rouge2, double rougeL) {
  const double am = (rouge1 + rouge2 + rougeL) / 3.0;
  // AM >= GM holds exactly; the clamp only absorbs cbrt rounding.
  return {am, std::min(am, std::cbrt(rouge1 * rouge2 * rougeL))};
}

MetricReport score_pair(std::string_view candidate, std::string_view reference,
                        const MeteorParams& params) {
  const TokenSequence c = tokenize(candidate, TokenizerMode::kRouge);
  const TokenSequence r = tokenize(reference, TokenizerMode::kRouge);

  std::vector<TokenSequence> cand_sents, ref_sents;
  for (auto s : split_summary_sentences(candidate)) {
    cand_sents.push_back(tokenize(s, TokenizerMode::kRouge));
  }
  std::size_t start = 0;
  while (start <= reference.size()) {
    std::size_t nl = reference.find('\n', start);
    if (nl == std::string_view::npos) nl = reference.size();
    ref_sents.push_back(
        tokenize(reference.substr(start, nl - start), TokenizerMode::kRouge));
    start = nl + 1;
  }

  MetricReport report;
  report.rouge1 = rouge_n(c, r, 1);
  report.rouge2 = rouge_n(c, r, 2);
  report.rougeL = rouge_lsum(cand_sents, ref_sents);
  report.meteor = meteor(tokenize(candidate, TokenizerMode::kMeteor),
                         tokenize(reference, TokenizerMode::kMeteor), params);
  const RougeMeans means = aggregate(*report.rouge1, *report.rouge2, *report.rougeL);
  report.rouge_am = means.am;
  report.rouge_gm = means.gm;
  return report;
}

}  // namespace sumattack
