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

// Acceptance gate: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fixtures.h"
#include "sumattack/combined_attack.h"
#include "sumattack/corpus.h"
#include "sumattack/defence.h"
#include "sumattack/harness.h"
#include "sumattack/metrics.h"
#include "sumattack/rouge_attack.h"
#include "sumattack/similarity.h"
#include "sumattack/text_core.h"
#include "sumattack/trigger_search.h"

namespace sumattack {
namespace {

constexpr double kLexicalTolerance = 2.0;  // points
constexpr double kMeteorTolerance = 3.0;   // points
constexpr double kOracleBudgetSeconds = 10.0;
constexpr double kAlgorithmBudgetSeconds = 5.0;
constexpr double kFitBudgetSeconds = 60.0;

const std::filesystem::path kData = SUMATTACK_DATA_DIR;

using Clock = std::chrono::steady_clock;
using Words = std::vector<std::string>;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Brute-force oracles.

std::map<Words, std::size_t> ngram_multiset(const Words& w, std::size_t n) {
  std::map<Words, std::size_t> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) ++out[Words(w.begin() + i, w.begin() + i + n)];
  return out;
}

bool is_subsequence(const Words& sub, const Words& seq) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < seq.size() && j < sub.size(); ++i) {
    if (seq[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

std::size_t brute_lcs(const Words& a, const Words& b) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    Words sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (1u << i)) sub.push_back(a[i]);
    }
    if (sub.size() > best && is_subsequence(sub, b)) best = sub.size();
  }
  return best;
}

double f_of(std::size_t overlap, std::size_t na, std::size_t nb) {
  if (na + nb == 0) return 0.0;
  return 2.0 * static_cast<double>(overlap) / static_cast<double>(na + nb);
}

double brute_rouge_n(const Words& c, const Words& r, std::size_t n) {
  const auto bc = ngram_multiset(c, n), br = ngram_multiset(r, n);
  std::size_t inter = 0, nc = 0, nr = 0;
  for (const auto& [g, k] : bc) {
    nc += k;
    if (auto it = br.find(g); it != br.end()) inter += std::min(k, it->second);
  }
  for (const auto& [g, k] : br) nr += k;
  return f_of(inter, nc, nr);
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(1001);
  const auto t0 = Clock::now();
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const Words a = testing::random_tokens(rng, 8, 3);
    const Words b = testing::random_tokens(rng, 8, 3);
    const auto ta = TokenSequence::of(a), tb = TokenSequence::of(b);
    for (std::size_t n : {1u, 2u}) {
      o.check(rouge_n(ta, tb, n) == brute_rouge_n(a, b, n),
              "rouge_" + std::to_string(n) + " mismatch at pair " + std::to_string(i));
    }
    o.check(rouge_l(ta, tb) == f_of(brute_lcs(a, b), a.size(), b.size()),
            "rouge_l mismatch at pair " + std::to_string(i));
  }
  const double s = seconds_since(t0);
  o.check(s < kOracleBudgetSeconds, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "1000 pairs exact in " + fmt_seconds(s);
  return o;
}

Outcome broken_example_lexical() {
  Outcome o;
  const auto r = score_pair(testing::kBroken, testing::kGold);
  const double r1 = 100 * *r.rouge1, r2 = 100 * *r.rouge2, rl = 100 * *r.rougeL;
  const double m = 100 * *r.meteor;
  char buf[160];
  std::snprintf(buf, sizeof buf, "R-1 %.2f (56.84) R-2 %.2f (21.51) R-L %.2f (44.21) METEOR %.2f (47.26)",
                r1, r2, rl, m);
  o.check(std::abs(r1 - 56.84) <= kLexicalTolerance, "");
  o.check(std::abs(r2 - 21.51) <= kLexicalTolerance, "");
  o.check(std::abs(rl - 44.21) <= kLexicalTolerance, "");
  o.check(std::abs(m - 47.26) <= kMeteorTolerance, "");
  o.detail = buf;
  return o;
}

std::map<std::string, std::size_t> counts_of(const std::vector<std::string>& w) {
  std::map<std::string, std::size_t> out;
  for (const auto& t : w) ++out[t];
  return out;
}

bool runs_valid(const TokenSequence& doc, const WordBag& bag, const RunSequence& out,
                std::size_t c_min) {
  std::vector<std::string> rebuilt;
  for (auto [b, e] : out.runs) {
    if (e > doc.size() || e - b < c_min) return false;
    rebuilt.insert(rebuilt.end(), doc.tokens.begin() + b, doc.tokens.begin() + e);
  }
  if (rebuilt != out.tokens.tokens) return false;
  for (const auto& [tok, k] : counts_of(out.tokens.tokens)) {
    if (k > bag.count(tok)) return false;
  }
  return true;
}

Outcome algorithm_one() {
  Outcome o;
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<int> len(0, 40), vocab(2, 8), cnt(0, 2);
  const auto t0 = Clock::now();
  for (int i = 0; i < 500 && o.ok; ++i) {
    const int v = vocab(rng);
    std::uniform_int_distribution<int> pick(0, v - 1);
    Words w(static_cast<std::size_t>(len(rng)));
    for (auto& t : w) t = "w" + std::to_string(pick(rng));
    const auto doc = TokenSequence::of(w);
    WordBag bag;
    for (int k = 0; k < v; ++k) {
      if (int c = cnt(rng)) bag.add("w" + std::to_string(k), static_cast<std::size_t>(c));
    }
    const auto out3 = bag_to_sequence(doc, bag, 3);
    const auto out2 = bag_to_sequence(doc, bag, 2);
    o.check(runs_valid(doc, bag, out3, 3), "C=3 instance " + std::to_string(i));
    o.check(runs_valid(doc, bag, out2, 2), "C=2 instance " + std::to_string(i));
    o.check(out2.tokens.size() >= out3.tokens.size(), "monotone instance " + std::to_string(i));
  }
  const double s = seconds_since(t0);
  o.check(s < kAlgorithmBudgetSeconds, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "500 instances in " + fmt_seconds(s);
  return o;
}

Outcome desk_corpus_attack() {
  Outcome o;
  const auto corpus = load_corpus(kData / "desk_corpus.jsonl");
  std::vector<SystemUnderTest> systems = {parse_system("lead3"),
                                          parse_system("rouge_attack:oracle:3")};
  const auto table = run_evaluation(corpus, systems);
  const auto& lead = table.rows[0];
  const auto& atk = table.rows[1];
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu pairs, attack R-1 %.2f R-L %.2f vs LEAD-3 R-1 %.2f R-L %.2f",
                corpus.size(), 100 * atk.rouge1, 100 * atk.rougeL, 100 * lead.rouge1,
                100 * lead.rougeL);
  o.check(corpus.size() == 50, "");
  o.check(atk.rouge1 > lead.rouge1 && atk.rougeL > lead.rougeL, "");
  o.detail = buf;
  return o;
}

const std::vector<std::string> kSixRefs = {
    "The council said repairs would take several months.",
    "Two men were arrested after the match.",
    "Heavy rain is expected across the region tomorrow.",
    "The company reported record profits this year.",
    "She won the race by more than a minute.",
    "Scientists have found water on a distant planet."};

Outcome ga_contract(EmulatorString& fitted) {
  Outcome o;
  MockScorer mock;
  GaConfig cfg;
  cfg.seed = 7;
  cfg.max_generations = 300;
  bool closed = true;
  auto observer = [&](const GenerationView& v) {
    for (const auto& g : v.population) {
      closed = closed && std::all_of(g.genome.begin(), g.genome.end(), in_emulator_alphabet);
    }
  };
  const auto a = ga_optimize(kSixRefs[0], mock, cfg, std::nullopt, observer);
  const auto b = ga_optimize(kSixRefs[0], mock, cfg);
  const auto& gens = a.second.rounds.at(0).best_per_generation;
  o.check(std::is_sorted(gens.begin(), gens.end()), "best fitness decreased");
  o.check(closed, "genome left the alphabet");
  o.check(a.first.genome == b.first.genome && a.first.fitness == b.first.fitness &&
              gens == b.second.rounds.at(0).best_per_generation,
          "reruns differ");

  GaConfig full;  // defaults
  const auto t0 = Clock::now();
  const auto [best, hist] = fit_to_set(kSixRefs, mock, full, 5);
  const double s = seconds_since(t0);
  o.check(hist.rounds.size() == 5, "fit_to_set ran " + std::to_string(hist.rounds.size()) + " rounds");
  const double round0 = hist.rounds.at(0).min_over_set;
  const double final_min = validate_emulator(best, kSixRefs, mock).min;
  o.check(final_min >= round0, "final min below round 0");
  o.check(s < kFitBudgetSeconds, "fit_to_set took " + std::to_string(s) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu generations monotone; fit_to_set 5 rounds %.2f s, min %.4f -> %.4f",
                gens.size(), s, round0, final_min);
  if (o.ok) o.detail = buf;
  fitted = best;
  return o;
}

Outcome combination_invariance() {
  Outcome o;
  std::mt19937_64 rng(3003);
  const auto& alpha = emulator_alphabet();
  std::uniform_int_distribution<std::size_t> glen(1, 700), sym(0, alpha.size() - 1);
  const Words vocab = {"The", "river", "rose", "council", "said", "homes", "were", "lost",
                       "in", "a", "storm", "night", "14", "people", "Flood", "town"};
  std::uniform_int_distribution<std::size_t> wl(1, 30), wp(0, vocab.size() - 1), coin(0, 5);
  auto sentence_text = [&] {
    std::string s;
    const std::size_t n = wl(rng);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ' ';
      s += vocab[wp(rng)];
      if (coin(rng) == 0) s += '.';
    }
    return s;
  };
  for (int i = 0; i < 100 && o.ok; ++i) {
    EmulatorString e;
    e.genome.resize(glen(rng));
    for (auto& c : e.genome) c = alpha[sym(rng)];
    const std::string rouge_text = sentence_text();
    const std::string ref = sentence_text();
    const auto combined = combine(e, rouge_text).full;
    const auto a = score_pair(combined, ref), b = score_pair(rouge_text, ref);
    o.check(*a.rouge1 == *b.rouge1 && *a.rouge2 == *b.rouge2 && *a.rougeL == *b.rougeL,
            "pair " + std::to_string(i) + " differs");
    const auto ta = tokenize(combined, TokenizerMode::kRouge);
    const auto tb = tokenize(rouge_text, TokenizerMode::kRouge);
    const auto tr = tokenize(ref, TokenizerMode::kRouge);
    o.check(rouge_l(ta, tr) == rouge_l(tb, tr), "plain LCS pair " + std::to_string(i));
  }
  if (o.ok) o.detail = "100 pairs exact";
  return o;
}

Outcome defence_calibration(const EmulatorString& emulator) {
  Outcome o;
  o.check(!sanitize(testing::kScrambled).passed, "scrambled passed sanitize");
  o.check(!sanitize(testing::kBroken).passed, "broken passed sanitize");
  const auto corpus = load_corpus(kData / "desk_corpus.jsonl");
  std::size_t passed = 0;
  for (const auto& p : corpus) passed += sanitize(p.reference).passed ? 1 : 0;
  o.check(passed == corpus.size(), std::to_string(passed) + " references passed");

  MockScorer mock;
  EvaluationOptions opts;
  opts.scorer = &mock;
  opts.defences_on = true;
  const auto table = run_evaluation(corpus, {parse_system("combined_attack:oracle:3", emulator)}, opts);
  const auto& row = table.rows.at(0);
  o.check(row.rouge1 == 0 && row.rouge2 == 0 && row.rougeL == 0 && row.rouge_am == 0 &&
              row.rouge_gm == 0 && row.meteor == 0 && row.similarity.value_or(1) == 0,
          "combined attack scored above zero with defences on");
  if (o.ok) {
    o.detail = "attack strings rejected, " + std::to_string(passed) +
               " references passed, combined attack all zero (" +
               std::to_string(row.sanitize_passed) + "/" + std::to_string(row.sanitize_total) +
               " sanitized)";
  }
  return o;
}

int run() {
  int failures = 0;
  auto report = [&](const char* name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %-28s %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  };
  EmulatorString fitted;
  report("rouge-oracle-equivalence", oracle_equivalence);
  report("broken-example-lexical", broken_example_lexical);
  report("bag-to-sequence-properties", algorithm_one);
  report("desk-corpus-attack-vs-lead3", desk_corpus_attack);
  report("ga-contract", [&] { return ga_contract(fitted); });
  report("combination-invariance", combination_invariance);
  report("defence-calibration", [&] { return defence_calibration(fitted); });
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace sumattack

int main() { return sumattack::run(); }
