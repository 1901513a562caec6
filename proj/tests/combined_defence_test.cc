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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"
#include "sumattack/combined_attack.h"
#include "sumattack/defence.h"
#include "sumattack/metrics.h"

namespace sumattack {
namespace {

std::string random_emulator(std::mt19937_64& rng, std::size_t n) {
  const std::string& a = emulator_alphabet();
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  std::string g(n, ' ');
  for (char& c : g) c = a[pick(rng)];
  return g;
}

TEST(Combine, ConcatenatesWithOneSpace) {
  const auto out = combine({std::string(512, '.'), 0}, "b c d");
  EXPECT_EQ(out.full.size(), 512u + 1 + 5);
  EXPECT_EQ(out.full, out.emulator_part + " " + out.rouge_part);
  EXPECT_FALSE(out.below_truncation_length);
  EXPECT_TRUE(combine({"..", 0}, "x").below_truncation_length);
}

TEST(Combine, RejectsAlphanumericEmulator) {
  EXPECT_THROW(combine({"..a..", 0}, "x"), std::invalid_argument);
  EXPECT_THROW(combine({"..7..", 0}, "x"), std::invalid_argument);
}

TEST(Combine, RougeTokensUnchanged) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto out = combine({random_emulator(rng, 512), 0}, testing::kBroken);
    EXPECT_EQ(tokenize(out.full, TokenizerMode::kRouge).tokens,
              tokenize(testing::kBroken, TokenizerMode::kRouge).tokens);
  }
}

TEST(Combine, ScrambledPlusBrokenMatchesBroken) {
  const auto out = combine({testing::kScrambled, 0}, testing::kBroken);
  const auto a = score_pair(out.full, testing::kGold);
  const auto b = score_pair(testing::kBroken, testing::kGold);
  EXPECT_EQ(*a.rouge1, *b.rouge1);
  EXPECT_EQ(*a.rouge2, *b.rouge2);
  EXPECT_EQ(*a.rougeL, *b.rougeL);
  EXPECT_NEAR(*a.meteor, *b.meteor, 1e-9);
}

TEST(Evasion, StrictInequality) {
  EXPECT_TRUE(evasion_success(0.5, 0.4));
  EXPECT_FALSE(evasion_success(0.4, 0.4));
  EXPECT_FALSE(evasion_success(0.3, 0.4));
  EXPECT_TRUE(evasion_success(0.4671, 0.4667));
  EXPECT_THROW(evasion_success(1.2, 0.4), std::invalid_argument);
  EXPECT_THROW(evasion_success(0.2, -0.1), std::invalid_argument);
}

TEST(Sanitize, ScrambledCodeFailsOnRun) {
  const auto v = sanitize(testing::kScrambled);
  EXPECT_FALSE(v.passed);
  EXPECT_NE(std::find(v.reasons.begin(), v.reasons.end(), kReasonNonAlnumRun),
            v.reasons.end());
  EXPECT_GT(v.max_non_alnum_run, 5u);
}

TEST(Sanitize, BrokenFailsOnFragments) {
  // Fragments: "...in The." (dangling article), "batsman has been ." (detached
  // period), "...ago after." (dangling preposition), "three in the.", "...he s."
  // (lone letter). Not fragments: the first and third sentences.
  const auto v = sanitize(testing::kBroken);
  EXPECT_EQ(v.sentence_count, 7u);
  EXPECT_EQ(v.fragment_count, 5u);
  EXPECT_EQ(v.reasons, (std::vector<std::string>{kReasonFragments}));
}

TEST(Sanitize, NaturalSummariesPass) {
  EXPECT_TRUE(sanitize(testing::kGold).passed);
  EXPECT_TRUE(sanitize(testing::kGood).passed);
  EXPECT_TRUE(sanitize("Officials in the U.S. said talks would resume.").passed);
}

TEST(Sanitize, EveryCombinedOutputFails) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) {
    EXPECT_FALSE(sanitize(combine({random_emulator(rng, 512), 0}, testing::kGold).full).passed);
  }
}

TEST(Sanitize, ThresholdsAreConfigurable) {
  DefenceThresholds loose{1.0, 1000, 1.0};
  EXPECT_TRUE(sanitize(testing::kScrambled, loose).passed);
  EXPECT_THROW((DefenceThresholds{2.0, 5, 0.4}.validate()), std::invalid_argument);
}

TEST(Sanitize, RatioIgnoresWhitespace) {
  const auto v = sanitize("ab  ..");
  EXPECT_DOUBLE_EQ(v.non_alnum_ratio, 0.5);
  EXPECT_EQ(v.max_non_alnum_run, 2u);
  EXPECT_EQ(sanitize(". . . . . . .").max_non_alnum_run, 7u);
}

TEST(Fragments, Rules) {
  EXPECT_TRUE(is_fragment("Former star."));
  EXPECT_TRUE(is_fragment("He went to the."));
  EXPECT_TRUE(is_fragment("He has been ."));
  EXPECT_TRUE(is_fragment("and then he s."));
  EXPECT_FALSE(is_fragment("He scored a century."));
  EXPECT_FALSE(is_fragment("Is it over?"));
  EXPECT_FALSE(is_fragment("Talks resumed in the U.S."));
}

TEST(SplitSentences, KeepsClosingQuotes) {
  const auto s = split_sentences("He said 'no.' Then left! Why? ok");
  EXPECT_EQ(s, (std::vector<std::string>{"He said 'no.'", "Then left!", "Why?", "ok"}));
}

TEST(DependencyTriples, F1Properties) {
  AdjacencyParseProvider p;
  EXPECT_EQ(dependency_triple_f1("the cat sat", "the cat sat", p), 1.0);
  EXPECT_EQ(dependency_triple_f1("alpha beta", "gamma delta", p), 0.0);
  EXPECT_EQ(dependency_triple_f1("", "x", p), 0.0);
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    std::string a, b;
    for (const auto& t : testing::random_tokens(rng, 8, 3)) a += t + " ";
    for (const auto& t : testing::random_tokens(rng, 8, 3)) b += t + " ";
    const double ab = dependency_triple_f1(a, b, p);
    EXPECT_EQ(ab, dependency_triple_f1(b, a, p));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
  }
}

TEST(DependencyTriples, StubEmitsAdjacencyTriples) {
  AdjacencyParseProvider p;
  const auto t = p.parse("Cats chase mice");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], (DependencyTriple{"<root>", "adjacent", "cats"}));
  EXPECT_EQ(t[2], (DependencyTriple{"chase", "adjacent", "mice"}));
}

}  // namespace
}  // namespace sumattack
