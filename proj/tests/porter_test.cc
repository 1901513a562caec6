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

#include "sumattack/porter_stemmer.h"

namespace sumattack {
namespace {

struct StemCase {
  const char* word;
  const char* stem;
};

// NLTK PorterStemmer in MARTIN_EXTENSIONS mode (tests/oracles/nltk_reference.py).
const StemCase kCases[] = {
    {"caresses", "caress"}, {"ponies", "poni"}, {"ties", "ti"}, {"caress", "caress"},
    {"cats", "cat"}, {"feed", "feed"}, {"agreed", "agre"}, {"plastered", "plaster"},
    {"bled", "bled"}, {"motoring", "motor"}, {"sing", "sing"}, {"conflated", "conflat"},
    {"troubled", "troubl"}, {"sized", "size"}, {"hopping", "hop"}, {"tanned", "tan"},
    {"falling", "fall"}, {"hissing", "hiss"}, {"fizzed", "fizz"}, {"failing", "fail"},
    {"filing", "file"}, {"happy", "happi"}, {"sky", "sky"}, {"relational", "relat"},
    {"conditional", "condit"}, {"rational", "ration"}, {"valenci", "valenc"},
    {"hesitanci", "hesit"}, {"digitizer", "digit"}, {"conformabli", "conform"},
    {"radicalli", "radic"}, {"differentli", "differ"}, {"vileli", "vile"},
    {"analogousli", "analog"}, {"vietnamization", "vietnam"}, {"predication", "predic"},
    {"operator", "oper"}, {"feudalism", "feudal"}, {"decisiveness", "decis"},
    {"hopefulness", "hope"}, {"callousness", "callous"}, {"formaliti", "formal"},
    {"sensitiviti", "sensit"}, {"sensibiliti", "sensibl"}, {"triplicate", "triplic"},
    {"formative", "form"}, {"formalize", "formal"}, {"electriciti", "electr"},
    {"electrical", "electr"}, {"hopeful", "hope"}, {"goodness", "good"},
    {"revival", "reviv"}, {"allowance", "allow"}, {"inference", "infer"},
    {"airliner", "airlin"}, {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"},
    {"defensible", "defens"}, {"irritant", "irrit"}, {"replacement", "replac"},
    {"adjustment", "adjust"}, {"dependent", "depend"}, {"adoption", "adopt"},
    {"homologou", "homolog"}, {"communism", "commun"}, {"activate", "activ"},
    {"angulariti", "angular"}, {"homologous", "homolog"}, {"effective", "effect"},
    {"bowdlerize", "bowdler"}, {"probate", "probat"}, {"rate", "rate"}, {"cease", "ceas"},
    {"controll", "control"}, {"roll", "roll"}, {"generalization", "gener"},
    {"oscillators", "oscil"}, {"running", "run"}, {"runs", "run"}, {"ran", "ran"},
    {"sacked", "sack"}, {"pietersen", "pietersen"}, {"flintoff", "flintoff"},
    {"england", "england"}, {"resurrect", "resurrect"}, {"career", "career"},
    {"archaeology", "archaeolog"}, {"apology", "apolog"}, {"logical", "logic"},
    {"sensibly", "sensibl"}, {"possibly", "possibl"},
};

TEST(Porter, MatchesReferenceStems) {
  for (const auto& c : kCases) EXPECT_EQ(porter_stem(c.word), c.stem) << c.word;
}

TEST(Porter, ShortAndNonAlphaWordsUnchanged) {
  EXPECT_EQ(porter_stem("is"), "is");
  EXPECT_EQ(porter_stem("a"), "a");
  EXPECT_EQ(porter_stem(""), "");
  EXPECT_EQ(porter_stem("170"), "170");
  EXPECT_EQ(porter_stem("covid19s"), "covid19s");
}

}  // namespace
}  // namespace sumattack
