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

#ifndef SUMATTACK_TESTS_FIXTURES_H_
#define SUMATTACK_TESTS_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "sumattack/text_core.h"

namespace sumattack::testing {

// Worked cricket example (gold summary and three system outputs).
inline const std::string kGold =
    "Kevin Pietersen was sacked by England 14 months ago after Ashes defeat. "
    "Batsman scored 170 on his county cricket return for Surrey last week. "
    "Pietersen wants to make a sensational return to the England side this year. "
    "But Andrew Flintoff thinks time is running out for him to resurrect career.";

inline const std::string kGood =
    "Kevin pietersen scored 170 for surrey against mccu oxford. Former england star "
    "andrew flintoff fears pietersen is 'running out of time' to resurrect his "
    "england career. Pietersen has been surplus to requirements since being sacked "
    "14 months ago. Flintoff sees a bright future for 'probably the premier "
    "tournament' in this country.";

inline const std::string kBroken =
    "Andrew Flintoff fears Kevin Pietersen is running out of time to resurrect his "
    "England career Flintoff. Pietersen scored 170 for Surrey in The. Former England "
    "star Andrew. batsman has been . since being sacked 14 months ago after. three "
    "in the. the Ashes and he s.";

// The visible part of the scrambled-code output, control bytes included.
inline const std::string kScrambled =
    "\x03\x18$\x18...\x03$\x03|...\x0f\x01<<$$\x04...\x0e \x04# $...\x0f\x0f\x0f"
    "...\x0e...\x0f...\x0f\x0f$\x0f \x04\x0f\x0f";

inline std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len,
                                              std::size_t alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet - 1);
  std::vector<std::string> out(len(rng));
  for (auto& t : out) t = std::string(1, static_cast<char>('a' + sym(rng)));
  return out;
}

}  // namespace sumattack::testing

#endif  // SUMATTACK_TESTS_FIXTURES_H_
