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

#ifndef SUMATTACK_COMBINED_ATTACK_H_
#define SUMATTACK_COMBINED_ATTACK_H_

// Emulator prefix + ROUGE-attack text as one universal output.

#include <cstddef>
#include <string>
#include <string_view>

#include "sumattack/trigger_search.h"

namespace sumattack {

// Typical subword-model input limit; an emulator at least this long pushes
// the ROUGE text past truncation.
inline constexpr std::size_t kTruncationLength = 512;

struct CombinedOutput {
  std::string emulator_part;
  std::string rouge_part;
  std::string full;  // emulator_part + " " + rouge_part
  bool below_truncation_length = false;
};

// Throws std::invalid_argument if the emulator holds an alphanumeric
// character. A short emulator only sets below_truncation_length.
CombinedOutput combine(const EmulatorString& emulator, std::string_view rouge_text);

// Strict: the attack must score above the baseline. Scores outside [0, 1]
// throw std::invalid_argument.
bool evasion_success(double attack_score, double baseline_score);

}  // namespace sumattack

#endif  // SUMATTACK_COMBINED_ATTACK_H_
