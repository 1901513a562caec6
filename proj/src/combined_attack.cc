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

#include "sumattack/combined_attack.h"

#include <cmath>
#include <stdexcept>

#include "sumattack/text_core.h"

namespace sumattack {

CombinedOutput combine(const EmulatorString& emulator, std::string_view rouge_text) {
  if (has_alnum(emulator.genome)) {
    throw std::invalid_argument("emulator contains an alphanumeric character");
  }
  CombinedOutput out;
  out.emulator_part = emulator.genome;
  out.rouge_part = std::string(rouge_text);
  out.full = out.emulator_part + " " + out.rouge_part;
  out.below_truncation_length = emulator.genome.size() < kTruncationLength;
  return out;
}

bool evasion_success(double attack_score, double baseline_score) {
  auto unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!unit(attack_score) || !unit(baseline_score)) {
    throw std::invalid_argument("evasion_success: scores must lie in [0, 1]");
  }
  return attack_score > baseline_score;
}

}  // namespace sumattack
