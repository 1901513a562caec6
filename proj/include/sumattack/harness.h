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

#ifndef SUMATTACK_HARNESS_H_
#define SUMATTACK_HARNESS_H_

// Systems under test, corpus evaluation, ranking and reports.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sumattack/corpus.h"
#include "sumattack/defence.h"
#include "sumattack/metrics.h"
#include "sumattack/rouge_attack.h"
#include "sumattack/similarity.h"
#include "sumattack/trigger_search.h"

namespace sumattack {

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// First three sentences (split after . ? !), joined by single spaces.
std::string lead3(std::string_view document);

enum class SystemKind { kLead3, kRougeAttack, kCombinedAttack, kExternalFile };

struct SystemUnderTest {
  std::string name;
  SystemKind kind = SystemKind::kLead3;
  AttackConfig attack;                 // rouge_attack, combined_attack
  std::optional<EmulatorString> emulator;  // combined_attack
  Predictions predictions;             // external_file

  // Throws HarnessError on a missing prediction or emulator.
  std::string predict(const CorpusPair& pair) const;
};

// System list entries for the CLI:
//   lead3
//   rouge_attack[:oracle|frequency[:C]]
//   combined_attack[:oracle|frequency[:C]]   (needs `emulator`)
//   NAME=PATH                                 (predictions file)
SystemUnderTest parse_system(std::string_view spec,
                             const std::optional<EmulatorString>& emulator = std::nullopt);

struct EvaluationOptions {
  SimilarityScorer* scorer = nullptr;  // no similarity column when null
  bool defences_on = false;
  DefenceThresholds thresholds;
  MeteorParams meteor;
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct ReportRow {
  std::string system;
  double rouge1 = 0.0, rouge2 = 0.0, rougeL = 0.0;
  double rouge_am = 0.0, rouge_gm = 0.0;
  double meteor = 0.0;
  std::optional<double> similarity;
  // Ranks over the G.M. ROUGE, METEOR and similarity columns (1 is best,
  // ties share the mean rank) and their average.
  std::vector<double> ranks;
  double average_rank = 0.0;
  std::size_t sanitize_passed = 0;
  std::size_t sanitize_total = 0;
};

struct ReportTable {
  bool has_similarity = false;
  bool defences_on = false;
  std::vector<ReportRow> rows;
};

ReportTable run_evaluation(const std::vector<CorpusPair>& corpus,
                           const std::vector<SystemUnderTest>& systems,
                           const EvaluationOptions& options = {});

// Fills ranks and average_rank from the score columns.
void assign_ranks(ReportTable& table);

// Competition ranks, descending, ties share the mean of the tied positions.
std::vector<double> mean_ranks(const std::vector<double>& scores);

enum class ReportFormat { kTsv, kMarkdown };
std::string emit_report(const ReportTable& table, ReportFormat format);

// Key-value config file:
//   # comment
//   key = value
// Keys: ga.population_size ga.max_generations ga.fitness_threshold
// ga.genome_length ga.mutation_rate ga.crossover_rate ga.seed ga.max_rounds
// defence.max_non_alnum_ratio defence.max_non_alnum_run
// defence.max_fragment_ratio bridge.
struct ToolkitConfig {
  GaConfig ga;
  std::size_t max_rounds = 5;
  DefenceThresholds defence;
  std::string bridge;
};

ToolkitConfig parse_config(std::istream& in, std::string_view source = "<stream>");
ToolkitConfig load_config(const std::filesystem::path& path);

}  // namespace sumattack

#endif  // SUMATTACK_HARNESS_H_
