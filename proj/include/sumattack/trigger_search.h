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

#ifndef SUMATTACK_TRIGGER_SEARCH_H_
#define SUMATTACK_TRIGGER_SEARCH_H_

// Genetic search for a universal non-alphanumeric "emulator" string that
// scores high embedding similarity against arbitrary sentences.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sumattack/similarity.h"

namespace sumattack {

// Printable ASCII non-alphanumerics (space included) and bytes 0x01-0x1F.
const std::string& emulator_alphabet();
bool in_emulator_alphabet(char c);

struct EmulatorString {
  std::string genome;
  double fitness = 0.0;  // last evaluated similarity f1
};

struct GaConfig {
  std::size_t population_size = 10;
  std::size_t max_generations = 2000;
  double fitness_threshold = 0.88;
  std::size_t genome_length = 512;
  double mutation_rate = 0.02;
  double crossover_rate = 0.9;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument.
  void validate() const;
};

struct FitRound {
  std::size_t reference_index = 0;
  // Best fitness after the initial population (entry 0) and after each
  // generation.
  std::vector<double> best_per_generation;
  // Minimum f1 of the round's emulator over the whole reference set;
  // negative until measured.
  double min_over_set = -1.0;
};

struct FitHistory {
  std::vector<FitRound> rounds;
};

// Per-generation hook. `population` holds every genome alive after the
// generation, elite first.
struct GenerationView {
  std::size_t round = 0;
  std::size_t generation = 0;
  double best_fitness = 0.0;
  std::span<const EmulatorString> population;
};
using GenerationObserver = std::function<void(const GenerationView&)>;

// A scorer failure stopped the search. Carries everything up to the failure.
class SearchAborted : public std::runtime_error {
 public:
  SearchAborted(const std::string& what, FitHistory history,
                EmulatorString best)
      : std::runtime_error(what),
        history_(std::move(history)),
        best_(std::move(best)) {}
  const FitHistory& history() const { return history_; }
  const EmulatorString& best() const { return best_; }

 private:
  FitHistory history_;
  EmulatorString best_;
};

// Maximizes f1 against one reference. Generation 0 is the initial population
// (init plus mutated copies of it, or random genomes); each later generation
// keeps the elite and fills the rest by tournament-2 selection, single-point
// crossover and per-position mutation. Stops at the threshold or after
// max_generations further generations. Returns the best-ever candidate and a
// single-round history.
std::pair<EmulatorString, FitHistory> ga_optimize(
    std::string_view reference, SimilarityScorer& scorer, const GaConfig& config,
    const std::optional<EmulatorString>& init = std::nullopt,
    const GenerationObserver& observer = {});

// Resumable state of fit_to_set, written after every round.
struct FitCheckpoint {
  GaConfig config;
  std::size_t max_rounds = 5;
  std::size_t rounds_done = 0;
  EmulatorString current;
  EmulatorString best;  // best min-over-set so far
  double best_min_over_set = -1.0;
  FitHistory history;
};

struct FitOptions {
  GenerationObserver observer;
  std::function<void(const FitCheckpoint&)> on_round;
  std::optional<FitCheckpoint> resume;
};

// Round 0 fits a reference picked from the seed; each later round fits the
// reference the current emulator scores worst on, seeded with that emulator.
// Stops early once the minimum over the set reaches the threshold. Returns
// the emulator with the best min-over-set seen.
std::pair<EmulatorString, FitHistory> fit_to_set(
    std::span<const std::string> references, SimilarityScorer& scorer,
    const GaConfig& config, std::size_t max_rounds = 5,
    const FitOptions& options = {});

struct EmulatorStats {
  std::vector<double> f1;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

EmulatorStats validate_emulator(const EmulatorString& emulator,
                                std::span<const std::string> references,
                                SimilarityScorer& scorer);

// JSON checkpoint file. Genomes are stored as escaped UTF-8 strings.
void save_checkpoint(const std::filesystem::path& path, const FitCheckpoint& cp);
FitCheckpoint load_checkpoint(const std::filesystem::path& path);
std::string checkpoint_to_json(const FitCheckpoint& cp);
FitCheckpoint checkpoint_from_json(std::string_view text);

}  // namespace sumattack

#endif  // SUMATTACK_TRIGGER_SEARCH_H_
