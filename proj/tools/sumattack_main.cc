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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumattack/combined_attack.h"
#include "sumattack/corpus.h"
#include "sumattack/defence.h"
#include "sumattack/harness.h"
#include "sumattack/kernels/kernels.h"
#include "sumattack/rouge_attack.h"
#include "sumattack/similarity.h"
#include "sumattack/trigger_search.h"

namespace {

using namespace sumattack;

struct ScorerFlags {
  std::string bridge;
  bool mock = false;
};

void add_scorer_flags(CLI::App* app, ScorerFlags& f) {
  app->add_option("--bridge", f.bridge,
                  "Similarity sidecar endpoint (tcp://HOST:PORT or exec:COMMAND); "
                  "defaults to $SUMATTACK_BRIDGE");
  app->add_flag("--mock-similarity", f.mock, "Use the built-in mock similarity scorer");
}

std::string bridge_endpoint(const ScorerFlags& f, const std::string& from_config = {}) {
  if (!f.bridge.empty()) return f.bridge;
  if (const char* env = std::getenv(kBridgeEnvVar); env != nullptr && *env != '\0') {
    return env;
  }
  return from_config;
}

// Null when no scorer was asked for and none is configured.
std::unique_ptr<SimilarityScorer> make_scorer(const ScorerFlags& f, bool mock_by_default,
                                              const std::string& config_bridge = {}) {
  if (f.mock) return std::make_unique<MockScorer>();
  const std::string endpoint = bridge_endpoint(f, config_bridge);
  if (!endpoint.empty()) return BridgeScorer::connect(endpoint);
  if (mock_by_default) return std::make_unique<MockScorer>();
  return nullptr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BagPredictorKind predictor_kind(const std::string& name) {
  if (name == "oracle") return BagPredictorKind::kOracle;
  if (name == "frequency") return BagPredictorKind::kFrequency;
  throw std::runtime_error("unknown predictor '" + name + "'");
}

std::ostream* open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return &std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  return &file;
}

ToolkitConfig config_or_default(const std::string& path) {
  return path.empty() ? ToolkitConfig{} : load_config(path);
}

EmulatorString load_emulator(const std::string& path) {
  const FitCheckpoint cp = load_checkpoint(path);
  if (cp.best.genome.empty()) throw std::runtime_error(path + " holds no emulator yet");
  return cp.best;
}

ReportFormat report_format(const std::string& name) {
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "markdown") return ReportFormat::kMarkdown;
  throw std::runtime_error("unknown format '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Summary-metric attack toolkit"};
  app.require_subcommand(1);

  // score
  auto* score = app.add_subcommand("score", "Score predictions against a corpus");
  std::string corpus_path, predictions_path, format = "tsv";
  ScorerFlags score_scorer;
  std::size_t threads = 0;
  score->add_option("--corpus", corpus_path, "Corpus JSONL")->required();
  score->add_option("--predictions", predictions_path, "Predictions JSONL")->required();
  score->add_option("--format", format, "tsv or markdown");
  score->add_option("--threads", threads, "Worker threads (0: all cores)");
  add_scorer_flags(score, score_scorer);

  // attack
  auto* attack = app.add_subcommand("attack", "Run an attack");
  attack->require_subcommand(1);

  auto* rouge = attack->add_subcommand("rouge", "Bag-to-sequence ROUGE attack");
  std::string rouge_corpus, predictor = "oracle", rouge_out;
  std::size_t c_min = 3, frequency_k = 40;
  rouge->add_option("--corpus", rouge_corpus, "Corpus JSONL")->required();
  rouge->add_option("--predictor", predictor, "oracle or frequency");
  rouge->add_option("--c-min", c_min, "Minimum run length");
  rouge->add_option("--frequency-k", frequency_k, "Bag size of the frequency predictor");
  rouge->add_option("--out", rouge_out, "Predictions JSONL (default stdout)");

  auto* trigger = attack->add_subcommand("trigger", "Genetic search for an emulator string");
  std::string refs_path, trigger_out, config_path, resume_path;
  ScorerFlags trigger_scorer;
  std::optional<std::size_t> generations, population, rounds, length;
  std::optional<double> threshold;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  trigger->add_option("--refs", refs_path, "Reference sentences, one per line")->required();
  trigger->add_option("--generations", generations, "Max generations per round");
  trigger->add_option("--population", population, "Population size");
  trigger->add_option("--threshold", threshold, "Stop once f1 reaches this");
  trigger->add_option("--seed", seed, "RNG seed");
  trigger->add_option("--rounds", rounds, "Max fitting rounds");
  trigger->add_option("--length", length, "Genome length");
  trigger->add_option("--config", config_path, "Key-value config file");
  trigger->add_option("--resume", resume_path, "Resume from a checkpoint");
  trigger->add_option("--out", trigger_out, "Checkpoint file, rewritten every round")->required();
  trigger->add_flag("--quiet", quiet, "No progress output");
  add_scorer_flags(trigger, trigger_scorer);

  auto* combined = attack->add_subcommand("combined", "Emulator + ROUGE attack");
  std::string combined_corpus, emulator_path, combined_out, combined_predictor = "oracle";
  std::size_t combined_c_min = 3;
  combined->add_option("--corpus", combined_corpus, "Corpus JSONL")->required();
  combined->add_option("--emulator", emulator_path, "Checkpoint from attack trigger")->required();
  combined->add_option("--predictor", combined_predictor, "oracle or frequency");
  combined->add_option("--c-min", combined_c_min, "Minimum run length");
  combined->add_option("--out", combined_out, "Predictions JSONL (default stdout)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Compare systems on a corpus");
  std::string eval_corpus, systems_list, eval_emulator, eval_format = "tsv", eval_config;
  ScorerFlags eval_scorer;
  bool defend_flag = false;
  std::size_t eval_threads = 0;
  evaluate->add_option("--corpus", eval_corpus, "Corpus JSONL")->required();
  evaluate->add_option("--systems", systems_list,
                       "Comma-separated: lead3, rouge_attack[:PRED[:C]], "
                       "combined_attack[:PRED[:C]], NAME=PREDICTIONS")
      ->required();
  evaluate->add_option("--emulator", eval_emulator, "Checkpoint for combined_attack");
  evaluate->add_flag("--defend", defend_flag, "Zero out predictions failing sanitization");
  evaluate->add_option("--format", eval_format, "tsv or markdown");
  evaluate->add_option("--config", eval_config, "Key-value config file");
  evaluate->add_option("--threads", eval_threads, "Worker threads (0: all cores)");
  add_scorer_flags(evaluate, eval_scorer);

  // defend
  auto* defend = app.add_subcommand("defend", "Sanitization verdict for a text file");
  std::string text_path, defend_config;
  defend->add_option("--text", text_path, "Text file")->required();
  defend->add_option("--config", defend_config, "Key-value config file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) {
      const auto corpus = load_corpus(corpus_path);
      SystemUnderTest sys;
      sys.name = "predictions";
      sys.kind = SystemKind::kExternalFile;
      sys.predictions = load_predictions(predictions_path);
      auto scorer = make_scorer(score_scorer, false);
      EvaluationOptions opts;
      opts.scorer = scorer.get();
      opts.threads = threads;
      std::cout << emit_report(run_evaluation(corpus, {sys}, opts), report_format(format));
    } else if (rouge->parsed() || combined->parsed()) {
      const bool is_combined = combined->parsed();
      const auto corpus = load_corpus(is_combined ? combined_corpus : rouge_corpus);
      AttackConfig cfg;
      cfg.c_min = is_combined ? combined_c_min : c_min;
      cfg.predictor.kind = predictor_kind(is_combined ? combined_predictor : predictor);
      cfg.predictor.frequency_k = frequency_k;
      std::optional<EmulatorString> emu;
      if (is_combined) {
        emu = load_emulator(emulator_path);
        if (emu->genome.size() < kTruncationLength) {
          std::cerr << "warning: emulator is shorter than " << kTruncationLength
                    << " characters\n";
        }
      }
      std::vector<std::pair<std::string, std::string>> rows;
      for (const auto& p : corpus) {
        std::string text = attack_rouge(p, cfg);
        if (emu) text = combine(*emu, text).full;
        rows.emplace_back(p.id, std::move(text));
      }
      std::ofstream file;
      write_predictions(*open_out(is_combined ? combined_out : rouge_out, file), rows);
    } else if (trigger->parsed()) {
      ToolkitConfig tk = config_or_default(config_path);
      GaConfig& ga = tk.ga;
      if (generations) ga.max_generations = *generations;
      if (population) ga.population_size = *population;
      if (threshold) ga.fitness_threshold = *threshold;
      if (seed) ga.seed = *seed;
      if (length) ga.genome_length = *length;
      if (rounds) tk.max_rounds = *rounds;
      const auto refs = load_lines(refs_path);
      auto scorer = make_scorer(trigger_scorer, true, tk.bridge);
      if (!quiet) std::cerr << "scorer: " << scorer->describe() << "\n";
      FitOptions fo;
      if (!resume_path.empty()) fo.resume = load_checkpoint(resume_path);
      fo.on_round = [&](const FitCheckpoint& cp) {
        save_checkpoint(trigger_out, cp);
        if (!quiet) {
          const auto& r = cp.history.rounds.back();
          std::cerr << "round " << cp.rounds_done - 1 << ": reference " << r.reference_index
                    << ", " << r.best_per_generation.size() - 1 << " generations, best f1 "
                    << r.best_per_generation.back() << ", min over set " << r.min_over_set
                    << "\n";
        }
      };
      try {
        auto [best, history] = fit_to_set(refs, *scorer, ga, tk.max_rounds, fo);
        const auto stats = validate_emulator(best, refs, *scorer);
        std::cout << "min " << stats.min << " mean " << stats.mean << " max " << stats.max
                  << "\n";
      } catch (const SearchAborted& e) {
        std::cerr << "error: search aborted: " << e.what()
                  << " (last checkpoint in " << trigger_out << ")\n";
        return 1;
      }
    } else if (evaluate->parsed()) {
      const ToolkitConfig tk = config_or_default(eval_config);
      const auto corpus = load_corpus(eval_corpus);
      std::optional<EmulatorString> emu;
      if (!eval_emulator.empty()) emu = load_emulator(eval_emulator);
      std::vector<SystemUnderTest> systems;
      std::stringstream list(systems_list);
      std::string item;
      while (std::getline(list, item, ',')) {
        if (!item.empty()) systems.push_back(parse_system(item, emu));
      }
      if (systems.empty()) throw std::runtime_error("no systems given");
      auto scorer = make_scorer(eval_scorer, false, tk.bridge);
      EvaluationOptions opts;
      opts.scorer = scorer.get();
      opts.defences_on = defend_flag;
      opts.thresholds = tk.defence;
      opts.threads = eval_threads;
      std::cout << emit_report(run_evaluation(corpus, systems, opts),
                               report_format(eval_format));
    } else if (defend->parsed()) {
      const ToolkitConfig tk = config_or_default(defend_config);
      const DefenceVerdict v = sanitize(read_file(text_path), tk.defence);
      nlohmann::json j = {{"passed", v.passed},
                          {"reasons", v.reasons},
                          {"non_alnum_ratio", v.non_alnum_ratio},
                          {"max_non_alnum_run", v.max_non_alnum_run},
                          {"fragment_count", v.fragment_count},
                          {"sentence_count", v.sentence_count}};
      std::cout << j.dump() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
