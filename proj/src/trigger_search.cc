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

#include "sumattack/trigger_search.h"

#include <algorithm>
#include <fstream>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "sumattack/text_core.h"

namespace sumattack {
namespace {

using json = nlohmann::json;

std::uint64_t round_seed(std::uint64_t seed, std::size_t round) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (round + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Ga {
 public:
  Ga(const GaConfig& config, std::uint64_t seed)
      : cfg_(config),
        rng_(seed),
        pick_char_(0, emulator_alphabet().size() - 1) {}

  std::string random_genome() {
    std::string g(cfg_.genome_length, ' ');
    for (char& c : g) c = emulator_alphabet()[pick_char_(rng_)];
    return g;
  }

  void mutate(std::string& g) {
    if (cfg_.mutation_rate <= 0.0) return;
    std::bernoulli_distribution hit(cfg_.mutation_rate);
    for (char& c : g) {
      if (hit(rng_)) c = emulator_alphabet()[pick_char_(rng_)];
    }
  }

  const EmulatorString& tournament(const std::vector<EmulatorString>& pop) {
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    const EmulatorString& a = pop[pick(rng_)];
    const EmulatorString& b = pop[pick(rng_)];
    return b.fitness > a.fitness ? b : a;
  }

  std::string child(const std::vector<EmulatorString>& pop) {
    const std::string& a = tournament(pop).genome;
    const std::string& b = tournament(pop).genome;
    std::string out = a;
    if (out.size() > 1 && std::bernoulli_distribution(cfg_.crossover_rate)(rng_)) {
      std::uniform_int_distribution<std::size_t> cut(1, out.size() - 1);
      const std::size_t c = cut(rng_);
      std::copy(b.begin() + static_cast<std::ptrdiff_t>(c), b.end(),
                out.begin() + static_cast<std::ptrdiff_t>(c));
    }
    mutate(out);
    return out;
  }

 private:
  const GaConfig& cfg_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<std::size_t> pick_char_;
};

void evaluate(std::vector<EmulatorString>& pop, std::size_t from,
              std::string_view reference, SimilarityScorer& scorer) {
  std::vector<TextPair> pairs;
  pairs.reserve(pop.size() - from);
  for (std::size_t i = from; i < pop.size(); ++i) {
    pairs.emplace_back(pop[i].genome, std::string(reference));
  }
  if (pairs.empty()) return;
  const auto scores = scorer.batch_score(pairs);
  for (std::size_t i = from; i < pop.size(); ++i) pop[i].fitness = scores[i - from].f1;
}

std::size_t best_index(const std::vector<EmulatorString>& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].fitness > pop[best].fitness) best = i;
  }
  return best;
}

// Similarity scorers reject empty or all-whitespace texts in various ways; a
// blank genome simply scores zero.
bool scorable(const std::string& g) {
  return std::any_of(g.begin(), g.end(), [](char c) { return !is_ascii_space(c); });
}

std::pair<EmulatorString, FitRound> run_ga(std::string_view reference,
                                           SimilarityScorer& scorer,
                                           const GaConfig& config,
                                           const std::optional<EmulatorString>& init,
                                           std::uint64_t seed, std::size_t round,
                                           const GenerationObserver& observer,
                                           FitHistory& history) {
  Ga ga(config, seed);
  FitRound& rec = history.rounds.emplace_back();
  std::vector<EmulatorString> pop(config.population_size);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    if (init) {
      pop[i].genome = init->genome;
      if (i > 0) ga.mutate(pop[i].genome);
    } else {
      pop[i].genome = ga.random_genome();
    }
  }

  auto eval = [&](std::size_t from) {
    std::vector<EmulatorString> live;
    std::vector<std::size_t> where;
    for (std::size_t i = from; i < pop.size(); ++i) {
      if (scorable(pop[i].genome)) {
        live.push_back(pop[i]);
        where.push_back(i);
      } else {
        pop[i].fitness = 0.0;
      }
    }
    evaluate(live, 0, reference, scorer);
    for (std::size_t k = 0; k < live.size(); ++k) pop[where[k]].fitness = live[k].fitness;
  };

  EmulatorString best;
  auto step = [&](std::size_t generation) {
    const std::size_t b = best_index(pop);
    std::swap(pop[0], pop[b]);
    best = pop[0];
    rec.best_per_generation.push_back(best.fitness);
    if (observer) observer({round, generation, best.fitness, pop});
  };

  try {
    eval(0);
    step(0);
    for (std::size_t gen = 1;
         gen <= config.max_generations && best.fitness < config.fitness_threshold;
         ++gen) {
      std::vector<EmulatorString> next;
      next.reserve(pop.size());
      next.push_back(pop[0]);
      while (next.size() < pop.size()) next.push_back({ga.child(pop), 0.0});
      pop = std::move(next);
      eval(1);
      step(gen);
    }
  } catch (const TransportError& e) {
    throw SearchAborted(e.what(), history, best);
  }
  return {best, rec};
}

void check_init(const GaConfig& config, const std::optional<EmulatorString>& init) {
  if (!init) return;
  if (init->genome.size() != config.genome_length) {
    throw std::invalid_argument("initial genome length " +
                                std::to_string(init->genome.size()) +
                                " differs from genome_length " +
                                std::to_string(config.genome_length));
  }
  for (char c : init->genome) {
    if (!in_emulator_alphabet(c)) {
      throw std::invalid_argument("initial genome has a character outside the alphabet");
    }
  }
}

}  // namespace

const std::string& emulator_alphabet() {
  static const std::string alphabet = [] {
    std::string a;
    for (int c = 0x01; c <= 0x1f; ++c) a.push_back(static_cast<char>(c));
    for (int c = 0x20; c <= 0x7e; ++c) {
      if (!is_ascii_alnum(static_cast<char>(c))) a.push_back(static_cast<char>(c));
    }
    return a;
  }();
  return alphabet;
}

bool in_emulator_alphabet(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x01 && u <= 0x7e && !is_ascii_alnum(c);
}

void GaConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("population_size must be >= 2");
  if (max_generations == 0) throw std::invalid_argument("max_generations must be positive");
  if (genome_length == 0) throw std::invalid_argument("genome_length must be positive");
  auto fraction = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!fraction(mutation_rate)) throw std::invalid_argument("mutation_rate must be in [0, 1]");
  if (!fraction(crossover_rate)) throw std::invalid_argument("crossover_rate must be in [0, 1]");
  if (!std::isfinite(fitness_threshold)) {
    throw std::invalid_argument("fitness_threshold must be finite");
  }
}

std::pair<EmulatorString, FitHistory> ga_optimize(
    std::string_view reference, SimilarityScorer& scorer, const GaConfig& config,
    const std::optional<EmulatorString>& init, const GenerationObserver& observer) {
  config.validate();
  if (reference.empty()) throw std::invalid_argument("ga_optimize: empty reference");
  check_init(config, init);
  FitHistory history;
  auto [best, round] =
      run_ga(reference, scorer, config, init, config.seed, 0, observer, history);
  return {best, history};
}

EmulatorStats validate_emulator(const EmulatorString& emulator,
                                std::span<const std::string> references,
                                SimilarityScorer& scorer) {
  EmulatorStats stats;
  if (references.empty()) return stats;
  if (scorable(emulator.genome)) {
    std::vector<TextPair> pairs;
    pairs.reserve(references.size());
    for (const auto& r : references) pairs.emplace_back(emulator.genome, r);
    for (const auto& s : scorer.batch_score(pairs)) stats.f1.push_back(s.f1);
  } else {
    stats.f1.assign(references.size(), 0.0);
  }
  stats.min = *std::min_element(stats.f1.begin(), stats.f1.end());
  stats.max = *std::max_element(stats.f1.begin(), stats.f1.end());
  double sum = 0.0;
  for (double v : stats.f1) sum += v;
  stats.mean = sum / static_cast<double>(stats.f1.size());
  return stats;
}

std::pair<EmulatorString, FitHistory> fit_to_set(
    std::span<const std::string> references, SimilarityScorer& scorer,
    const GaConfig& config, std::size_t max_rounds, const FitOptions& options) {
  config.validate();
  if (references.empty()) throw std::invalid_argument("fit_to_set: empty reference set");
  if (max_rounds == 0) throw std::invalid_argument("fit_to_set: max_rounds must be >= 1");
  for (const auto& r : references) {
    if (r.empty()) throw std::invalid_argument("fit_to_set: empty reference");
  }

  FitCheckpoint cp;
  if (options.resume) {
    cp = *options.resume;
    if (cp.current.genome.size() != config.genome_length && cp.rounds_done > 0) {
      throw std::invalid_argument("checkpoint genome length does not match config");
    }
  }
  cp.config = config;
  cp.max_rounds = max_rounds;

  std::vector<double> current_scores;
  auto measure = [&](const EmulatorString& e) {
    try {
      current_scores = validate_emulator(e, references, scorer).f1;
    } catch (const TransportError& err) {
      throw SearchAborted(err.what(), cp.history, cp.best);
    }
    return *std::min_element(current_scores.begin(), current_scores.end());
  };

  if (cp.rounds_done > 0) measure(cp.current);

  while (cp.rounds_done < max_rounds) {
    const std::size_t round = cp.rounds_done;
    std::size_t target;
    std::optional<EmulatorString> init;
    if (round == 0) {
      std::mt19937_64 rng(config.seed);
      target = std::uniform_int_distribution<std::size_t>(0, references.size() - 1)(rng);
    } else {
      const double worst = *std::min_element(current_scores.begin(), current_scores.end());
      if (worst >= config.fitness_threshold) break;
      target = static_cast<std::size_t>(
          std::min_element(current_scores.begin(), current_scores.end()) -
          current_scores.begin());
      init = cp.current;
    }

    auto [emu, rec] = run_ga(references[target], scorer, config, init,
                             round == 0 ? config.seed : round_seed(config.seed, round),
                             round, options.observer,
                             cp.history);
    FitRound& stored = cp.history.rounds.back();
    stored.reference_index = target;
    stored.min_over_set = measure(emu);
    cp.current = emu;
    if (stored.min_over_set > cp.best_min_over_set) {
      cp.best_min_over_set = stored.min_over_set;
      cp.best = emu;
    }
    cp.rounds_done = round + 1;
    if (options.on_round) options.on_round(cp);
  }
  return {cp.best, cp.history};
}

std::string checkpoint_to_json(const FitCheckpoint& cp) {
  json rounds = json::array();
  for (const auto& r : cp.history.rounds) {
    rounds.push_back({{"reference_index", r.reference_index},
                      {"best_per_generation", r.best_per_generation},
                      {"min_over_set", r.min_over_set}});
  }
  const GaConfig& c = cp.config;
  json j = {
      {"config",
       {{"population_size", c.population_size},
        {"max_generations", c.max_generations},
        {"fitness_threshold", c.fitness_threshold},
        {"genome_length", c.genome_length},
        {"mutation_rate", c.mutation_rate},
        {"crossover_rate", c.crossover_rate},
        {"seed", c.seed}}},
      {"max_rounds", cp.max_rounds},
      {"rounds_done", cp.rounds_done},
      {"current", {{"genome", cp.current.genome}, {"fitness", cp.current.fitness}}},
      {"best", {{"genome", cp.best.genome}, {"fitness", cp.best.fitness}}},
      {"best_min_over_set", cp.best_min_over_set},
      {"history", rounds}};
  return j.dump(2);
}

FitCheckpoint checkpoint_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    FitCheckpoint cp;
    const json& c = j.at("config");
    cp.config.population_size = c.at("population_size").get<std::size_t>();
    cp.config.max_generations = c.at("max_generations").get<std::size_t>();
    cp.config.fitness_threshold = c.at("fitness_threshold").get<double>();
    cp.config.genome_length = c.at("genome_length").get<std::size_t>();
    cp.config.mutation_rate = c.at("mutation_rate").get<double>();
    cp.config.crossover_rate = c.at("crossover_rate").get<double>();
    cp.config.seed = c.at("seed").get<std::uint64_t>();
    cp.max_rounds = j.at("max_rounds").get<std::size_t>();
    cp.rounds_done = j.at("rounds_done").get<std::size_t>();
    cp.current = {j.at("current").at("genome").get<std::string>(),
                  j.at("current").at("fitness").get<double>()};
    cp.best = {j.at("best").at("genome").get<std::string>(),
               j.at("best").at("fitness").get<double>()};
    cp.best_min_over_set = j.at("best_min_over_set").get<double>();
    for (const auto& r : j.at("history")) {
      FitRound fr;
      fr.reference_index = r.at("reference_index").get<std::size_t>();
      fr.best_per_generation = r.at("best_per_generation").get<std::vector<double>>();
      fr.min_over_set = r.at("min_over_set").get<double>();
      cp.history.rounds.push_back(std::move(fr));
    }
    for (const auto* g : {&cp.current.genome, &cp.best.genome}) {
      for (char ch : *g) {
        if (!in_emulator_alphabet(ch)) {
          throw std::invalid_argument("checkpoint genome has a character outside the alphabet");
        }
      }
    }
    return cp;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad checkpoint: ") + e.what());
  }
}

void save_checkpoint(const std::filesystem::path& path, const FitCheckpoint& cp) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << checkpoint_to_json(cp) << '\n';
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

FitCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return checkpoint_from_json(ss.str());
}

}  // namespace sumattack
