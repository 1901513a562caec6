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

#include "sumattack/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "sumattack/combined_attack.h"
#include "sumattack/text_core.h"

namespace sumattack {
namespace {

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_ascii_space);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

AttackConfig parse_attack_options(std::string_view opts, std::string_view spec) {
  AttackConfig cfg;
  if (opts.empty()) return cfg;
  const auto colon = opts.find(':');
  const std::string_view predictor = opts.substr(0, colon);
  if (predictor == "oracle") {
    cfg.predictor.kind = BagPredictorKind::kOracle;
  } else if (predictor == "frequency") {
    cfg.predictor.kind = BagPredictorKind::kFrequency;
  } else {
    throw HarnessError("unknown bag predictor in system '" + std::string(spec) + "'");
  }
  if (colon != std::string_view::npos) {
    const std::string_view c = opts.substr(colon + 1);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
    if (ec != std::errc() || p != c.data() + c.size() || v == 0) {
      throw HarnessError("bad C in system '" + std::string(spec) + "'");
    }
    cfg.c_min = v;
  }
  return cfg;
}

struct PairResult {
  std::string prediction;
  MetricReport report;
  bool passed = true;
};

void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string lead3(std::string_view document) {
  const auto sentences = split_sentences(document);
  std::string out;
  for (std::size_t i = 0; i < sentences.size() && i < 3; ++i) {
    if (i) out.push_back(' ');
    out += sentences[i];
  }
  return out;
}

std::string SystemUnderTest::predict(const CorpusPair& pair) const {
  switch (kind) {
    case SystemKind::kLead3:
      return lead3(pair.document);
    case SystemKind::kRougeAttack:
      return attack_rouge(pair, attack);
    case SystemKind::kCombinedAttack:
      if (!emulator) throw HarnessError("system '" + name + "' has no emulator");
      return combine(*emulator, attack_rouge(pair, attack)).full;
    case SystemKind::kExternalFile: {
      auto it = predictions.find(pair.id);
      if (it == predictions.end()) {
        throw HarnessError("system '" + name + "' has no prediction for id '" +
                           pair.id + "'");
      }
      return it->second;
    }
  }
  throw HarnessError("unknown system kind");
}

SystemUnderTest parse_system(std::string_view spec,
                             const std::optional<EmulatorString>& emulator) {
  SystemUnderTest s;
  s.name = std::string(spec);
  if (const auto eq = spec.find('='); eq != std::string_view::npos) {
    s.name = std::string(spec.substr(0, eq));
    s.kind = SystemKind::kExternalFile;
    if (s.name.empty()) throw HarnessError("empty system name in '" + std::string(spec) + "'");
    s.predictions = load_predictions(std::string(spec.substr(eq + 1)));
    return s;
  }
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view opts =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (head == "lead3" && opts.empty()) {
    s.kind = SystemKind::kLead3;
  } else if (head == "rouge_attack") {
    s.kind = SystemKind::kRougeAttack;
    s.attack = parse_attack_options(opts, spec);
  } else if (head == "combined_attack") {
    s.kind = SystemKind::kCombinedAttack;
    s.attack = parse_attack_options(opts, spec);
    if (!emulator) {
      throw HarnessError("system '" + std::string(spec) + "' needs an emulator");
    }
    s.emulator = emulator;
  } else {
    throw HarnessError("unknown system '" + std::string(spec) + "'");
  }
  return s;
}

std::vector<double> mean_ranks(const std::vector<double>& scores) {
  std::vector<double> out(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    std::size_t greater = 0, equal = 0;
    for (double s : scores) {
      if (s > scores[i]) ++greater;
      if (s == scores[i]) ++equal;
    }
    out[i] = 1.0 + static_cast<double>(greater) + static_cast<double>(equal - 1) / 2.0;
  }
  return out;
}

void assign_ranks(ReportTable& table) {
  std::vector<std::vector<double>> columns(table.has_similarity ? 3 : 2);
  for (const auto& r : table.rows) {
    columns[0].push_back(r.rouge_gm);
    columns[1].push_back(r.meteor);
    if (table.has_similarity) columns[2].push_back(r.similarity.value_or(0.0));
  }
  std::vector<std::vector<double>> ranks;
  for (const auto& c : columns) ranks.push_back(mean_ranks(c));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    ReportRow& row = table.rows[i];
    row.ranks.clear();
    double sum = 0.0;
    for (const auto& r : ranks) {
      row.ranks.push_back(r[i]);
      sum += r[i];
    }
    row.average_rank = sum / static_cast<double>(ranks.size());
  }
}

ReportTable run_evaluation(const std::vector<CorpusPair>& corpus,
                           const std::vector<SystemUnderTest>& systems,
                           const EvaluationOptions& options) {
  options.thresholds.validate();
  options.meteor.validate();
  for (const auto& s : systems) {
    if (s.kind != SystemKind::kExternalFile) continue;
    for (const auto& p : corpus) s.predict(p);  // fail fast on a missing id
  }

  ReportTable table;
  table.has_similarity = options.scorer != nullptr;
  table.defences_on = options.defences_on;
  const std::size_t n = corpus.size();

  for (const auto& sys : systems) {
    std::vector<PairResult> results(n);
    parallel_for(n, options.threads, [&](std::size_t i) {
      PairResult& r = results[i];
      r.prediction = sys.predict(corpus[i]);
      if (options.defences_on) {
        r.passed = sanitize(r.prediction, options.thresholds).passed;
      }
      if (r.passed) {
        r.report = score_pair(r.prediction, corpus[i].reference, options.meteor);
      }
    });

    if (options.scorer != nullptr) {
      std::vector<TextPair> batch;
      std::vector<std::size_t> where;
      for (std::size_t i = 0; i < n; ++i) {
        if (!results[i].passed || blank(results[i].prediction)) continue;
        batch.emplace_back(results[i].prediction, corpus[i].reference);
        where.push_back(i);
      }
      const auto scores = options.scorer->batch_score(batch);
      for (std::size_t k = 0; k < where.size(); ++k) {
        results[where[k]].report.similarity = scores[k].f1;
      }
    }

    ReportRow row;
    row.system = sys.name;
    row.sanitize_total = n;
    double meteor = 0.0, sim = 0.0, r1 = 0.0, r2 = 0.0, rl = 0.0;
    for (const auto& r : results) {
      row.sanitize_passed += r.passed ? 1 : 0;
      r1 += r.report.rouge1.value_or(0.0);
      r2 += r.report.rouge2.value_or(0.0);
      rl += r.report.rougeL.value_or(0.0);
      meteor += r.report.meteor.value_or(0.0);
      sim += r.report.similarity.value_or(0.0);
    }
    const double denom = n == 0 ? 1.0 : static_cast<double>(n);
    row.rouge1 = r1 / denom;
    row.rouge2 = r2 / denom;
    row.rougeL = rl / denom;
    row.meteor = meteor / denom;
    if (table.has_similarity) row.similarity = sim / denom;
    const RougeMeans means = aggregate(row.rouge1, row.rouge2, row.rougeL);
    row.rouge_am = means.am;
    row.rouge_gm = means.gm;
    table.rows.push_back(std::move(row));
  }
  assign_ranks(table);
  return table;
}

std::string emit_report(const ReportTable& table, ReportFormat format) {
  std::vector<std::string> header = {"System", "R-1", "R-2", "R-L",
                                     "A.M.", "G.M.", "METEOR"};
  if (table.has_similarity) header.push_back("Similarity");
  header.push_back("Avg. rank");
  if (table.defences_on) header.push_back("Sanitize passed");

  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows) {
    std::vector<std::string> cells = {r.system,
                                      fmt2(100 * r.rouge1),
                                      fmt2(100 * r.rouge2),
                                      fmt2(100 * r.rougeL),
                                      fmt2(100 * r.rouge_am),
                                      fmt2(100 * r.rouge_gm),
                                      fmt2(100 * r.meteor)};
    if (table.has_similarity) cells.push_back(fmt2(100 * r.similarity.value_or(0.0)));
    cells.push_back(fmt2(r.average_rank));
    if (table.defences_on) {
      cells.push_back(std::to_string(r.sanitize_passed) + "/" +
                      std::to_string(r.sanitize_total));
    }
    rows.push_back(std::move(cells));
  }

  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    if (format == ReportFormat::kTsv) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out.push_back('\t');
        for (char c : cells[i]) out.push_back(c == '\t' || c == '\n' ? ' ' : c);
      }
    } else {
      out += "|";
      for (const auto& c : cells) {
        out += ' ';
        for (char ch : c) {
          if (ch == '|') out += "\\|";
          else out.push_back(ch == '\n' ? ' ' : ch);
        }
        out += " |";
      }
    }
    out.push_back('\n');
  };
  line(header);
  if (format == ReportFormat::kMarkdown) {
    out += "|---|";
    for (std::size_t i = 1; i < header.size(); ++i) out += "---:|";
    out.push_back('\n');
  }
  for (const auto& r : rows) line(r);
  return out;
}

ToolkitConfig parse_config(std::istream& in, std::string_view source) {
  ToolkitConfig cfg;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw HarnessError(std::string(source) + ":" + std::to_string(line_no) + ": " + msg);
  };
  auto as_size = [&](const std::string& v) {
    std::size_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) fail("expected an integer: " + v);
    return out;
  };
  auto as_double = [&](const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
      out = std::stod(v, &used);
    } catch (const std::exception&) {
      fail("expected a number: " + v);
    }
    if (used != v.size()) fail("expected a number: " + v);
    return out;
  };
  const std::map<std::string, std::function<void(const std::string&)>> setters = {
      {"ga.population_size", [&](const std::string& v) { cfg.ga.population_size = as_size(v); }},
      {"ga.max_generations", [&](const std::string& v) { cfg.ga.max_generations = as_size(v); }},
      {"ga.fitness_threshold", [&](const std::string& v) { cfg.ga.fitness_threshold = as_double(v); }},
      {"ga.genome_length", [&](const std::string& v) { cfg.ga.genome_length = as_size(v); }},
      {"ga.mutation_rate", [&](const std::string& v) { cfg.ga.mutation_rate = as_double(v); }},
      {"ga.crossover_rate", [&](const std::string& v) { cfg.ga.crossover_rate = as_double(v); }},
      {"ga.seed", [&](const std::string& v) { cfg.ga.seed = as_size(v); }},
      {"ga.max_rounds", [&](const std::string& v) { cfg.max_rounds = as_size(v); }},
      {"defence.max_non_alnum_ratio", [&](const std::string& v) { cfg.defence.max_non_alnum_ratio = as_double(v); }},
      {"defence.max_non_alnum_run", [&](const std::string& v) { cfg.defence.max_non_alnum_run = as_size(v); }},
      {"defence.max_fragment_ratio", [&](const std::string& v) { cfg.defence.max_fragment_ratio = as_double(v); }},
      {"bridge", [&](const std::string& v) { cfg.bridge = v; }},
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) fail("unknown key '" + key + "'");
    it->second(value);
  }
  try {
    cfg.ga.validate();
    cfg.defence.validate();
  } catch (const std::invalid_argument& e) {
    throw HarnessError(std::string(source) + ": " + e.what());
  }
  if (cfg.max_rounds == 0) throw HarnessError(std::string(source) + ": ga.max_rounds must be >= 1");
  return cfg;
}

ToolkitConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw HarnessError("cannot open " + path.string());
  return parse_config(in, path.string());
}

}  // namespace sumattack
