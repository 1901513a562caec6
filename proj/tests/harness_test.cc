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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "sumattack/combined_attack.h"
#include "sumattack/corpus.h"
#include "sumattack/harness.h"

namespace sumattack {
namespace {

const std::filesystem::path kData = SUMATTACK_DATA_DIR;
const std::filesystem::path kGolden = std::filesystem::path(SUMATTACK_DATA_DIR) / ".." / "tests" / "golden";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CorpusPair> desk() { return load_corpus(kData / "desk_corpus.jsonl"); }

SystemUnderTest identity(const std::vector<CorpusPair>& corpus) {
  SystemUnderTest s;
  s.name = "identity";
  s.kind = SystemKind::kExternalFile;
  for (const auto& p : corpus) s.predictions[p.id] = p.reference;
  return s;
}

TEST(Corpus, DeskCorpusIsPinned) {
  EXPECT_EQ(desk().size(), 50u);
  EXPECT_EQ(fnv1a64(slurp(kData / "desk_corpus.jsonl")), 0x28d36f582fde16a8ULL);
}

TEST(Corpus, ParsesWellFormedLines) {
  std::istringstream in(
      R"({"id":"a","document":"d1","reference":"r1"})"
      "\n\n"
      R"({"id":"b","document":"d2","reference":"r2"})"
      "\n"
      R"({"id":"c","document":"d3","reference":"r3","extra":1})"
      "\n");
  EXPECT_EQ(parse_corpus(in).size(), 3u);
}

TEST(Corpus, ErrorsNameLineOrId) {
  std::istringstream dup(R"({"id":"a","document":"d","reference":"r"})"
                         "\n"
                         R"({"id":"a","document":"d","reference":"r"})");
  try {
    parse_corpus(dup, "f.jsonl");
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate id 'a'"), std::string::npos);
  }
  std::istringstream bad(R"({"id":"a","document":"d","reference":"r"})"
                         "\nnot json\n");
  try {
    parse_corpus(bad, "f.jsonl");
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_NE(std::string(e.what()).find("f.jsonl:2"), std::string::npos);
  }
  std::istringstream missing(R"({"id":"a","document":"d"})");
  EXPECT_THROW(parse_corpus(missing), CorpusError);
  std::istringstream empty_doc(R"({"id":"a","document":"","reference":"r"})");
  EXPECT_THROW(parse_corpus(empty_doc), CorpusError);
  EXPECT_THROW(load_corpus("/nonexistent/file.jsonl"), CorpusError);
}

TEST(Corpus, SaveLoadRoundTrip) {
  std::vector<CorpusPair> pairs = desk();
  pairs.push_back({"odd \"id\"", "tab\there\nnewline \x03 caf\xc3\xa9", "r"});
  const auto path = std::filesystem::temp_directory_path() / "sumattack_roundtrip.jsonl";
  save_corpus(path, pairs);
  EXPECT_EQ(load_corpus(path), pairs);
  std::filesystem::remove(path);
}

TEST(Predictions, ParseAndWrite) {
  std::ostringstream out;
  write_predictions(out, {{"x", "one"}, {"y", "two"}});
  std::istringstream in(out.str());
  const auto p = parse_predictions(in);
  EXPECT_EQ(p.at("x"), "one");
  EXPECT_EQ(p.at("y"), "two");
}

TEST(Lead3, FirstThreeSentences) {
  EXPECT_EQ(lead3("A. B. C. D."), "A. B. C.");
  EXPECT_EQ(lead3("A."), "A.");
  EXPECT_EQ(lead3(""), "");
  EXPECT_EQ(lead3("One! Two? Three. Four."), "One! Two? Three.");
}

TEST(Lead3, GoldenDeskPair) {
  EXPECT_EQ(lead3(desk()[0].document), slurp(kGolden / "lead3_desk000.txt"));
}

TEST(Systems, ParseSpecs) {
  EXPECT_EQ(parse_system("lead3").kind, SystemKind::kLead3);
  const auto r = parse_system("rouge_attack:frequency:2");
  EXPECT_EQ(r.kind, SystemKind::kRougeAttack);
  EXPECT_EQ(r.attack.c_min, 2u);
  EXPECT_EQ(r.attack.predictor.kind, BagPredictorKind::kFrequency);
  EXPECT_THROW(parse_system("combined_attack"), HarnessError);
  EXPECT_THROW(parse_system("rouge_attack:psychic"), HarnessError);
  EXPECT_THROW(parse_system("rouge_attack:oracle:0"), HarnessError);
  EXPECT_THROW(parse_system("nonsense"), HarnessError);
  EXPECT_EQ(parse_system("combined_attack", EmulatorString{"...", 0}).kind,
            SystemKind::kCombinedAttack);
}

TEST(Ranks, MeanRanksShareTies) {
  EXPECT_EQ(mean_ranks({0.9, 0.5, 0.7}), (std::vector<double>{1, 3, 2}));
  EXPECT_EQ(mean_ranks({0.5, 0.5, 0.1}), (std::vector<double>{1.5, 1.5, 3}));
  EXPECT_EQ(mean_ranks({}), (std::vector<double>{}));
}

TEST(Evaluation, IdentitySystemScoresOne) {
  const auto corpus = desk();
  const auto table = run_evaluation(corpus, {identity(corpus)});
  ASSERT_EQ(table.rows.size(), 1u);
  const auto& row = table.rows[0];
  EXPECT_DOUBLE_EQ(row.rouge1, 1.0);
  EXPECT_DOUBLE_EQ(row.rouge2, 1.0);
  EXPECT_DOUBLE_EQ(row.rougeL, 1.0);
  EXPECT_GT(row.meteor, 0.99);
  EXPECT_EQ(row.average_rank, 1.0);
  EXPECT_FALSE(row.similarity);
}

TEST(Evaluation, DominatingSystemRanksFirst) {
  const auto corpus = desk();
  SystemUnderTest lead;
  lead.name = "lead3";
  MockScorer mock;
  EvaluationOptions opts;
  opts.scorer = &mock;
  const auto table = run_evaluation(corpus, {lead, identity(corpus)}, opts);
  EXPECT_EQ(table.rows[1].average_rank, 1.0);
  EXPECT_EQ(table.rows[0].average_rank, 2.0);
  EXPECT_EQ(*table.rows[1].similarity, 1.0);
  for (const auto& r : table.rows) EXPECT_LE(r.rouge_gm, r.rouge_am);
}

TEST(Evaluation, MissingPredictionAborts) {
  const auto corpus = desk();
  SystemUnderTest s = identity(corpus);
  s.predictions.erase(corpus[7].id);
  try {
    run_evaluation(corpus, {s});
    FAIL();
  } catch (const HarnessError& e) {
    EXPECT_NE(std::string(e.what()).find(corpus[7].id), std::string::npos);
  }
}

TEST(Evaluation, ThreadCountDoesNotChangeResults) {
  const auto corpus = desk();
  const std::vector<SystemUnderTest> systems = {parse_system("lead3"),
                                                parse_system("rouge_attack")};
  EvaluationOptions one, many;
  one.threads = 1;
  many.threads = 8;
  EXPECT_EQ(emit_report(run_evaluation(corpus, systems, one), ReportFormat::kTsv),
            emit_report(run_evaluation(corpus, systems, many), ReportFormat::kTsv));
}

TEST(Evaluation, DefencesZeroFailingSystemsAndRankThemLast) {
  const auto corpus = desk();
  const auto emu = EmulatorString{std::string(512, '$'), 0};
  std::vector<SystemUnderTest> systems = {parse_system("lead3"),
                                          parse_system("combined_attack", emu),
                                          identity(corpus)};
  MockScorer mock;
  EvaluationOptions opts;
  opts.scorer = &mock;
  opts.defences_on = true;
  const auto table = run_evaluation(corpus, systems, opts);
  const auto& combined = table.rows[1];
  EXPECT_EQ(combined.sanitize_passed, 0u);
  EXPECT_EQ(combined.rouge1, 0.0);
  EXPECT_EQ(combined.meteor, 0.0);
  EXPECT_EQ(*combined.similarity, 0.0);
  for (std::size_t i : {0, 2}) {
    EXPECT_LT(table.rows[i].average_rank, combined.average_rank);
  }
}

TEST(Report, EmptyTableIsHeaderOnly) {
  EXPECT_EQ(emit_report({}, ReportFormat::kTsv),
            "System\tR-1\tR-2\tR-L\tA.M.\tG.M.\tMETEOR\tAvg. rank\n");
  EXPECT_EQ(emit_report({}, ReportFormat::kMarkdown),
            "| System | R-1 | R-2 | R-L | A.M. | G.M. | METEOR | Avg. rank |\n"
            "|---|---:|---:|---:|---:|---:|---:|---:|\n");
}

TEST(Report, OneRowGolden) {
  ReportTable t;
  t.has_similarity = true;
  t.defences_on = true;
  ReportRow r;
  r.system = "lead3";
  r.rouge1 = 0.342249;
  r.rouge2 = 0.15287;
  r.rougeL = 0.27371;
  r.rouge_am = 0.256343;
  r.rouge_gm = 0.24291;
  r.meteor = 0.31049;
  r.similarity = 0.636812;
  r.sanitize_passed = 50;
  r.sanitize_total = 50;
  t.rows.push_back(r);
  assign_ranks(t);
  EXPECT_EQ(emit_report(t, ReportFormat::kTsv), slurp(kGolden / "report_one_row.tsv"));
  EXPECT_EQ(emit_report(t, ReportFormat::kMarkdown), slurp(kGolden / "report_one_row.md"));
  EXPECT_EQ(emit_report(t, ReportFormat::kTsv), emit_report(t, ReportFormat::kTsv));
}

TEST(Config, ParsesKeysAndComments) {
  std::istringstream in(
      "# GA\n"
      "ga.population_size = 12\n"
      "ga.fitness_threshold=0.9\n"
      "  ga.seed = 42  \n"
      "ga.max_rounds = 3\n"
      "defence.max_non_alnum_run = 8\n"
      "bridge = tcp://gpu-host:7000\n");
  const auto c = parse_config(in);
  EXPECT_EQ(c.ga.population_size, 12u);
  EXPECT_DOUBLE_EQ(c.ga.fitness_threshold, 0.9);
  EXPECT_EQ(c.ga.seed, 42u);
  EXPECT_EQ(c.max_rounds, 3u);
  EXPECT_EQ(c.defence.max_non_alnum_run, 8u);
  EXPECT_EQ(c.bridge, "tcp://gpu-host:7000");
  EXPECT_EQ(c.ga.genome_length, 512u);
}

TEST(Config, RejectsBadInput) {
  for (const char* text : {"nokey\n", "ga.unknown = 1\n", "ga.population_size = x\n",
                           "ga.population_size = 1\n", "ga.mutation_rate = 2\n",
                           "ga.max_rounds = 0\n", "ga.fitness_threshold = 0.5x\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_config(in), HarnessError) << text;
  }
}

}  // namespace
}  // namespace sumattack
