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

#ifndef SUMATTACK_CORPUS_H_
#define SUMATTACK_CORPUS_H_

// Corpus and prediction files: one JSON object per line, UTF-8.
//   corpus:      {"id": ..., "document": ..., "reference": ...}
//   predictions: {"id": ..., "prediction": ...}

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sumattack {

struct CorpusPair {
  std::string id;
  std::string document;
  std::string reference;

  friend bool operator==(const CorpusPair&, const CorpusPair&) = default;
};

// Malformed input. what() names the source and line (or the duplicate id).
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<CorpusPair> parse_corpus(std::istream& in,
                                     std::string_view source = "<stream>");
std::vector<CorpusPair> load_corpus(const std::filesystem::path& path);
void write_corpus(std::ostream& out, const std::vector<CorpusPair>& pairs);
void save_corpus(const std::filesystem::path& path,
                 const std::vector<CorpusPair>& pairs);

using Predictions = std::map<std::string, std::string>;

Predictions parse_predictions(std::istream& in,
                              std::string_view source = "<stream>");
Predictions load_predictions(const std::filesystem::path& path);
void write_predictions(std::ostream& out,
                       const std::vector<std::pair<std::string, std::string>>& rows);

// 64-bit FNV-1a over raw bytes; used to pin bundled data files.
std::uint64_t fnv1a64(std::string_view bytes);

// One sentence per non-blank line (trigger-search reference sets).
std::vector<std::string> load_lines(const std::filesystem::path& path);

}  // namespace sumattack

#endif  // SUMATTACK_CORPUS_H_
