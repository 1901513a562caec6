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

#include "sumattack/corpus.h"

#include <fstream>
#include <set>

#include "json.hpp"

namespace sumattack {
namespace {

using json = nlohmann::json;

std::string where(std::string_view source, std::size_t line_no) {
  return std::string(source) + ":" + std::to_string(line_no);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string string_field(const json& j, const char* name, std::string_view source,
                         std::size_t line_no) {
  auto it = j.find(name);
  if (it == j.end() || !it->is_string()) {
    throw CorpusError(where(source, line_no) + ": missing string field '" + name + "'");
  }
  return it->get<std::string>();
}

json parse_line(const std::string& line, std::string_view source,
                std::size_t line_no) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw CorpusError(where(source, line_no) + ": malformed record");
  }
  return j;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<CorpusPair> parse_corpus(std::istream& in, std::string_view source) {
  std::vector<CorpusPair> out;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const json j = parse_line(line, source, line_no);
    CorpusPair p{string_field(j, "id", source, line_no),
                 string_field(j, "document", source, line_no),
                 string_field(j, "reference", source, line_no)};
    if (p.document.empty() || p.reference.empty()) {
      throw CorpusError(where(source, line_no) + ": empty document or reference");
    }
    if (!seen.insert(p.id).second) {
      throw CorpusError(where(source, line_no) + ": duplicate id '" + p.id + "'");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CorpusPair> load_corpus(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_corpus(in, path.string());
}

void write_corpus(std::ostream& out, const std::vector<CorpusPair>& pairs) {
  for (const auto& p : pairs) {
    json j = {{"id", p.id}, {"document", p.document}, {"reference", p.reference}};
    out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

void save_corpus(const std::filesystem::path& path,
                 const std::vector<CorpusPair>& pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write " + path.string());
  write_corpus(out, pairs);
}

Predictions parse_predictions(std::istream& in, std::string_view source) {
  Predictions out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const json j = parse_line(line, source, line_no);
    std::string id = string_field(j, "id", source, line_no);
    std::string pred = string_field(j, "prediction", source, line_no);
    if (!out.emplace(id, std::move(pred)).second) {
      throw CorpusError(where(source, line_no) + ": duplicate id '" + id + "'");
    }
  }
  return out;
}

Predictions load_predictions(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_predictions(in, path.string());
}

void write_predictions(
    std::ostream& out,
    const std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [id, pred] : rows) {
    json j = {{"id", id}, {"prediction", pred}};
    out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> load_lines(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!blank(line)) out.push_back(line);
  }
  return out;
}

}  // namespace sumattack
