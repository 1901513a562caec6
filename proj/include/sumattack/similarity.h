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

#ifndef SUMATTACK_SIMILARITY_H_
#define SUMATTACK_SIMILARITY_H_

// Embedding-similarity scorers: a self-contained mock and a bridge to an
// external BERTScore process speaking a line-delimited JSON protocol.
//
// Wire protocol (one compact JSON object per line, UTF-8):
//   request:  {"id": <int>, "op": "score", "candidate": <str>, "reference": <str>}
//   response: {"id": <int>, "precision": <float>, "recall": <float>, "f1": <float>}
//   error:    {"id": <int>, "error": <str>}

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumattack/kernels/kernels.h"

namespace sumattack {

struct SimilarityScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

using TextPair = std::pair<std::string, std::string>;

// Any failure talking to the bridge: unreachable endpoint, broken stream,
// malformed or mismatched reply, or an error object from the sidecar.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The sidecar answered with an error object. The connection stays usable.
// Any other TransportError closes the connection for good.
class SidecarError : public TransportError {
 public:
  using TransportError::TransportError;
};

class SimilarityScorer {
 public:
  virtual ~SimilarityScorer() = default;

  // Empty candidate or reference throws std::invalid_argument.
  virtual SimilarityScore score(std::string_view candidate,
                                std::string_view reference) = 0;

  // Elementwise equal to score(); any failure fails the whole batch.
  virtual std::vector<SimilarityScore> batch_score(
      std::span<const TextPair> pairs);

  virtual std::string describe() const = 0;
};

inline SimilarityScore score_similarity(SimilarityScorer& scorer,
                                        std::string_view candidate,
                                        std::string_view reference) {
  return scorer.score(candidate, reference);
}

inline std::vector<SimilarityScore> batch_score(
    SimilarityScorer& scorer, std::span<const TextPair> pairs) {
  return scorer.batch_score(pairs);
}

// Raw-mode tokens embedded as hashed character-trigram count vectors
// (kEmbeddingDim buckets, fixed seed), compared by cosine with greedy
// max matching in both directions.
class MockScorer final : public SimilarityScorer {
 public:
  using Embedding = std::array<std::int16_t, kernels::kEmbeddingDim>;

  static constexpr std::uint64_t kSeed = 0x5eed5c0de5eedULL;
  // Trigrams beyond this many per token are ignored (keeps dot products in
  // int32 range).
  static constexpr std::size_t kMaxTrigrams = 4096;

  static Embedding embed_token(std::string_view token);

  SimilarityScore score(std::string_view candidate,
                        std::string_view reference) override;
  std::string describe() const override { return "mock"; }

  // Scores precomputed token embeddings. Exposed so the trigger search can
  // cache the reference side.
  struct Embedded {
    std::vector<std::int16_t> rows;  // size() * kEmbeddingDim
    std::vector<std::int64_t> norms;  // squared L2 norm per row
    std::size_t size() const { return norms.size(); }
  };
  static Embedded embed_text(std::string_view text);
  static SimilarityScore score_embedded(const Embedded& cand,
                                        const Embedded& ref);
};

// Bidirectional line channel to a sidecar.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  virtual void write_line(std::string_view line) = 0;
  // Returns false on end of stream.
  virtual bool read_line(std::string& line) = 0;
};

// Endpoint syntax:
//   tcp://HOST:PORT       connect over TCP
//   exec:COMMAND          spawn COMMAND via /bin/sh and talk over its stdio
std::unique_ptr<LineChannel> open_channel(const std::string& endpoint);

class BridgeScorer final : public SimilarityScorer {
 public:
  explicit BridgeScorer(std::unique_ptr<LineChannel> channel,
                        std::string endpoint = "custom");
  static std::unique_ptr<BridgeScorer> connect(const std::string& endpoint);

  SimilarityScore score(std::string_view candidate,
                        std::string_view reference) override;
  // Sends the pairs one at a time and checks each reply's id.
  std::vector<SimilarityScore> batch_score(
      std::span<const TextPair> pairs) override;
  std::string describe() const override { return "bridge:" + endpoint_; }

 private:
  std::mutex mu_;
  std::unique_ptr<LineChannel> channel_;
  std::string endpoint_;
  std::int64_t next_id_ = 1;
};

// Request/response encoding, shared with tests and fake sidecars.
std::string encode_request(std::int64_t id, std::string_view candidate,
                           std::string_view reference);
// Parses a reply for `expected_id`; throws TransportError on anything else.
SimilarityScore decode_response(std::string_view line, std::int64_t expected_id);

// Environment variable consulted for the bridge endpoint when none is given.
inline constexpr const char* kBridgeEnvVar = "SUMATTACK_BRIDGE";

}  // namespace sumattack

#endif  // SUMATTACK_SIMILARITY_H_
