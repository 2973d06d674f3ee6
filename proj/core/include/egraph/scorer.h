// Copyright 2026 The egraph Authors.
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

// Entailment scorers used to build local graphs.
//
//   file    TSV "pred1<TAB>pred2<TAB>prob" or
//           "pred1<TAB>pred2<TAB>entail<TAB>contradict<TAB>neutral" logits.
//   mock    Deterministic logits from a seeded hash of the sentence pair.
//   remote  JSONL-over-HTTP client for an NLI scoring service.
//
// The remote protocol: the client POSTs newline-separated requests
//   {"id": <sha256 of the pair>, "premise": ..., "hypothesis": ...}
// to <endpoint>/score. The response body starts with a handshake line
//   {"labels": ["entail", "contradict", "neutral"]}
// followed by one line per answered request, either
//   {"id": ..., "entail": x, "contradict": y, "neutral": z} or
//   {"id": ..., "logits": [..]}   (ordered as declared by "labels"),
// or {"id": ..., "error": "..."}. Response order is unconstrained.

#ifndef EGRAPH_SCORER_H_
#define EGRAPH_SCORER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egraph/nli.h"
#include "egraph/predicate.h"

namespace egraph {

enum class ScorerKind { kFile, kMock, kRemote };

ScorerKind ParseScorerKind(std::string_view name);
std::string_view ScorerKindName(ScorerKind kind);

struct ScorerSpec {
  ScorerKind kind = ScorerKind::kMock;
  // File path (file) or "http://host:port[/path]" (remote).
  std::string location;
  int batch_size = 32;
  // Mock scorer seed.
  std::uint64_t seed = 0;
  // Remote client: attempts after the first and per-request timeout.
  int max_retries = 2;
  double timeout_seconds = 60.0;
  // On-disk logit cache for the remote scorer; empty disables it.
  std::string cache_path;

  // Throws ValidationError.
  void Validate() const;
};

struct ScoreQuery {
  const TypedPredicate* premise = nullptr;
  const TypedPredicate* hypothesis = nullptr;
  std::string premise_sentence;
  std::string hypothesis_sentence;
};

class EntailmentScorer {
 public:
  virtual ~EntailmentScorer() = default;

  // One P(premise -> hypothesis) per query; nullopt when the scorer has no
  // score for the pair.
  virtual std::vector<std::optional<double>> Score(
      std::span<const ScoreQuery> batch) = 0;
};

class FileScorer : public EntailmentScorer {
 public:
  static FileScorer Load(const std::filesystem::path& path);

  std::vector<std::optional<double>> Score(
      std::span<const ScoreQuery> batch) override;

  size_t size() const { return scores_.size(); }

 private:
  std::map<std::pair<TypedPredicate, TypedPredicate>, double> scores_;
};

class MockScorer : public EntailmentScorer {
 public:
  explicit MockScorer(std::uint64_t seed) : seed_(seed) {}

  // Logits in [-3, 3] from SHA-256(seed, premise, hypothesis); identical
  // sentences get (6, -3, -3).
  static NliLogits Logits(std::uint64_t seed, std::string_view premise,
                          std::string_view hypothesis);

  std::vector<std::optional<double>> Score(
      std::span<const ScoreQuery> batch) override;

 private:
  std::uint64_t seed_;
};

struct SentencePair {
  std::string premise;
  std::string hypothesis;
};

// Content hash used as the request id.
std::string RequestId(std::string_view premise, std::string_view hypothesis);

// Scores the pairs through the remote service. Results are matched by id,
// so any response order is accepted. Requests that are not answered are
// re-sent up to spec.max_retries times; then TransportError names them.
std::vector<NliLogits> RemoteScoreBatch(std::span<const SentencePair> pairs,
                                        const ScorerSpec& spec);

// Append-only TSV "id<TAB>entail<TAB>contradict<TAB>neutral" keyed by
// RequestId.
class ScoreCache {
 public:
  explicit ScoreCache(std::filesystem::path path);

  std::optional<NliLogits> Find(const std::string& id) const;
  void Put(const std::string& id, const NliLogits& logits);
  size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path path_;
  std::map<std::string, NliLogits> entries_;
};

class RemoteScorer : public EntailmentScorer {
 public:
  explicit RemoteScorer(ScorerSpec spec);

  std::vector<std::optional<double>> Score(
      std::span<const ScoreQuery> batch) override;

 private:
  ScorerSpec spec_;
  std::optional<ScoreCache> cache_;
};

std::unique_ptr<EntailmentScorer> MakeScorer(const ScorerSpec& spec);

}  // namespace egraph

#endif  // EGRAPH_SCORER_H_
