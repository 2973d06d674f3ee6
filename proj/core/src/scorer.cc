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

#include "egraph/scorer.h"

#include <charconv>
#include <fstream>

#include "egraph/errors.h"
#include "egraph/hashing.h"

namespace egraph {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

double ParseDouble(std::string_view text, const std::string& where) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw IngestError(where + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

}  // namespace

ScorerKind ParseScorerKind(std::string_view name) {
  if (name == "file") return ScorerKind::kFile;
  if (name == "mock") return ScorerKind::kMock;
  if (name == "remote") return ScorerKind::kRemote;
  throw ValidationError("unknown scorer kind '" + std::string(name) +
                        "' (expected file, mock or remote)");
}

std::string_view ScorerKindName(ScorerKind kind) {
  switch (kind) {
    case ScorerKind::kFile:
      return "file";
    case ScorerKind::kMock:
      return "mock";
    case ScorerKind::kRemote:
      return "remote";
  }
  return "unknown";
}

void ScorerSpec::Validate() const {
  if (batch_size < 1) throw ValidationError("batch_size must be >= 1");
  if (max_retries < 0) throw ValidationError("max_retries must be >= 0");
  if (!(timeout_seconds > 0)) {
    throw ValidationError("timeout_seconds must be positive");
  }
  if (kind != ScorerKind::kMock && location.empty()) {
    throw ValidationError(std::string(ScorerKindName(kind)) +
                          " scorer needs a location");
  }
}

FileScorer FileScorer::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open score file " + path.string());
  FileScorer scorer;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    auto fields = SplitTabs(line);
    double prob = 0;
    if (fields.size() == 3) {
      prob = ParseDouble(fields[2], where);
      if (!(prob >= 0.0 && prob <= 1.0)) {
        throw IngestError(where + ": probability outside [0, 1]");
      }
    } else if (fields.size() == 5) {
      NliLogits logits{ParseDouble(fields[2], where),
                       ParseDouble(fields[3], where),
                       ParseDouble(fields[4], where)};
      prob = EntailProbability(logits);
    } else {
      throw IngestError(where + ": expected 3 or 5 tab-separated fields");
    }
    try {
      scorer.scores_[{ParsePredicate(fields[0]), ParsePredicate(fields[1])}] =
          prob;
    } catch (const ParseError& e) {
      throw IngestError(where + ": " + e.what());
    }
  }
  return scorer;
}

std::vector<std::optional<double>> FileScorer::Score(
    std::span<const ScoreQuery> batch) {
  std::vector<std::optional<double>> out;
  out.reserve(batch.size());
  for (const auto& q : batch) {
    auto it = scores_.find({*q.premise, *q.hypothesis});
    out.push_back(it == scores_.end() ? std::nullopt
                                      : std::optional<double>(it->second));
  }
  return out;
}

NliLogits MockScorer::Logits(std::uint64_t seed, std::string_view premise,
                             std::string_view hypothesis) {
  if (premise == hypothesis) return NliLogits{6.0, -3.0, -3.0};
  std::string material = std::to_string(seed);
  material += '\x1f';
  material += premise;
  material += '\x1f';
  material += hypothesis;
  auto digest = Sha256(material);
  auto unit = [&](int k) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | digest[8 * k + i];
    return static_cast<double>(v >> 11) * 0x1.0p-53;
  };
  return NliLogits{-3.0 + 6.0 * unit(0), -3.0 + 6.0 * unit(1),
                   -3.0 + 6.0 * unit(2)};
}

std::vector<std::optional<double>> MockScorer::Score(
    std::span<const ScoreQuery> batch) {
  std::vector<std::optional<double>> out;
  out.reserve(batch.size());
  for (const auto& q : batch) {
    out.push_back(EntailProbability(
        Logits(seed_, q.premise_sentence, q.hypothesis_sentence)));
  }
  return out;
}

std::unique_ptr<EntailmentScorer> MakeScorer(const ScorerSpec& spec) {
  spec.Validate();
  switch (spec.kind) {
    case ScorerKind::kFile:
      return std::make_unique<FileScorer>(FileScorer::Load(spec.location));
    case ScorerKind::kMock:
      return std::make_unique<MockScorer>(spec.seed);
    case ScorerKind::kRemote:
      return std::make_unique<RemoteScorer>(spec);
  }
  throw ValidationError("unknown scorer kind");
}

}  // namespace egraph
