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

#ifndef EGRAPH_EVALUATION_H_
#define EGRAPH_EVALUATION_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egraph/entailment_graph.h"
#include "egraph/metrics.h"

namespace egraph {

struct EntailmentExample {
  TypedPredicate premise;
  TypedPredicate hypothesis;
  bool label = false;

  friend bool operator==(const EntailmentExample&,
                         const EntailmentExample&) = default;
};

// JSONL rows {"premise_pred": ..., "hypothesis_pred": ..., "label": b}
// where the label is a JSON boolean or 0/1. Throws IngestError naming the
// line, including when the two predicates have different type pairs.
std::vector<EntailmentExample> ParseDataset(std::istream& in);
std::vector<EntailmentExample> LoadDataset(const std::filesystem::path& path);

enum class ScoreSource { kIdentity, kTyped, kBackoff, kNone };

struct ExampleScore {
  double score = 0.0;
  ScoreSource source = ScoreSource::kNone;
  // Graphs averaged over by the backoff.
  int backoff_graphs = 0;
};

class GraphCollection {
 public:
  explicit GraphCollection(std::vector<EntailmentGraph> graphs);

  const std::vector<EntailmentGraph>& graphs() const { return graphs_; }
  const EntailmentGraph* Find(const TypePair& types) const;

  // 1.0 for identical predicates; W from the example's own typed graph
  // when it holds both predicates (absent edge reads 0); otherwise the
  // mean over every graph holding both untyped forms, where each
  // graph contributes the mean over the argument orientations in which it
  // holds both; 0 when no graph qualifies.
  ExampleScore Score(const EntailmentExample& ex) const;

 private:
  std::vector<EntailmentGraph> graphs_;
  std::map<TypePair, size_t> by_types_;
  std::map<UntypedPredicate, std::vector<size_t>> by_untyped_;
};

enum class DirectionalSetting { kA, kB };
DirectionalSetting ParseDirectionalSetting(std::string_view name);

// Setting a keeps an example iff its reverse is present with the opposite
// label. Setting b drops an example iff its reverse is present with the
// same label. Order is preserved.
std::vector<EntailmentExample> DirectionalSubset(
    std::span<const EntailmentExample> dataset, DirectionalSetting setting);

struct EvaluationReport {
  size_t examples = 0;
  size_t positives = 0;
  size_t negatives = 0;
  size_t identity = 0;
  size_t typed = 0;
  size_t backoff = 0;
  size_t unscored = 0;
  double precision_floor = 0.5;
  double prc_auc = 0.0;
  double roc_auc = 0.0;
  std::vector<CurvePoint> curve;
};

// Throws MetricError when the dataset lacks either class.
EvaluationReport Evaluate(const GraphCollection& graphs,
                          std::span<const EntailmentExample> dataset,
                          double precision_floor = 0.5);

std::string ReportToJson(const EvaluationReport& report);
// "threshold precision recall tpr fpr" rows with a header.
void WriteCurveTsv(std::span<const CurvePoint> curve,
                   const std::filesystem::path& path);

}  // namespace egraph

#endif  // EGRAPH_EVALUATION_H_
