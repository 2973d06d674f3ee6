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

// Reference implementations used only by the tests. They favour the most
// direct formulation over speed: dense matrices, triple loops, pairwise
// counts, extended precision.

#ifndef EGRAPH_TESTS_ORACLES_ORACLES_H_
#define EGRAPH_TESTS_ORACLES_ORACLES_H_

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "egraph/entailment_graph.h"
#include "egraph/metrics.h"
#include "egraph/nli.h"
#include "egraph/triple_store.h"

namespace egraph::oracle {

// softmax(entail) evaluated with 50 decimal digits.
long double ReferenceEntailProbability(const NliLogits& logits);

struct BruteForceLoss {
  long double distance = 0;
  long double l1 = 0;
  long double l2 = 0;
  long double l3 = 0;
  std::int64_t active_triples = 0;
};

// Scans every ordered triple of distinct nodes of the dense score matrix.
// A triple is active when both premise scores exceed 1 - epsilon; the
// losses are evaluated in product form (log of the ratio Wab*Wbc/Wac).
// The distance term runs over the entries stored in w.
BruteForceLoss EvaluateLoss(const EntailmentGraph& w,
                            const EntailmentGraph& local, double epsilon);

// Active (a, b, c) triples by cubic scan.
std::set<std::tuple<NodeId, NodeId, NodeId>> ScanTriples(
    const EntailmentGraph& w, double epsilon);

// Fraction of (positive, negative) pairs ordered correctly, ties half.
double PairwiseRocAuc(const std::vector<ScoredLabel>& data);

// Recomputes precision and recall from scratch at every distinct score and
// integrates max(0, precision - floor) over recall exactly on each linear
// piece, starting from (0, first precision).
double SweepPrcAuc(const std::vector<ScoredLabel>& data, double floor);

// (predicate text, entity1, entity2) rows that survive both frequency
// rules, computed over plain vectors.
std::set<std::tuple<std::string, std::string, std::string>> FilterRows(
    const std::vector<Triple>& rows, int min_rels, int min_pairs);

}  // namespace egraph::oracle

#endif  // EGRAPH_TESTS_ORACLES_ORACLES_H_
