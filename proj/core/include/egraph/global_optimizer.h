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

// Soft transitivity over a typed entailment graph.
//
// For premise edges a->b and b->c that both score above 1 - epsilon, the
// implied edge a->c is pushed up by one of three losses:
//
//   L1  relu(log Wab + log Wbc - log Wac)
//   L2  -log Wac                  if Wab * Wbc > Wac
//   L3  -Wab * Wbc * log Wac      if Wab * Wbc > Wac
//
// and the objective is sum (W - Wlocal)^2 + lambda * sum L over all gated
// triples. Indicators are constants under differentiation.

#ifndef EGRAPH_GLOBAL_OPTIMIZER_H_
#define EGRAPH_GLOBAL_OPTIMIZER_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "egraph/entailment_graph.h"

namespace egraph {

enum class ConstraintVariant { kL1, kL2, kL3 };
enum class GateSource { kCurrent, kLocal };

// Accepts "l1"/"L1" etc.
ConstraintVariant ParseConstraintVariant(std::string_view name);
std::string_view ConstraintVariantName(ConstraintVariant v);
GateSource ParseGateSource(std::string_view name);
std::string_view GateSourceName(GateSource g);

struct GlobalConfig {
  ConstraintVariant variant = ConstraintVariant::kL3;
  double epsilon = 0.02;
  double lambda = 1.0;
  double learning_rate = 0.05;
  int epochs = 5;
  double score_floor = 1e-4;
  // kCurrent re-enumerates triples from W every epoch; kLocal fixes the
  // triple set from the local graph.
  GateSource gate_source = GateSource::kCurrent;
  // 0 runs full-batch descent; N > 0 takes one step per shuffled chunk of
  // N triples.
  int minibatch = 0;
  std::uint64_t seed = 0;

  // Throws ValidationError.
  void Validate() const;
};

struct TransitivityTriple {
  NodeId a = 0;
  NodeId b = 0;
  NodeId c = 0;

  friend auto operator<=>(const TransitivityTriple&,
                          const TransitivityTriple&) = default;
  friend bool operator==(const TransitivityTriple&,
                         const TransitivityTriple&) = default;
};

struct LossReport {
  double distance_term = 0.0;
  double constraint_term = 0.0;
  double total = 0.0;
  std::int64_t triple_count = 0;
  std::int64_t violated_count = 0;
};

// Triples of distinct nodes with W[a][b] > 1 - epsilon and
// W[b][c] > 1 - epsilon, sorted. Joins the high-confidence edges on b.
std::vector<TransitivityTriple> EnumerateTriples(const EntailmentGraph& graph,
                                                 double epsilon);

// Copy of graph where every (a, c) of the triples holds
// max(existing, floor).
EntailmentGraph MaterializeHypotheses(
    const EntailmentGraph& graph, std::span<const TransitivityTriple> triples,
    double score_floor);

struct LossGradient {
  LossReport report;
  // Indexed like w.edges().
  std::vector<double> gradient;
};

// Loss and gradient of the objective at w. `local` must have the same
// nodes as w; its absent entries count as 0. Every triple's three edges
// must exist in w (ValidationError) and W[a][c] must be >= the floor
// (NumericError).
LossGradient ComputeLossAndGradient(
    const EntailmentGraph& w, const EntailmentGraph& local,
    std::span<const TransitivityTriple> triples, const GlobalConfig& config);

struct OptimizeResult {
  EntailmentGraph graph;
  // Loss before each epoch's update.
  std::vector<LossReport> trajectory;
};

// Gradient descent from W = Wlocal. Entries with a nonzero gradient move
// to clamp(W - lr * grad, floor, 1); the rest keep their value. With
// lambda = 0 the local graph is returned as is.
OptimizeResult Optimize(const EntailmentGraph& local,
                        const GlobalConfig& config);

}  // namespace egraph

#endif  // EGRAPH_GLOBAL_OPTIMIZER_H_
