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

#include "egraph/global_optimizer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "egraph/errors.h"

namespace egraph {
namespace {

struct Accumulated {
  LossReport report;
  std::vector<double> gradient;
};

size_t RequireEdge(const EntailmentGraph& w, NodeId s, NodeId t) {
  auto index = w.EdgeIndex(s, t);
  if (!index) {
    throw ValidationError("triple edge " + std::to_string(s) + "->" +
                          std::to_string(t) + " missing from graph " +
                          w.type_pair().Name());
  }
  return *index;
}

// Distance part scaled by distance_scale, constraint part over `triples`.
Accumulated Accumulate(const EntailmentGraph& w, const EntailmentGraph& local,
                       std::span<const TransitivityTriple> triples,
                       const GlobalConfig& config, double distance_scale) {
  if (local.num_nodes() != w.num_nodes() ||
      local.type_pair() != w.type_pair()) {
    throw ValidationError("local graph does not match the optimized graph");
  }
  Accumulated acc;
  acc.gradient.assign(w.num_edges(), 0.0);
  const auto& edges = w.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    const double diff = edges[i].score - local.Score(edges[i].source,
                                                     edges[i].target);
    acc.report.distance_term += diff * diff;
    acc.gradient[i] += distance_scale * 2.0 * diff;
  }

  const double lambda = config.lambda;
  for (const auto& t : triples) {
    const size_t iab = RequireEdge(w, t.a, t.b);
    const size_t ibc = RequireEdge(w, t.b, t.c);
    const size_t iac = RequireEdge(w, t.a, t.c);
    const double wab = edges[iab].score;
    const double wbc = edges[ibc].score;
    const double wac = edges[iac].score;
    if (!(wac >= config.score_floor) || !(wab > 0.0) || !(wbc > 0.0)) {
      throw NumericError("score below floor on triple (" +
                         std::to_string(t.a) + "," + std::to_string(t.b) +
                         "," + std::to_string(t.c) + "): W_ac = " +
                         std::to_string(wac));
    }
    ++acc.report.triple_count;
    const double log_ac = std::log(wac);
    switch (config.variant) {
      case ConstraintVariant::kL1: {
        const double v = std::log(wab) + std::log(wbc) - log_ac;
        if (v > 0.0) {
          ++acc.report.violated_count;
          acc.report.constraint_term += v;
          acc.gradient[iab] += lambda / wab;
          acc.gradient[ibc] += lambda / wbc;
          acc.gradient[iac] -= lambda / wac;
        }
        break;
      }
      case ConstraintVariant::kL2:
        if (wab * wbc > wac) {
          ++acc.report.violated_count;
          acc.report.constraint_term -= log_ac;
          acc.gradient[iac] -= lambda / wac;
        }
        break;
      case ConstraintVariant::kL3:
        if (wab * wbc > wac) {
          ++acc.report.violated_count;
          acc.report.constraint_term -= wab * wbc * log_ac;
          acc.gradient[iac] -= lambda * wab * wbc / wac;
          acc.gradient[iab] -= lambda * wbc * log_ac;
          acc.gradient[ibc] -= lambda * wab * log_ac;
        }
        break;
    }
  }
  acc.report.total =
      acc.report.distance_term + lambda * acc.report.constraint_term;
  return acc;
}

void CheckFinite(const LossReport& r, const EntailmentGraph& w, int epoch) {
  if (!std::isfinite(r.total)) {
    throw NumericError(
        "non-finite loss in graph " + w.type_pair().Name() + " at epoch " +
        std::to_string(epoch) + ": distance " +
        std::to_string(r.distance_term) + ", constraint " +
        std::to_string(r.constraint_term) + ", triples " +
        std::to_string(r.triple_count));
  }
}

void Step(EntailmentGraph& w, const std::vector<double>& gradient,
          const GlobalConfig& config) {
  for (size_t i = 0; i < gradient.size(); ++i) {
    if (gradient[i] == 0.0) continue;
    const double next = w.edges()[i].score - config.learning_rate * gradient[i];
    if (!std::isfinite(next)) {
      throw NumericError("non-finite update on edge " + std::to_string(i) +
                         " of graph " + w.type_pair().Name());
    }
    w.set_edge_score(i, std::clamp(next, config.score_floor, 1.0));
  }
}

}  // namespace

ConstraintVariant ParseConstraintVariant(std::string_view name) {
  if (name == "l1" || name == "L1") return ConstraintVariant::kL1;
  if (name == "l2" || name == "L2") return ConstraintVariant::kL2;
  if (name == "l3" || name == "L3") return ConstraintVariant::kL3;
  throw ValidationError("unknown variant '" + std::string(name) +
                        "' (expected l1, l2 or l3)");
}

std::string_view ConstraintVariantName(ConstraintVariant v) {
  switch (v) {
    case ConstraintVariant::kL1:
      return "l1";
    case ConstraintVariant::kL2:
      return "l2";
    case ConstraintVariant::kL3:
      return "l3";
  }
  return "unknown";
}

GateSource ParseGateSource(std::string_view name) {
  if (name == "current") return GateSource::kCurrent;
  if (name == "local") return GateSource::kLocal;
  throw ValidationError("unknown gate source '" + std::string(name) +
                        "' (expected current or local)");
}

std::string_view GateSourceName(GateSource g) {
  return g == GateSource::kCurrent ? "current" : "local";
}

void GlobalConfig::Validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ValidationError("epsilon must be in (0, 1)");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("lambda must be >= 0");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ValidationError("learning rate must be > 0");
  }
  if (epochs < 1) throw ValidationError("epochs must be >= 1");
  if (!(score_floor > 0.0 && score_floor < 1.0)) {
    throw ValidationError("score floor must be in (0, 1)");
  }
  if (minibatch < 0) throw ValidationError("minibatch must be >= 0");
}

std::vector<TransitivityTriple> EnumerateTriples(const EntailmentGraph& graph,
                                                 double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ValidationError("epsilon must be in (0, 1)");
  }
  const double gate = 1.0 - epsilon;
  std::vector<std::vector<NodeId>> out(graph.num_nodes());
  for (const auto& e : graph.edges()) {
    if (e.score > gate) out[e.source].push_back(e.target);
  }
  std::vector<TransitivityTriple> triples;
  for (NodeId a = 0; a < out.size(); ++a) {
    for (NodeId b : out[a]) {
      for (NodeId c : out[b]) {
        if (c != a) triples.push_back({a, b, c});
      }
    }
  }
  std::sort(triples.begin(), triples.end());
  return triples;
}

EntailmentGraph MaterializeHypotheses(
    const EntailmentGraph& graph, std::span<const TransitivityTriple> triples,
    double score_floor) {
  EntailmentGraph out = graph;
  for (const auto& t : triples) {
    auto current = out.FindScore(t.a, t.c);
    if (!current || *current < score_floor) {
      out.SetScore(t.a, t.c, score_floor);
    }
  }
  return out;
}

LossGradient ComputeLossAndGradient(
    const EntailmentGraph& w, const EntailmentGraph& local,
    std::span<const TransitivityTriple> triples, const GlobalConfig& config) {
  auto acc = Accumulate(w, local, triples, config, 1.0);
  return LossGradient{acc.report, std::move(acc.gradient)};
}

OptimizeResult Optimize(const EntailmentGraph& local,
                        const GlobalConfig& config) {
  config.Validate();
  OptimizeResult result{local, {}};
  std::vector<TransitivityTriple> fixed;
  if (config.gate_source == GateSource::kLocal) {
    fixed = EnumerateTriples(local, config.epsilon);
  }

  if (config.lambda == 0.0) {
    const auto triples = config.gate_source == GateSource::kLocal
                             ? fixed
                             : EnumerateTriples(local, config.epsilon);
    const auto probe =
        MaterializeHypotheses(local, triples, config.score_floor);
    const auto acc = Accumulate(probe, local, triples, config, 1.0);
    CheckFinite(acc.report, local, 0);
    result.trajectory.assign(config.epochs, acc.report);
    return result;
  }

  std::mt19937_64 rng(config.seed);
  EntailmentGraph& w = result.graph;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const auto triples = config.gate_source == GateSource::kLocal
                             ? fixed
                             : EnumerateTriples(w, config.epsilon);
    w = MaterializeHypotheses(w, triples, config.score_floor);
    auto acc = Accumulate(w, local, triples, config, 1.0);
    CheckFinite(acc.report, w, epoch);
    result.trajectory.push_back(acc.report);

    if (config.minibatch == 0 || triples.empty()) {
      Step(w, acc.gradient, config);
      continue;
    }
    std::vector<TransitivityTriple> order = triples;
    std::shuffle(order.begin(), order.end(), rng);
    const size_t chunk = static_cast<size_t>(config.minibatch);
    for (size_t start = 0; start < order.size(); start += chunk) {
      const size_t n = std::min(chunk, order.size() - start);
      std::span<const TransitivityTriple> part(order.data() + start, n);
      auto step = Accumulate(w, local, part, config,
                             static_cast<double>(n) / order.size());
      Step(w, step.gradient, config);
    }
  }
  return result;
}

}  // namespace egraph
