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

#include "egraph/entailment_graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "egraph/errors.h"

namespace egraph {
namespace {

void CheckScore(double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw ValidationError("score " + std::to_string(score) +
                          " outside [0, 1]");
  }
}

}  // namespace

NodeId EntailmentGraph::AddNode(const TypedPredicate& p) {
  if (auto it = node_ids_.find(p); it != node_ids_.end()) return it->second;
  if (TypePairOf(p) != types_) {
    throw ValidationError("predicate " + RenderPredicate(p) +
                          " does not belong to graph " + types_.Name());
  }
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(p);
  node_ids_.emplace(p, id);
  return id;
}

std::optional<NodeId> EntailmentGraph::FindNode(const TypedPredicate& p) const {
  auto it = node_ids_.find(p);
  if (it == node_ids_.end()) return std::nullopt;
  return it->second;
}

void EntailmentGraph::SetScore(NodeId source, NodeId target, double score) {
  if (source == target) throw ValidationError("self-edges are not stored");
  if (source >= nodes_.size() || target >= nodes_.size()) {
    throw ValidationError("edge refers to an unknown node");
  }
  CheckScore(score);
  auto [it, inserted] = edge_ids_.emplace(Key(source, target), edges_.size());
  if (inserted) {
    edges_.push_back(Edge{source, target, score});
  } else {
    edges_[it->second].score = score;
  }
}

std::optional<double> EntailmentGraph::FindScore(NodeId source,
                                                 NodeId target) const {
  auto index = EdgeIndex(source, target);
  if (!index) return std::nullopt;
  return edges_[*index].score;
}

std::optional<size_t> EntailmentGraph::EdgeIndex(NodeId source,
                                                 NodeId target) const {
  auto it = edge_ids_.find(Key(source, target));
  if (it == edge_ids_.end()) return std::nullopt;
  return it->second;
}

void EntailmentGraph::set_edge_score(size_t index, double score) {
  CheckScore(score);
  edges_.at(index).score = score;
}

std::vector<Edge> EntailmentGraph::SortedEdges() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return Key(a.source, a.target) < Key(b.source, b.target);
  });
  return sorted;
}

bool IdenticalGraphs(const EntailmentGraph& a, const EntailmentGraph& b) {
  if (a.type_pair() != b.type_pair() || a.nodes() != b.nodes() ||
      a.num_edges() != b.num_edges()) {
    return false;
  }
  for (const auto& e : a.edges()) {
    auto other = b.FindScore(e.source, e.target);
    if (!other || std::bit_cast<std::uint64_t>(*other) !=
                      std::bit_cast<std::uint64_t>(e.score)) {
      return false;
    }
  }
  return true;
}

}  // namespace egraph
