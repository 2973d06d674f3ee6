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

#ifndef EGRAPH_ENTAILMENT_GRAPH_H_
#define EGRAPH_ENTAILMENT_GRAPH_H_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "egraph/predicate.h"

namespace egraph {

using NodeId = std::uint32_t;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;
  double score = 0.0;
};

// Typed entailment graph G(t1, t2): the predicates of one type pair and a
// sparse score matrix W with entries in [0, 1]. Absent entries read as 0.
// Self-edges are never stored.
//
// Node ids are assigned in insertion order. Edges keep insertion order too;
// SortedEdges() gives the (source, target) order used for persistence.
class EntailmentGraph {
 public:
  explicit EntailmentGraph(TypePair types) : types_(std::move(types)) {}

  const TypePair& type_pair() const { return types_; }

  // Returns the id of p, adding it if needed. Throws ValidationError if p
  // does not belong to this graph's type pair.
  NodeId AddNode(const TypedPredicate& p);
  std::optional<NodeId> FindNode(const TypedPredicate& p) const;
  const TypedPredicate& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<TypedPredicate>& nodes() const { return nodes_; }
  size_t num_nodes() const { return nodes_.size(); }

  // Inserts or overwrites W[source][target]. Throws ValidationError for
  // self-edges, unknown nodes and scores outside [0, 1].
  void SetScore(NodeId source, NodeId target, double score);
  std::optional<double> FindScore(NodeId source, NodeId target) const;
  double Score(NodeId source, NodeId target) const {
    return FindScore(source, target).value_or(0.0);
  }
  bool HasEdge(NodeId source, NodeId target) const {
    return EdgeIndex(source, target).has_value();
  }

  std::optional<size_t> EdgeIndex(NodeId source, NodeId target) const;
  const std::vector<Edge>& edges() const { return edges_; }
  size_t num_edges() const { return edges_.size(); }
  // Range-checked like SetScore.
  void set_edge_score(size_t index, double score);

  std::vector<Edge> SortedEdges() const;

 private:
  static std::uint64_t Key(NodeId source, NodeId target) {
    return (static_cast<std::uint64_t>(source) << 32) | target;
  }

  TypePair types_;
  std::vector<TypedPredicate> nodes_;
  std::unordered_map<TypedPredicate, NodeId, TypedPredicateHash> node_ids_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, size_t> edge_ids_;
};

// Same type pair, same nodes in the same order and bit-identical scores on
// the same edge set.
bool IdenticalGraphs(const EntailmentGraph& a, const EntailmentGraph& b);

}  // namespace egraph

#endif  // EGRAPH_ENTAILMENT_GRAPH_H_
