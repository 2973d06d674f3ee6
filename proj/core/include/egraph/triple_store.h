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

#ifndef EGRAPH_TRIPLE_STORE_H_
#define EGRAPH_TRIPLE_STORE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "egraph/predicate.h"

namespace egraph {

// A predicate occurrence with its two argument entities. entity1 fills the
// slot typed type1, entity2 the slot typed type2.
struct Triple {
  TypedPredicate predicate;
  std::string entity1;
  std::string entity2;
  std::int64_t count = 1;
};

// Argument pair oriented by the graph's type order: for distinct types the
// entity of the canonically first type comes first, for equal types the
// entity of the "_1" slot does. Two predicates that share an EntityPair
// talk about the same two entities in the same roles.
struct EntityPair {
  std::string first;
  std::string second;

  friend auto operator<=>(const EntityPair&, const EntityPair&) = default;
  friend bool operator==(const EntityPair&, const EntityPair&) = default;
};

EntityPair ArgumentPair(const Triple& t);

// Triples keyed by (predicate, entity1, entity2), with both co-occurrence
// indexes kept in sync.
class TripleStore {
 public:
  using PairIndex = std::map<EntityPair, std::set<TypedPredicate>>;
  using PredicateIndex = std::map<TypedPredicate, std::set<EntityPair>>;

  // Adds a triple; an existing (predicate, entity1, entity2) row absorbs
  // the count. Throws ValidationError on count < 1 or empty entities.
  void Add(Triple t);

  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  // Sorted by (predicate, entity1, entity2).
  std::vector<Triple> triples() const;

  const PairIndex& predicates_by_pair() const { return by_pair_; }
  const PredicateIndex& pairs_by_predicate() const { return by_predicate_; }

  // Rebuilds both indexes from the triples and compares.
  bool IndexesConsistent() const;

 private:
  using Key = std::tuple<TypedPredicate, std::string, std::string>;
  std::map<Key, std::int64_t> triples_;
  PairIndex by_pair_;
  PredicateIndex by_predicate_;
};

// JSONL rows {"pred": ..., "arg1": ..., "arg2": ..., "count": n}; count
// defaults to 1. Throws IngestError naming the 1-based line number.
TripleStore ParseTriples(std::istream& in);
TripleStore LoadTriples(const std::filesystem::path& path);

struct FilterOptions {
  int min_rels = 3;
  int min_pairs = 3;
  // Repeat both rules until nothing changes.
  bool fixpoint = false;
};

// Rule 1 drops argument pairs seen with fewer than min_rels distinct typed
// predicates; rule 2 then drops predicates left with fewer than min_pairs
// distinct argument pairs.
TripleStore FilterTriples(const TripleStore& store,
                          const FilterOptions& options = {});

using PredicatePair = std::pair<TypedPredicate, TypedPredicate>;
using CandidateMap = std::map<TypePair, std::set<PredicatePair>>;

// All ordered pairs (p, q), p != q, of predicates sharing an argument pair,
// grouped by type pair. Predicates of different type pairs never pair up.
CandidateMap CandidatePairs(const TripleStore& store);

// One "<type pair name>.tsv" per graph with "pred1<TAB>pred2" rows.
void WriteCandidatePairs(const CandidateMap& pairs,
                         const std::filesystem::path& dir);
CandidateMap ReadCandidatePairs(const std::filesystem::path& dir);

}  // namespace egraph

#endif  // EGRAPH_TRIPLE_STORE_H_
