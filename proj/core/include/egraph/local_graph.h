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

#ifndef EGRAPH_LOCAL_GRAPH_H_
#define EGRAPH_LOCAL_GRAPH_H_

#include <set>

#include "egraph/entailment_graph.h"
#include "egraph/lexicon.h"
#include "egraph/scorer.h"
#include "egraph/triple_store.h"

namespace egraph {

struct LocalBuildOptions {
  // Scores strictly below this are not stored.
  double prune_below = 0.0;
  int batch_size = 32;
};

// Scores every ordered candidate pair (p, q), p != q, with the scorer on
// the generated sentences (S(p), S(q)). Nodes are the sorted union of all
// predicates in the pairs; pairs the scorer has no score for stay absent.
//
// Throws ValidationError if a pair does not belong to `types`, BuildError
// listing the pairs whose scoring failed, and lets GenerationError through.
EntailmentGraph BuildLocalGraph(const TypePair& types,
                                const std::set<PredicatePair>& pairs,
                                EntailmentScorer& scorer,
                                const GeneratorLexicon& lex,
                                const LocalBuildOptions& options = {});

EntailmentGraph BuildLocalGraph(const TypePair& types,
                                const std::set<PredicatePair>& pairs,
                                const ScorerSpec& spec,
                                const GeneratorLexicon& lex,
                                double prune_below = 0.0);

}  // namespace egraph

#endif  // EGRAPH_LOCAL_GRAPH_H_
