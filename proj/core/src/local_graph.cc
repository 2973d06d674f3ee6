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

#include "egraph/local_graph.h"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "egraph/errors.h"
#include "egraph/sentence_generator.h"

namespace egraph {

EntailmentGraph BuildLocalGraph(const TypePair& types,
                                const std::set<PredicatePair>& pairs,
                                EntailmentScorer& scorer,
                                const GeneratorLexicon& lex,
                                const LocalBuildOptions& options) {
  if (options.batch_size < 1) throw ValidationError("batch_size must be >= 1");
  std::set<TypedPredicate> predicates;
  for (const auto& [p, q] : pairs) {
    for (const auto* x : {&p, &q}) {
      if (TypePairOf(*x) != types) {
        throw ValidationError("predicate " + RenderPredicate(*x) +
                              " does not belong to graph " + types.Name());
      }
      predicates.insert(*x);
    }
  }

  EntailmentGraph graph(types);
  const GraphTypeOrder order = OrderOf(types);
  std::map<TypedPredicate, std::string> sentences;
  for (const auto& p : predicates) {
    graph.AddNode(p);
    sentences.emplace(p, GenerateSentence(p, order, lex));
  }

  std::vector<ScoreQuery> queries;
  for (const auto& [p, q] : pairs) {
    if (p == q) continue;
    queries.push_back(ScoreQuery{&p, &q, sentences.at(p), sentences.at(q)});
  }

  std::vector<const ScoreQuery*> failed;
  std::string first_error;
  const size_t step = static_cast<size_t>(options.batch_size);
  for (size_t start = 0; start < queries.size(); start += step) {
    const size_t n = std::min(step, queries.size() - start);
    std::span<const ScoreQuery> batch(queries.data() + start, n);
    std::vector<std::optional<double>> scores;
    try {
      scores = scorer.Score(batch);
      if (scores.size() != n) {
        throw TransportError("scorer returned " +
                             std::to_string(scores.size()) + " scores for " +
                             std::to_string(n) + " queries");
      }
    } catch (const TransportError& e) {
      if (first_error.empty()) first_error = e.what();
      for (const auto& q : batch) failed.push_back(&q);
      continue;
    }
    for (size_t i = 0; i < n; ++i) {
      if (!scores[i] || *scores[i] < options.prune_below) continue;
      graph.SetScore(*graph.FindNode(*batch[i].premise),
                     *graph.FindNode(*batch[i].hypothesis), *scores[i]);
    }
  }

  if (!failed.empty()) {
    std::string msg = "scoring failed for " + std::to_string(failed.size()) +
                      " pair(s) in " + types.Name() + " (" + first_error +
                      "):";
    for (const auto* q : failed) {
      msg += "\n  " + RenderPredicate(*q->premise) + " -> " +
             RenderPredicate(*q->hypothesis);
    }
    throw BuildError(msg);
  }
  return graph;
}

EntailmentGraph BuildLocalGraph(const TypePair& types,
                                const std::set<PredicatePair>& pairs,
                                const ScorerSpec& spec,
                                const GeneratorLexicon& lex,
                                double prune_below) {
  auto scorer = MakeScorer(spec);
  return BuildLocalGraph(types, pairs, *scorer, lex,
                         LocalBuildOptions{prune_below, spec.batch_size});
}

}  // namespace egraph
