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

// Template sentences for typed predicates.
//
// A predicate is turned into a short declarative sentence whose arguments
// are capitalized type names labelled "A" and "B", e.g.
//
//   (prefer.2,prefer.for.2,medicine,disease)
//     -> "Medicine A is preferred for Disease B."
//
// The A/B labels follow the graph's type order so that two predicates of
// the same graph share the same actor naming, which is what makes the
// sentence pair meaningful to an entailment model.

#ifndef EGRAPH_SENTENCE_GENERATOR_H_
#define EGRAPH_SENTENCE_GENERATOR_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egraph/lexicon.h"
#include "egraph/predicate.h"

namespace egraph {

// Ordered argument types of the graph a sentence is generated for. Unlike
// TypePair this is not canonicalized: the order decides which type is "A".
// For equal types the order is implied by the subscripts (_1 is "A").
struct GraphTypeOrder {
  std::string first;
  std::string second;
};

GraphTypeOrder OrderOf(const TypePair& types);
// (type1, type2) of the predicate itself.
GraphTypeOrder OwnOrder(const TypedPredicate& p);

// Throws GenerationError when the predicate has an empty word chain or its
// types do not match graph_types.
std::string GenerateSentence(const TypedPredicate& p,
                             const GraphTypeOrder& graph_types,
                             const GeneratorLexicon& lex);
std::string GenerateSentence(const TypedPredicate& p,
                             const GeneratorLexicon& lex);

// "is" + past participle of the first token + the remaining tokens. A chain
// that already starts with a copula is returned with the copula as "is".
// Throws MorphologyError if the first token is not a verb.
std::vector<std::string> PassiveForm(std::span<const std::string> words,
                                     const GeneratorLexicon& lex);

bool IsVerb(std::string_view word, const GeneratorLexicon& lex);

}  // namespace egraph

#endif  // EGRAPH_SENTENCE_GENERATOR_H_
