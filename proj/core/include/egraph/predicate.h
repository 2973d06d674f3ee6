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

#ifndef EGRAPH_PREDICATE_H_
#define EGRAPH_PREDICATE_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace egraph {

// A binary typed predicate (w1.i1, w2.i2, t1, t2).
//
// Word chains are stored as token sequences: "prefer.for.2" becomes
// word = {"prefer", "for"} with index 2. When both argument types are equal
// the two slots carry order subscripts, rendered as "location_1" and
// "location_2"; otherwise both subscripts are 0.
struct TypedPredicate {
  std::vector<std::string> word1;
  int idx1 = 1;
  std::vector<std::string> word2;
  int idx2 = 1;
  std::string type1;
  std::string type2;
  int subscript1 = 0;
  int subscript2 = 0;

  bool same_type() const { return type1 == type2; }

  friend auto operator<=>(const TypedPredicate&,
                          const TypedPredicate&) = default;
  friend bool operator==(const TypedPredicate&,
                         const TypedPredicate&) = default;
};

// Unordered pair of argument types in canonical (lexicographic) order. One
// entailment graph exists per TypePair.
struct TypePair {
  std::string first;
  std::string second;

  // "disease#medicine".
  std::string Name() const;
  // Name() with characters outside [A-Za-z0-9._#-] replaced by '_'; used
  // for per-graph file names.
  std::string FileStem() const;

  friend auto operator<=>(const TypePair&, const TypePair&) = default;
  friend bool operator==(const TypePair&, const TypePair&) = default;
};

// The untyped form of a predicate: both word.index pairs, no types.
struct UntypedPredicate {
  std::vector<std::string> word1;
  int idx1 = 1;
  std::vector<std::string> word2;
  int idx2 = 1;

  friend auto operator<=>(const UntypedPredicate&,
                          const UntypedPredicate&) = default;
  friend bool operator==(const UntypedPredicate&,
                         const UntypedPredicate&) = default;
};

// Parses "(w1.i1,w2.i2,t1[_s1],t2[_s2])". Throws ParseError naming the
// offending field.
TypedPredicate ParsePredicate(std::string_view text);
std::string RenderPredicate(const TypedPredicate& p);

// Checks the TypedPredicate invariants; throws ValidationError.
void ValidatePredicate(const TypedPredicate& p);

// Throws ValidationError on empty type names.
TypePair CanonicalTypePair(std::string_view t1, std::string_view t2);
TypePair TypePairOf(const TypedPredicate& p);

// Parses the output of TypePair::Name().
TypePair ParseTypePairName(std::string_view name);

UntypedPredicate UntypedForm(const TypedPredicate& p);
// "(w1.i1,w2.i2)".
std::string RenderUntyped(const UntypedPredicate& u);
UntypedPredicate ParseUntyped(std::string_view text);

// Returns the typed predicate obtained by giving u the argument types
// (t1, t2) with subscripts (s1, s2); subscripts are ignored unless t1 == t2.
TypedPredicate WithTypes(const UntypedPredicate& u, std::string t1,
                         std::string t2, int s1 = 0, int s2 = 0);

struct TypedPredicateHash {
  std::size_t operator()(const TypedPredicate& p) const;
};

struct UntypedPredicateHash {
  std::size_t operator()(const UntypedPredicate& u) const;
};

}  // namespace egraph

#endif  // EGRAPH_PREDICATE_H_
