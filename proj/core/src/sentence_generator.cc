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

#include "egraph/sentence_generator.h"

#include <algorithm>
#include <cctype>

#include "egraph/errors.h"

namespace egraph {
namespace {

using Tokens = std::vector<std::string>;

bool IsCopula(std::string_view w) { return w == "is" || w == "be"; }

std::string Capitalize(std::string_view type) {
  std::string out(type);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

Tokens Tail(const Tokens& words, size_t from) {
  if (from >= words.size()) return {};
  return Tokens(words.begin() + static_cast<std::ptrdiff_t>(from), words.end());
}

Tokens Head(const Tokens& words, size_t count) {
  count = std::min(count, words.size());
  return Tokens(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(count));
}

// Present tense, third person singular, on the first token.
Tokens ThirdPerson(Tokens words, const GeneratorLexicon& lex) {
  if (words.empty()) return words;
  auto base = lex.BaseForm(words[0]);
  if (base) words[0] = lex.ThirdPersonSingular(*base);
  return words;
}

// Plural agreement for "A and B ...": only the copula changes.
Tokens Plural(Tokens words) {
  if (!words.empty() && IsCopula(words[0])) words[0] = "are";
  return words;
}

// Turns a chain that lists its head verb last ("aggrieved felt") into an
// active clause ("feels aggrieved"). A copula inserted by the generator is
// dropped first.
Tokens Reverse(const Tokens& words, bool copula_inserted,
               const GeneratorLexicon& lex) {
  Tokens out = words;
  if (copula_inserted && !out.empty() && out.front() == "is") {
    out.erase(out.begin());
  }
  std::reverse(out.begin(), out.end());
  return ThirdPerson(std::move(out), lex);
}

class SentenceBuilder {
 public:
  SentenceBuilder& Add(std::string_view word) {
    if (!word.empty()) words_.emplace_back(word);
    return *this;
  }
  SentenceBuilder& Add(const Tokens& words) {
    for (const auto& w : words) Add(w);
    return *this;
  }
  std::string Finish() const {
    std::string out;
    for (const auto& w : words_) {
      if (!out.empty()) out.push_back(' ');
      out.append(w);
    }
    out.push_back('.');
    return out;
  }

 private:
  Tokens words_;
};

// Whether the predicate's argument order agrees with the graph's.
bool SameOrder(const TypedPredicate& p, const GraphTypeOrder& order) {
  if (p.same_type()) {
    if (order.first != p.type1 || order.second != p.type2) {
      throw GenerationError("graph types (" + order.first + "," +
                            order.second + ") do not match " +
                            RenderPredicate(p));
    }
    return p.subscript1 != 2;
  }
  if (order.first == p.type1 && order.second == p.type2) return true;
  if (order.first == p.type2 && order.second == p.type1) return false;
  throw GenerationError("graph types (" + order.first + "," + order.second +
                        ") do not match " + RenderPredicate(p));
}

}  // namespace

GraphTypeOrder OrderOf(const TypePair& types) {
  return GraphTypeOrder{types.first, types.second};
}

GraphTypeOrder OwnOrder(const TypedPredicate& p) {
  return GraphTypeOrder{p.type1, p.type2};
}

bool IsVerb(std::string_view word, const GeneratorLexicon& lex) {
  return lex.IsVerb(word);
}

std::vector<std::string> PassiveForm(std::span<const std::string> words,
                                     const GeneratorLexicon& lex) {
  if (words.empty()) throw MorphologyError("empty word chain");
  Tokens out{"is"};
  if (!IsCopula(words[0])) out.push_back(lex.PastParticiple(words[0]));
  out.insert(out.end(), words.begin() + 1, words.end());
  return out;
}

std::string GenerateSentence(const TypedPredicate& p,
                             const GraphTypeOrder& graph_types,
                             const GeneratorLexicon& lex) {
  if (p.word1.empty() || p.word2.empty()) {
    throw GenerationError("empty word chain in " + RenderPredicate(p));
  }
  for (const auto* chain : {&p.word1, &p.word2}) {
    for (const auto& w : *chain) {
      if (w.empty()) {
        throw GenerationError("empty token in " + RenderPredicate(p));
      }
    }
  }

  const bool same_order = SameOrder(p, graph_types);
  const std::string actor1 =
      Capitalize(p.type1) + (same_order ? " A" : " B");
  const std::string actor2 =
      Capitalize(p.type2) + (same_order ? " B" : " A");

  Tokens w1 = p.word1;
  Tokens w2 = p.word2;
  const bool w1_starts_with_verb = lex.IsVerb(w1.front());
  const bool copula_inserted =
      !w1_starts_with_verb || !lex.IsVerb(w2.front());
  if (copula_inserted) {
    w1.insert(w1.begin(), "is");
    w2.insert(w2.begin(), "is");
  }

  const bool active1 = p.idx1 == 1;
  const bool active2 = p.idx2 == 1;
  const size_t min_len = std::min(w1.size(), w2.size());
  size_t shared = 0;
  while (shared < min_len && w1[shared] == w2[shared]) ++shared;
  const bool pathway = shared == min_len;

  SentenceBuilder s;
  if (active1 && active2) {
    Tokens verb = pathway ? Head(w1, min_len) : Head(w1, 1);
    return s.Add(actor1).Add("and").Add(actor2).Add(Plural(verb)).Finish();
  }
  if (active1) {
    if (pathway) {
      // One chain is a prefix of the other; the longer one carries the
      // complete surface form ("be" vs. "be capital of").
      const Tokens& act = w1.size() < w2.size() ? w2 : w1;
      return s.Add(actor1).Add(ThirdPerson(act, lex)).Add(actor2).Finish();
    }
    return s.Add(actor1)
        .Add(ThirdPerson(w1, lex))
        .Add("Something")
        .Add(Tail(w2, shared))
        .Add(actor2)
        .Finish();
  }
  if (active2) {
    // The second slot is the subject: the clause is reversed into active
    // voice and the actors swap places.
    if (w1_starts_with_verb) {
      return s.Add(actor2)
          .Add(Reverse(Tail(w2, shared), copula_inserted && shared == 0, lex))
          .Add("to")
          .Add(w1)
          .Add(actor1)
          .Finish();
    }
    return s.Add(actor2)
        .Add(Reverse(w2, copula_inserted, lex))
        .Add(Tail(w1, shared))
        .Add(actor1)
        .Finish();
  }
  if (pathway) {
    return s.Add(actor1)
        .Add(PassiveForm(w1, lex))
        .Add(Tail(w2, shared))
        .Add(actor2)
        .Finish();
  }
  return s.Add("Something")
      .Add(ThirdPerson(w1, lex))
      .Add(actor1)
      .Add(Tail(w2, shared))
      .Add(actor2)
      .Finish();
}

std::string GenerateSentence(const TypedPredicate& p,
                             const GeneratorLexicon& lex) {
  return GenerateSentence(p, OwnOrder(p), lex);
}

}  // namespace egraph
