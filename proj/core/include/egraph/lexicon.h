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

#ifndef EGRAPH_LEXICON_H_
#define EGRAPH_LEXICON_H_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace egraph {

// Verb lemmas plus irregular past participles used by the sentence
// generator. Lookups are pure; a lexicon is immutable after construction.
//
// Files: the verb list holds one lemma per line; the override file holds
// "lemma<TAB>participle" lines. Blank lines and lines starting with '#' are
// skipped. Every override lemma must be in the verb list.
class GeneratorLexicon {
 public:
  GeneratorLexicon(std::vector<std::string> verbs,
                   std::map<std::string, std::string> participles);

  // The lexicon compiled into the library from data/.
  static const GeneratorLexicon& Default();

  static GeneratorLexicon Parse(std::string_view verbs_text,
                                std::string_view participles_text);
  static GeneratorLexicon FromFiles(
      const std::filesystem::path& verbs,
      const std::optional<std::filesystem::path>& participles);

  // True iff word is a listed lemma; "is" and "be" always count.
  bool IsVerb(std::string_view word) const;

  // Override table first, then the regular rules. Throws MorphologyError if
  // the word is not a verb.
  std::string PastParticiple(std::string_view verb) const;

  // "contain" -> "contains", "be" -> "is", "carry" -> "carries".
  std::string ThirdPersonSingular(std::string_view verb) const;

  // Lemma for a verb, an irregular participle ("felt" -> "feel") or a
  // regular "-ed" form whose stem is a verb. nullopt for non-verbs.
  std::optional<std::string> BaseForm(std::string_view form) const;

  size_t verb_count() const { return verbs_.size(); }
  size_t override_count() const { return participles_.size(); }

 private:
  std::set<std::string, std::less<>> verbs_;
  std::map<std::string, std::string, std::less<>> participles_;
  std::map<std::string, std::string, std::less<>> irregular_lemmas_;
};

}  // namespace egraph

#endif  // EGRAPH_LEXICON_H_
