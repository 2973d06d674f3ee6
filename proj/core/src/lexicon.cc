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

#include "egraph/lexicon.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "egraph/errors.h"

namespace egraph {
namespace internal {
extern const std::string_view kDefaultVerbs;
extern const std::string_view kDefaultParticiples;
}  // namespace internal

namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Yields the non-empty, non-comment lines of a text blob.
std::vector<std::string_view> DataLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view()
                                         : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GeneratorLexicon::GeneratorLexicon(
    std::vector<std::string> verbs,
    std::map<std::string, std::string> participles) {
  for (auto& v : verbs) {
    if (v.empty()) throw ValidationError("empty verb lemma in lexicon");
    verbs_.insert(std::move(v));
  }
  verbs_.insert("be");
  verbs_.insert("is");
  for (auto& [lemma, participle] : participles) {
    if (!verbs_.contains(lemma)) {
      throw ValidationError("participle override for '" + lemma +
                            "' which is not in the verb list");
    }
    if (participle.empty()) {
      throw ValidationError("empty participle for '" + lemma + "'");
    }
    irregular_lemmas_.emplace(participle, lemma);
    participles_.emplace(lemma, std::move(participle));
  }
}

const GeneratorLexicon& GeneratorLexicon::Default() {
  static const GeneratorLexicon* lexicon = new GeneratorLexicon(
      Parse(internal::kDefaultVerbs, internal::kDefaultParticiples));
  return *lexicon;
}

GeneratorLexicon GeneratorLexicon::Parse(std::string_view verbs_text,
                                         std::string_view participles_text) {
  std::vector<std::string> verbs;
  for (auto line : DataLines(verbs_text)) verbs.emplace_back(line);
  std::map<std::string, std::string> participles;
  int line_no = 0;
  for (auto line : DataLines(participles_text)) {
    ++line_no;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ParseError("participle override line " + std::to_string(line_no) +
                       ": expected lemma<TAB>participle");
    }
    participles.emplace(std::string(line.substr(0, tab)),
                        std::string(line.substr(tab + 1)));
  }
  return GeneratorLexicon(std::move(verbs), std::move(participles));
}

GeneratorLexicon GeneratorLexicon::FromFiles(
    const std::filesystem::path& verbs,
    const std::optional<std::filesystem::path>& participles) {
  std::string participle_text = participles ? ReadFile(*participles) : "";
  return Parse(ReadFile(verbs), participle_text);
}

bool GeneratorLexicon::IsVerb(std::string_view word) const {
  return verbs_.find(word) != verbs_.end();
}

std::string GeneratorLexicon::PastParticiple(std::string_view verb) const {
  if (!IsVerb(verb)) {
    throw MorphologyError("'" + std::string(verb) + "' is not a verb");
  }
  if (verb == "be" || verb == "is") return "been";
  if (auto it = participles_.find(verb); it != participles_.end()) {
    return it->second;
  }
  std::string w(verb);
  if (EndsWith(w, "e")) return w + "d";
  if (w.size() > 1 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ied";
  }
  return w + "ed";
}

std::string GeneratorLexicon::ThirdPersonSingular(std::string_view verb) const {
  if (verb == "be" || verb == "is") return "is";
  if (verb == "have") return "has";
  std::string w(verb);
  if (EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
      EndsWith(w, "ch") || EndsWith(w, "sh") || EndsWith(w, "o")) {
    return w + "es";
  }
  if (w.size() > 1 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  return w + "s";
}

std::optional<std::string> GeneratorLexicon::BaseForm(
    std::string_view form) const {
  if (auto it = irregular_lemmas_.find(form); it != irregular_lemmas_.end()) {
    return it->second;
  }
  if (IsVerb(form)) return std::string(form);
  std::string w(form);
  if (EndsWith(w, "ied")) {
    std::string stem = w.substr(0, w.size() - 3) + "y";
    if (IsVerb(stem)) return stem;
  }
  if (EndsWith(w, "ed")) {
    std::string stem_e = w.substr(0, w.size() - 1);
    if (IsVerb(stem_e)) return stem_e;
    std::string stem = w.substr(0, w.size() - 2);
    if (IsVerb(stem)) return stem;
  }
  return std::nullopt;
}

}  // namespace egraph
