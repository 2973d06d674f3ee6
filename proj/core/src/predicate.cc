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

#include "egraph/predicate.h"

#include <cctype>
#include <charconv>
#include <string>
#include <utility>

#include "egraph/errors.h"

namespace egraph {
namespace {

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void Fail(std::string_view text, std::string_view field,
                       std::string_view what) {
  throw ParseError("malformed predicate '" + std::string(text) +
                   "': field " + std::string(field) + ": " +
                   std::string(what));
}

// Parses "w.w.i" into tokens and index.
void ParseWordField(std::string_view text, std::string_view field,
                    std::string_view value, std::vector<std::string>* words,
                    int* index) {
  if (value.empty()) Fail(text, field, "empty");
  auto tokens = Split(value, '.');
  if (tokens.size() < 2) Fail(text, field, "expected word.index");
  std::string_view idx = tokens.back();
  int parsed = 0;
  auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), parsed);
  if (ec != std::errc() || ptr != idx.data() + idx.size() || idx.empty()) {
    Fail(text, field, "argument index '" + std::string(idx) +
                          "' is not an integer");
  }
  if (parsed < 1) Fail(text, field, "argument index must be >= 1");
  words->clear();
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].empty()) Fail(text, field, "empty word token");
    words->emplace_back(tokens[i]);
  }
  *index = parsed;
}

// Splits "location_2" into ("location", 2); returns subscript 0 if absent.
std::pair<std::string_view, int> SplitSubscript(std::string_view type) {
  if (type.size() > 2 && type[type.size() - 2] == '_' &&
      (type.back() == '1' || type.back() == '2')) {
    return {type.substr(0, type.size() - 2), type.back() - '0'};
  }
  return {type, 0};
}

void AppendWords(const std::vector<std::string>& words, int idx,
                 std::string* out) {
  for (const auto& w : words) {
    out->append(w);
    out->push_back('.');
  }
  out->append(std::to_string(idx));
}

void HashCombine(std::size_t* seed, std::size_t value) {
  *seed ^= value + 0x9e3779b97f4a7c15ULL + (*seed << 6) + (*seed >> 2);
}

}  // namespace

std::string TypePair::Name() const { return first + "#" + second; }

std::string TypePair::FileStem() const {
  std::string stem = Name();
  for (char& c : stem) {
    bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                c == '_' || c == '#' || c == '-';
    if (!keep) c = '_';
  }
  return stem;
}

TypedPredicate ParsePredicate(std::string_view text) {
  std::string_view body = Trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    Fail(text, "predicate", "expected '(w1.i1,w2.i2,t1,t2)'");
  }
  body = body.substr(1, body.size() - 2);
  auto fields = Split(body, ',');
  static constexpr std::string_view kNames[] = {"word1", "word2", "type1",
                                                "type2"};
  if (fields.size() < 4) {
    Fail(text, kNames[fields.size()], "missing");
  }
  if (fields.size() > 4) Fail(text, "predicate", "too many fields");

  TypedPredicate p;
  ParseWordField(text, kNames[0], Trim(fields[0]), &p.word1, &p.idx1);
  ParseWordField(text, kNames[1], Trim(fields[1]), &p.word2, &p.idx2);

  std::string_view t1 = Trim(fields[2]);
  std::string_view t2 = Trim(fields[3]);
  if (t1.empty()) Fail(text, kNames[2], "empty");
  if (t2.empty()) Fail(text, kNames[3], "empty");
  auto [base1, sub1] = SplitSubscript(t1);
  auto [base2, sub2] = SplitSubscript(t2);
  if (sub1 != 0 && sub2 != 0 && base1 == base2) {
    if (sub1 == sub2) Fail(text, kNames[3], "duplicate order subscript");
    p.type1 = std::string(base1);
    p.type2 = std::string(base2);
    p.subscript1 = sub1;
    p.subscript2 = sub2;
    return p;
  }
  if (t1 == t2) {
    Fail(text, kNames[3], "equal argument types require _1/_2 subscripts");
  }
  if ((sub1 != 0 || sub2 != 0) && base1 == base2) {
    Fail(text, sub1 == 0 ? kNames[2] : kNames[3], "missing order subscript");
  }
  p.type1 = std::string(t1);
  p.type2 = std::string(t2);
  return p;
}

std::string RenderPredicate(const TypedPredicate& p) {
  std::string out = "(";
  AppendWords(p.word1, p.idx1, &out);
  out.push_back(',');
  AppendWords(p.word2, p.idx2, &out);
  out.push_back(',');
  out.append(p.type1);
  if (p.subscript1 != 0) out.append("_" + std::to_string(p.subscript1));
  out.push_back(',');
  out.append(p.type2);
  if (p.subscript2 != 0) out.append("_" + std::to_string(p.subscript2));
  out.push_back(')');
  return out;
}

void ValidatePredicate(const TypedPredicate& p) {
  auto fail = [&](const std::string& what) {
    throw ValidationError("invalid predicate " + RenderPredicate(p) + ": " +
                          what);
  };
  if (p.word1.empty() || p.word2.empty()) fail("empty word chain");
  for (const auto* words : {&p.word1, &p.word2}) {
    for (const auto& w : *words) {
      if (w.empty()) fail("empty word token");
    }
  }
  if (p.idx1 < 1 || p.idx2 < 1) fail("argument index must be >= 1");
  if (p.type1.empty() || p.type2.empty()) fail("empty type name");
  if (p.same_type()) {
    bool ok = (p.subscript1 == 1 && p.subscript2 == 2) ||
              (p.subscript1 == 2 && p.subscript2 == 1);
    if (!ok) fail("equal types need subscripts {1,2}");
  } else if (p.subscript1 != 0 || p.subscript2 != 0) {
    fail("subscripts are only allowed on equal types");
  }
}

TypePair CanonicalTypePair(std::string_view t1, std::string_view t2) {
  if (t1.empty() || t2.empty()) {
    throw ValidationError("type names must be non-empty");
  }
  if (t2 < t1) std::swap(t1, t2);
  return TypePair{std::string(t1), std::string(t2)};
}

TypePair TypePairOf(const TypedPredicate& p) {
  return CanonicalTypePair(p.type1, p.type2);
}

TypePair ParseTypePairName(std::string_view name) {
  size_t pos = name.find('#');
  if (pos == std::string_view::npos || name.find('#', pos + 1) !=
                                           std::string_view::npos) {
    throw ParseError("malformed type pair name '" + std::string(name) + "'");
  }
  return CanonicalTypePair(name.substr(0, pos), name.substr(pos + 1));
}

UntypedPredicate UntypedForm(const TypedPredicate& p) {
  return UntypedPredicate{p.word1, p.idx1, p.word2, p.idx2};
}

std::string RenderUntyped(const UntypedPredicate& u) {
  std::string out = "(";
  AppendWords(u.word1, u.idx1, &out);
  out.push_back(',');
  AppendWords(u.word2, u.idx2, &out);
  out.push_back(')');
  return out;
}

UntypedPredicate ParseUntyped(std::string_view text) {
  std::string_view body = Trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    Fail(text, "predicate", "expected '(w1.i1,w2.i2)'");
  }
  auto fields = Split(body.substr(1, body.size() - 2), ',');
  if (fields.size() != 2) Fail(text, "predicate", "expected two fields");
  UntypedPredicate u;
  ParseWordField(text, "word1", Trim(fields[0]), &u.word1, &u.idx1);
  ParseWordField(text, "word2", Trim(fields[1]), &u.word2, &u.idx2);
  return u;
}

TypedPredicate WithTypes(const UntypedPredicate& u, std::string t1,
                         std::string t2, int s1, int s2) {
  TypedPredicate p{u.word1, u.idx1, u.word2, u.idx2, std::move(t1),
                   std::move(t2)};
  if (p.same_type()) {
    p.subscript1 = s1;
    p.subscript2 = s2;
  }
  return p;
}

std::size_t TypedPredicateHash::operator()(const TypedPredicate& p) const {
  std::size_t seed = UntypedPredicateHash()(UntypedForm(p));
  std::hash<std::string> h;
  HashCombine(&seed, h(p.type1));
  HashCombine(&seed, h(p.type2));
  HashCombine(&seed, static_cast<std::size_t>(p.subscript1 * 3 + p.subscript2));
  return seed;
}

std::size_t UntypedPredicateHash::operator()(const UntypedPredicate& u) const {
  std::size_t seed = 0;
  std::hash<std::string> h;
  for (const auto& w : u.word1) HashCombine(&seed, h(w));
  HashCombine(&seed, static_cast<std::size_t>(u.idx1));
  HashCombine(&seed, 0x51ed);
  for (const auto& w : u.word2) HashCombine(&seed, h(w));
  HashCombine(&seed, static_cast<std::size_t>(u.idx2));
  return seed;
}

}  // namespace egraph
