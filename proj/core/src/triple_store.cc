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

#include "egraph/triple_store.h"

#include <algorithm>
#include <fstream>
#include <istream>

#include <nlohmann/json.hpp>

#include "egraph/errors.h"

namespace egraph {
namespace {

using json = nlohmann::json;

std::string RequireString(const json& row, const char* key, int line_no) {
  auto it = row.find(key);
  if (it == row.end()) {
    throw IngestError("line " + std::to_string(line_no) + ": missing '" +
                      key + "'");
  }
  if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
    throw IngestError("line " + std::to_string(line_no) + ": '" + key +
                      "' must be a non-empty string");
  }
  return it->get<std::string>();
}

}  // namespace

EntityPair ArgumentPair(const Triple& t) {
  const TypedPredicate& p = t.predicate;
  bool in_order = p.same_type() ? p.subscript1 != 2 : p.type1 <= p.type2;
  if (in_order) return EntityPair{t.entity1, t.entity2};
  return EntityPair{t.entity2, t.entity1};
}

void TripleStore::Add(Triple t) {
  if (t.count < 1) throw ValidationError("triple count must be >= 1");
  if (t.entity1.empty() || t.entity2.empty()) {
    throw ValidationError("triple entities must be non-empty");
  }
  EntityPair pair = ArgumentPair(t);
  by_pair_[pair].insert(t.predicate);
  by_predicate_[t.predicate].insert(pair);
  triples_[Key{std::move(t.predicate), std::move(t.entity1),
               std::move(t.entity2)}] += t.count;
}

std::vector<Triple> TripleStore::triples() const {
  std::vector<Triple> out;
  out.reserve(triples_.size());
  for (const auto& [key, count] : triples_) {
    out.push_back(Triple{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                         count});
  }
  return out;
}

bool TripleStore::IndexesConsistent() const {
  PairIndex by_pair;
  PredicateIndex by_predicate;
  for (const auto& t : triples()) {
    EntityPair pair = ArgumentPair(t);
    by_pair[pair].insert(t.predicate);
    by_predicate[t.predicate].insert(pair);
  }
  return by_pair == by_pair_ && by_predicate == by_predicate_;
}

TripleStore ParseTriples(std::istream& in) {
  TripleStore store;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error& e) {
      throw IngestError("line " + std::to_string(line_no) +
                        ": invalid JSON: " + e.what());
    }
    if (!row.is_object()) {
      throw IngestError("line " + std::to_string(line_no) +
                        ": expected a JSON object");
    }
    Triple t;
    try {
      t.predicate = ParsePredicate(RequireString(row, "pred", line_no));
    } catch (const ParseError& e) {
      throw IngestError("line " + std::to_string(line_no) + ": " + e.what());
    }
    t.entity1 = RequireString(row, "arg1", line_no);
    t.entity2 = RequireString(row, "arg2", line_no);
    if (auto it = row.find("count"); it != row.end()) {
      if (!it->is_number_integer() || it->get<std::int64_t>() < 1) {
        throw IngestError("line " + std::to_string(line_no) +
                          ": 'count' must be an integer >= 1");
      }
      t.count = it->get<std::int64_t>();
    }
    store.Add(std::move(t));
  }
  return store;
}

TripleStore LoadTriples(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open triples file " + path.string());
  return ParseTriples(in);
}

TripleStore FilterTriples(const TripleStore& store,
                          const FilterOptions& options) {
  if (options.min_rels < 1 || options.min_pairs < 1) {
    throw ValidationError("filter thresholds must be >= 1");
  }
  TripleStore current = store;
  while (true) {
    // Rule 1: argument pairs need min_rels distinct predicates.
    TripleStore after_rule1;
    const auto& by_pair = current.predicates_by_pair();
    for (auto& t : current.triples()) {
      auto it = by_pair.find(ArgumentPair(t));
      if (static_cast<int>(it->second.size()) >= options.min_rels) {
        after_rule1.Add(std::move(t));
      }
    }
    // Rule 2: predicates need min_pairs distinct surviving argument pairs.
    TripleStore after_rule2;
    const auto& by_predicate = after_rule1.pairs_by_predicate();
    for (auto& t : after_rule1.triples()) {
      auto it = by_predicate.find(t.predicate);
      if (static_cast<int>(it->second.size()) >= options.min_pairs) {
        after_rule2.Add(std::move(t));
      }
    }
    bool changed = after_rule2.size() != current.size();
    current = std::move(after_rule2);
    if (!options.fixpoint || !changed) break;
  }
  return current;
}

CandidateMap CandidatePairs(const TripleStore& store) {
  CandidateMap out;
  for (const auto& [pair, predicates] : store.predicates_by_pair()) {
    for (const auto& p : predicates) {
      TypePair tp = TypePairOf(p);
      for (const auto& q : predicates) {
        if (p == q || TypePairOf(q) != tp) continue;
        out[tp].emplace(p, q);
      }
    }
  }
  return out;
}

void WriteCandidatePairs(const CandidateMap& pairs,
                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [tp, set] : pairs) {
    auto path = dir / (tp.FileStem() + ".tsv");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& [p, q] : set) {
      out << RenderPredicate(p) << '\t' << RenderPredicate(q) << '\n';
    }
  }
}

CandidateMap ReadCandidatePairs(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("pairs directory " + dir.string() + " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tsv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  CandidateMap out;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      size_t tab = line.find('\t');
      if (tab == std::string::npos) {
        throw IngestError(path.string() + ":" + std::to_string(line_no) +
                          ": expected pred1<TAB>pred2");
      }
      TypedPredicate p = ParsePredicate(std::string_view(line).substr(0, tab));
      TypedPredicate q = ParsePredicate(std::string_view(line).substr(tab + 1));
      TypePair tp = TypePairOf(p);
      if (TypePairOf(q) != tp) {
        throw IngestError(path.string() + ":" + std::to_string(line_no) +
                          ": predicates belong to different type pairs");
      }
      out[tp].emplace(std::move(p), std::move(q));
    }
  }
  return out;
}

}  // namespace egraph
