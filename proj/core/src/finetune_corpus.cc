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

#include "egraph/finetune_corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "egraph/errors.h"
#include "egraph/sentence_generator.h"

namespace egraph {
namespace {

ParaphraseLabel ParseLabel(const std::string& text) {
  if (text == "paraphrase") return ParaphraseLabel::kParaphrase;
  if (text == "entail") return ParaphraseLabel::kEntail;
  if (text == "none") return ParaphraseLabel::kNone;
  throw CorpusError("unknown label '" + text +
                    "' (expected paraphrase, entail or none)");
}

std::optional<ParaphraseLabel> Lookup(const ParaphraseLexicon& lexicon,
                                      const UntypedPredicate& a,
                                      const UntypedPredicate& b) {
  auto it = lexicon.find({a, b});
  if (it == lexicon.end()) return std::nullopt;
  return it->second;
}

void WriteRows(const std::vector<CorpusRow>& rows,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& r : rows) {
    nlohmann::json row = {{"sentence1", r.sentence1},
                          {"sentence2", r.sentence2},
                          {"label", r.label}};
    out << row.dump() << '\n';
  }
}

}  // namespace

ParaphraseLexicon ParseParaphraseLexicon(std::istream& in) {
  ParaphraseLexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::vector<std::string> fields;
    std::istringstream split(line);
    for (std::string f; std::getline(split, f, '\t');) fields.push_back(f);
    if (fields.size() != 3) {
      throw CorpusError(where + "expected 3 tab-separated fields");
    }
    try {
      auto key = std::make_pair(ParseUntyped(fields[0]),
                                ParseUntyped(fields[1]));
      const ParaphraseLabel label = ParseLabel(fields[2]);
      auto [it, inserted] = lexicon.emplace(key, label);
      if (!inserted && it->second != label) {
        throw CorpusError("conflicting labels for " + fields[0] + " " +
                          fields[1]);
      }
    } catch (const Error& e) {
      throw CorpusError(where + e.what());
    }
  }
  return lexicon;
}

ParaphraseLexicon LoadParaphraseLexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path.string());
  return ParseParaphraseLexicon(in);
}

std::vector<TypedPredicate> LoadPredicateList(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path.string());
  std::vector<TypedPredicate> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(ParsePredicate(line));
    } catch (const ParseError& e) {
      throw CorpusError(path.string() + ":" + std::to_string(line_no) +
                        ": " + e.what());
    }
  }
  return out;
}

FinetuneCorpus GenerateFinetuneCorpus(
    const std::vector<TypedPredicate>& predicates,
    const ParaphraseLexicon& paraphrases, const GeneratorLexicon& lex,
    const FinetuneOptions& options) {
  if (!(options.train_fraction >= 0.0 && options.train_fraction <= 1.0)) {
    throw ValidationError("train fraction must be in [0, 1]");
  }
  if (!(options.negative_ratio >= 0.0)) {
    throw ValidationError("negative ratio must be >= 0");
  }
  std::map<TypePair, std::set<TypedPredicate>> groups;
  for (const auto& p : predicates) groups[TypePairOf(p)].insert(p);

  std::vector<CorpusRow> listed;
  std::vector<CorpusRow> unlisted;
  size_t positives = 0;
  for (const auto& [types, members] : groups) {
    const GraphTypeOrder order = OrderOf(types);
    std::map<TypedPredicate, std::string> sentences;
    for (const auto& p : members) {
      sentences.emplace(p, GenerateSentence(p, order, lex));
    }
    for (const auto& p : members) {
      for (const auto& q : members) {
        if (p == q) continue;
        const auto up = UntypedForm(p);
        const auto uq = UntypedForm(q);
        const auto forward = Lookup(paraphrases, up, uq);
        const auto backward = Lookup(paraphrases, uq, up);
        CorpusRow row{sentences.at(p), sentences.at(q), "neutral"};
        if (forward == ParaphraseLabel::kParaphrase ||
            backward == ParaphraseLabel::kParaphrase ||
            forward == ParaphraseLabel::kEntail) {
          row.label = "entail";
          ++positives;
          listed.push_back(std::move(row));
        } else if (forward == ParaphraseLabel::kNone ||
                   backward == ParaphraseLabel::kNone) {
          listed.push_back(std::move(row));
        } else {
          unlisted.push_back(std::move(row));
        }
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  const auto cap = static_cast<size_t>(
      std::floor(options.negative_ratio * static_cast<double>(positives)));
  if (unlisted.size() > cap) {
    std::vector<size_t> index(unlisted.size());
    std::iota(index.begin(), index.end(), 0);
    std::shuffle(index.begin(), index.end(), rng);
    index.resize(cap);
    std::sort(index.begin(), index.end());
    std::vector<CorpusRow> kept;
    for (size_t i : index) kept.push_back(std::move(unlisted[i]));
    unlisted = std::move(kept);
  }

  std::vector<CorpusRow> rows = std::move(listed);
  for (auto& r : unlisted) rows.push_back(std::move(r));
  std::shuffle(rows.begin(), rows.end(), rng);
  const auto n_train = static_cast<size_t>(
      std::llround(options.train_fraction * static_cast<double>(rows.size())));
  FinetuneCorpus corpus;
  corpus.train.assign(rows.begin(), rows.begin() + n_train);
  corpus.valid.assign(rows.begin() + n_train, rows.end());
  return corpus;
}

void WriteFinetuneCorpus(const FinetuneCorpus& corpus,
                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteRows(corpus.train, dir / "train.jsonl");
  WriteRows(corpus.valid, dir / "valid.jsonl");
}

}  // namespace egraph
