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
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "egraph/errors.h"

namespace egraph {
namespace {

const GeneratorLexicon& Lex() { return GeneratorLexicon::Default(); }

std::vector<TypedPredicate> Predicates() {
  return {ParsePredicate("(cure.1,cure.2,medicine,disease)"),
          ParsePredicate("(treat.1,treat.2,medicine,disease)"),
          ParsePredicate("(prevent.1,prevent.2,medicine,disease)"),
          ParsePredicate("(cause.1,cause.2,disease,medicine)")};
}

ParaphraseLexicon Lexicon() {
  std::istringstream in(
      "(cure.1,cure.2)\t(treat.1,treat.2)\tparaphrase\n"
      "(prevent.1,prevent.2)\t(treat.1,treat.2)\tentail\n"
      "\n"
      "(cure.1,cure.2)\t(cause.1,cause.2)\tnone\n");
  return ParseParaphraseLexicon(in);
}

std::vector<CorpusRow> All(const FinetuneCorpus& c) {
  auto rows = c.train;
  rows.insert(rows.end(), c.valid.begin(), c.valid.end());
  return rows;
}

size_t Count(const std::vector<CorpusRow>& rows, const std::string& label) {
  return std::count_if(rows.begin(), rows.end(),
                       [&](const CorpusRow& r) { return r.label == label; });
}

TEST(ParaphraseLexiconTest, Errors) {
  for (const std::string bad :
       {"(a.1,a.2)\t(b.1,b.2)\tsynonym\n", "(a.1,a.2)\t(b.1,b.2)\n",
        "(a.1,a.2)\t(b.1,b.2)\tentail\n(a.1,a.2)\t(b.1,b.2)\tnone\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(ParseParaphraseLexicon(in), CorpusError) << bad;
  }
}

TEST(FinetuneCorpusTest, LabelRules) {
  auto corpus = GenerateFinetuneCorpus(Predicates(), Lexicon(), Lex());
  auto rows = All(corpus);
  EXPECT_EQ(Count(rows, "entail"), 3u);
  // Two lexicon "none" rows plus the seven unlisted pairs (cap 9).
  EXPECT_EQ(Count(rows, "neutral"), 9u);
  EXPECT_EQ(rows.size(), 12u);
  EXPECT_EQ(corpus.train.size(), 10u);
  std::set<std::pair<std::string, std::string>> entail;
  for (const auto& r : rows) {
    if (r.label == "entail") entail.emplace(r.sentence1, r.sentence2);
    EXPECT_NE(r.sentence1, r.sentence2);
  }
  EXPECT_TRUE(entail.contains(
      {"Medicine B cures Disease A.", "Medicine B treats Disease A."}));
  EXPECT_TRUE(entail.contains(
      {"Medicine B treats Disease A.", "Medicine B cures Disease A."}));
  EXPECT_TRUE(entail.contains(
      {"Medicine B prevents Disease A.", "Medicine B treats Disease A."}));
}

TEST(FinetuneCorpusTest, NegativesAreCapped) {
  FinetuneOptions o;
  o.negative_ratio = 1.0;
  auto rows = All(GenerateFinetuneCorpus(Predicates(), Lexicon(), Lex(), o));
  EXPECT_EQ(Count(rows, "entail"), 3u);
  EXPECT_EQ(Count(rows, "neutral"), 5u);
}

TEST(FinetuneCorpusTest, EmptyInputs) {
  auto c = GenerateFinetuneCorpus({}, {}, Lex());
  EXPECT_TRUE(c.train.empty());
  EXPECT_TRUE(c.valid.empty());
}

TEST(FinetuneCorpusTest, SplitIsDeterministicAndExhaustive) {
  FinetuneOptions o;
  o.seed = 17;
  auto a = GenerateFinetuneCorpus(Predicates(), Lexicon(), Lex(), o);
  auto b = GenerateFinetuneCorpus(Predicates(), Lexicon(), Lex(), o);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.valid, b.valid);
  auto rows = All(a);
  std::set<std::pair<std::string, std::string>> unique;
  for (const auto& r : rows) unique.emplace(r.sentence1, r.sentence2);
  EXPECT_EQ(unique.size(), rows.size());
}

TEST(FinetuneCorpusTest, WritesJsonl) {
  auto dir = std::filesystem::temp_directory_path() / "egraph_finetune";
  std::filesystem::remove_all(dir);
  auto c = GenerateFinetuneCorpus(Predicates(), Lexicon(), Lex());
  WriteFinetuneCorpus(c, dir);
  std::ifstream in(dir / "train.jsonl");
  size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  EXPECT_EQ(lines, c.train.size());
  EXPECT_TRUE(std::filesystem::exists(dir / "valid.jsonl"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace egraph
