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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "egraph/errors.h"
#include "oracles/oracles.h"

namespace egraph {
namespace {

Triple T(const std::string& pred, const std::string& a, const std::string& b,
         std::int64_t count = 1) {
  return Triple{ParsePredicate(pred), a, b, count};
}

std::set<std::tuple<std::string, std::string, std::string>> Rows(
    const TripleStore& store) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& t : store.triples()) {
    out.emplace(RenderPredicate(t.predicate), t.entity1, t.entity2);
  }
  return out;
}

TEST(ParseTriplesTest, LoadsAndMerges) {
  std::istringstream in(
      R"j({"pred": "(cure.1,cure.2,medicine,disease)", "arg1": "aspirin", "arg2": "pain"})j"
      "\n\n"
      R"j({"pred": "(cure.1,cure.2,medicine,disease)", "arg1": "aspirin", "arg2": "pain"})j"
      "\n"
      R"j({"pred": "(treat.1,treat.2,medicine,disease)", "arg1": "aspirin", "arg2": "pain", "count": 4})j"
      "\n");
  auto store = ParseTriples(in);
  ASSERT_EQ(store.size(), 2u);
  auto rows = store.triples();
  EXPECT_EQ(rows[0].count, 2);
  EXPECT_EQ(rows[1].count, 4);
  EXPECT_TRUE(store.IndexesConsistent());
}

TEST(ParseTriplesTest, MissingArgumentNamesLine) {
  std::istringstream in(
      R"j({"pred": "(cure.1,cure.2,medicine,disease)", "arg1": "a", "arg2": "b"})j"
      "\n"
      R"j({"pred": "(cure.1,cure.2,medicine,disease)", "arg1": "a"})j"
      "\n");
  try {
    ParseTriples(in);
    FAIL();
  } catch (const IngestError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos)
        << e.what();
  }
}

TEST(ParseTriplesTest, EmptyInputGivesEmptyStore) {
  std::istringstream in("");
  EXPECT_TRUE(ParseTriples(in).empty());
}

TEST(ParseTriplesTest, RejectsBadCountsAndPredicates) {
  std::istringstream zero(
      R"j({"pred": "(cure.1,cure.2,medicine,disease)", "arg1": "a", "arg2": "b", "count": 0})j");
  EXPECT_THROW(ParseTriples(zero), IngestError);
  std::istringstream bad(R"j({"pred": "(cure.1,medicine)", "arg1": "a", "arg2": "b"})j");
  EXPECT_THROW(ParseTriples(bad), IngestError);
}

TEST(FilterTriplesTest, RuleOneDropsRarePairs) {
  TripleStore store;
  store.Add(T("(cure.1,cure.2,medicine,disease)", "x", "y"));
  store.Add(T("(treat.1,treat.2,medicine,disease)", "x", "y"));
  auto out = FilterTriples(store, {3, 1, false});
  EXPECT_TRUE(out.empty());
}

TEST(FilterTriplesTest, RuleTwoKeepsPredicateWithThreePairs) {
  TripleStore store;
  for (const char* e : {"x", "y", "z"}) {
    store.Add(T("(cure.1,cure.2,medicine,disease)", e, "d"));
    store.Add(T("(treat.1,treat.2,medicine,disease)", e, "d"));
    store.Add(T("(relieve.1,relieve.2,medicine,disease)", e, "d"));
  }
  auto out = FilterTriples(store);
  EXPECT_EQ(out.size(), 9u);
  EXPECT_TRUE(out.IndexesConsistent());
}

TEST(FilterTriplesTest, EmptyStore) {
  EXPECT_TRUE(FilterTriples(TripleStore{}).empty());
}

TEST(FilterTriplesTest, FixtureMatchesBruteForce) {
  auto store = LoadTriples(std::filesystem::path(EGRAPH_TEST_DATA_DIR) /
                           "filter_triples.jsonl");
  ASSERT_EQ(store.size(), 50u);
  const auto rows = store.triples();
  for (int rels = 1; rels <= 4; ++rels) {
    for (int pairs = 1; pairs <= 4; ++pairs) {
      EXPECT_EQ(Rows(FilterTriples(store, {rels, pairs, false})),
                oracle::FilterRows(rows, rels, pairs))
          << rels << " " << pairs;
    }
  }
}

TEST(FilterTriplesTest, FixpointReachesStableStore) {
  auto store = LoadTriples(std::filesystem::path(EGRAPH_TEST_DATA_DIR) /
                           "filter_triples.jsonl");
  auto once = FilterTriples(store, {3, 3, true});
  EXPECT_EQ(Rows(FilterTriples(once, {3, 3, false})), Rows(once));
}

TEST(FilterTriplesTest, OutputSatisfiesRuleTwo) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> preds = {
      "(a.1,a.2,x,y)", "(b.1,b.2,x,y)", "(c.1,c.2,x,y)", "(d.1,d.2,y,x)",
      "(e.1,e.2,x_1,x_2)", "(e.1,e.2,x_2,x_1)"};
  for (int round = 0; round < 50; ++round) {
    TripleStore store;
    for (int i = 0; i < 60; ++i) {
      store.Add(T(preds[rng() % preds.size()], "e" + std::to_string(rng() % 5),
                  "f" + std::to_string(rng() % 5)));
    }
    auto out = FilterTriples(store);
    for (const auto& [pred, pairs] : out.pairs_by_predicate()) {
      EXPECT_GE(pairs.size(), 3u);
    }
    EXPECT_EQ(Rows(out), oracle::FilterRows(store.triples(), 3, 3));
  }
}

TEST(ArgumentPairTest, OrientsByTypeOrderAndSubscript) {
  EXPECT_EQ(ArgumentPair(T("(cure.1,cure.2,medicine,disease)", "m", "d")),
            (EntityPair{"d", "m"}));
  EXPECT_EQ(ArgumentPair(T("(cure.1,cure.2,disease,medicine)", "d", "m")),
            (EntityPair{"d", "m"}));
  EXPECT_EQ(ArgumentPair(T("(meet.1,meet.2,person_2,person_1)", "a", "b")),
            (EntityPair{"b", "a"}));
}

TEST(CandidatePairsTest, SharedPairGivesBothDirections) {
  TripleStore store;
  store.Add(T("(cure.1,cure.2,medicine,disease)", "m", "d"));
  store.Add(T("(treat.1,treat.2,medicine,disease)", "m", "d"));
  store.Add(T("(prevent.1,prevent.2,medicine,disease)", "m", "other"));
  auto pairs = CandidatePairs(store);
  ASSERT_EQ(pairs.size(), 1u);
  const auto& set = pairs.begin()->second;
  EXPECT_EQ(set.size(), 2u);
  auto p = ParsePredicate("(cure.1,cure.2,medicine,disease)");
  auto q = ParsePredicate("(treat.1,treat.2,medicine,disease)");
  EXPECT_TRUE(set.contains({p, q}));
  EXPECT_TRUE(set.contains({q, p}));
}

TEST(CandidatePairsTest, ThreePredicatesGiveSixPairs) {
  TripleStore store;
  for (const char* p : {"(a.1,a.2,x,y)", "(b.1,b.2,x,y)", "(c.1,c.2,y,x)"}) {
    store.Add(T(p, p[1] == 'c' ? "v" : "u", p[1] == 'c' ? "u" : "v"));
  }
  auto pairs = CandidatePairs(store);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs.begin()->second.size(), 6u);
}

TEST(CandidatePairsTest, PropertiesOnFixture) {
  auto store = FilterTriples(LoadTriples(
      std::filesystem::path(EGRAPH_TEST_DATA_DIR) / "filter_triples.jsonl"));
  auto pairs = CandidatePairs(store);
  const auto& index = store.pairs_by_predicate();
  for (const auto& [types, set] : pairs) {
    for (const auto& [p, q] : set) {
      EXPECT_NE(p, q);
      EXPECT_TRUE(set.contains({q, p}));
      EXPECT_EQ(TypePairOf(p), types);
      EXPECT_EQ(TypePairOf(q), types);
      const auto& a = index.at(p);
      const auto& b = index.at(q);
      EXPECT_TRUE(std::any_of(a.begin(), a.end(),
                              [&](const EntityPair& e) { return b.contains(e); }));
    }
  }
}

TEST(CandidatePairsTest, WriteReadRoundTrip) {
  auto store = FilterTriples(LoadTriples(
      std::filesystem::path(EGRAPH_TEST_DATA_DIR) / "filter_triples.jsonl"));
  auto pairs = CandidatePairs(store);
  auto dir = std::filesystem::temp_directory_path() / "egraph_pairs_rt";
  std::filesystem::remove_all(dir);
  WriteCandidatePairs(pairs, dir);
  EXPECT_EQ(ReadCandidatePairs(dir), pairs);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace egraph
