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

#include "egraph/evaluation.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "egraph/errors.h"

namespace egraph {
namespace {

TypedPredicate P(const std::string& text) { return ParsePredicate(text); }

EntailmentGraph Graph(const TypePair& types,
                      std::vector<std::tuple<std::string, std::string, double>>
                          edges,
                      std::vector<std::string> extra_nodes = {}) {
  EntailmentGraph g(types);
  for (const auto& n : extra_nodes) g.AddNode(P(n));
  for (const auto& [a, b, s] : edges) {
    g.SetScore(g.AddNode(P(a)), g.AddNode(P(b)), s);
  }
  return g;
}

const std::string kVisitPL = "(visit.1,visit.2,person,location)";
const std::string kGoPL = "(go.1,go.to.2,person,location)";

GraphCollection Collection() {
  std::vector<EntailmentGraph> graphs;
  graphs.push_back(Graph({"location", "person"}, {{kVisitPL, kGoPL, 0.4}}));
  graphs.push_back(Graph({"location", "organization"},
                         {{"(visit.1,visit.2,organization,location)",
                           "(go.1,go.to.2,organization,location)", 0.8}}));
  // Holds only the premise; must not take part in the backoff.
  graphs.push_back(Graph({"event", "location"},
                         {{"(visit.1,visit.2,event,location)",
                           "(hold.1,hold.2,event,location)", 0.9}}));
  return GraphCollection(std::move(graphs));
}

TEST(ScoreTest, IdentityScoresOne) {
  auto c = Collection();
  auto s = c.Score({P(kVisitPL), P(kVisitPL), true});
  EXPECT_EQ(s.score, 1.0);
  EXPECT_EQ(s.source, ScoreSource::kIdentity);
}

TEST(ScoreTest, TypedLookup) {
  auto c = Collection();
  auto s = c.Score({P(kVisitPL), P(kGoPL), true});
  EXPECT_EQ(s.source, ScoreSource::kTyped);
  EXPECT_EQ(s.score, 0.4);
  auto back = c.Score({P(kGoPL), P(kVisitPL), false});
  EXPECT_EQ(back.source, ScoreSource::kTyped);
  EXPECT_EQ(back.score, 0.0);
}

TEST(ScoreTest, BackoffAveragesGraphsHoldingBoth) {
  auto c = Collection();
  auto s = c.Score({P("(visit.1,visit.2,thing,location)"),
                    P("(go.1,go.to.2,thing,location)"), true});
  EXPECT_EQ(s.source, ScoreSource::kBackoff);
  EXPECT_EQ(s.backoff_graphs, 2);
  EXPECT_DOUBLE_EQ(s.score, 0.6);
}

TEST(ScoreTest, BackoffPreservesArgumentOrientation) {
  // Hypothesis with swapped slots reads W in the reversed orientation.
  EntailmentGraph g({"location", "person"});
  auto a = g.AddNode(P("(visit.1,visit.2,person,location)"));
  auto b = g.AddNode(P("(host.1,host.2,location,person)"));
  g.SetScore(a, b, 0.3);
  GraphCollection c({g});
  auto s = c.Score({P("(visit.1,visit.2,thing,location)"),
                    P("(host.1,host.2,location,thing)"), true});
  EXPECT_EQ(s.source, ScoreSource::kBackoff);
  EXPECT_EQ(s.score, 0.3);
  auto wrong = c.Score({P("(visit.1,visit.2,thing,location)"),
                        P("(host.1,host.2,thing,location)"), true});
  EXPECT_EQ(wrong.source, ScoreSource::kNone);
}

TEST(ScoreTest, NoGraphScoresZero) {
  auto c = Collection();
  auto s = c.Score({P("(eat.1,eat.2,person,food)"),
                    P("(like.1,like.2,person,food)"), true});
  EXPECT_EQ(s.source, ScoreSource::kNone);
  EXPECT_EQ(s.score, 0.0);
}

TEST(ScoreTest, TypedGraphMissingNodeFallsBack) {
  std::vector<EntailmentGraph> graphs;
  graphs.push_back(Graph({"location", "person"}, {}, {kVisitPL}));
  graphs.push_back(Graph({"location", "organization"},
                         {{"(visit.1,visit.2,organization,location)",
                           "(go.1,go.to.2,organization,location)", 0.8}}));
  GraphCollection c(std::move(graphs));
  auto s = c.Score({P(kVisitPL), P(kGoPL), true});
  EXPECT_EQ(s.source, ScoreSource::kBackoff);
  EXPECT_EQ(s.score, 0.8);
}

TEST(DatasetTest, ParsesBooleanAndIntegerLabels) {
  std::istringstream in(
      R"j({"premise_pred":"(visit.1,visit.2,person,location)","hypothesis_pred":"(go.1,go.to.2,person,location)","label":true})j"
      "\n\n"
      R"j({"premise_pred":"(visit.1,visit.2,person,location)","hypothesis_pred":"(go.1,go.to.2,person,location)","label":0})j"
      "\n");
  auto d = ParseDataset(in);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_TRUE(d[0].label);
  EXPECT_FALSE(d[1].label);
}

TEST(DatasetTest, ErrorsNameTheLine) {
  for (const std::string bad :
       {R"j({"premise_pred":"(a.1,a.2,x,y)","label":1})j",
        R"j({"premise_pred":"(a.1,a.2,x,y)","hypothesis_pred":"(b.1,b.2,x,y)","label":2})j",
        R"j({"premise_pred":"(a.1,a.2,x,y)","hypothesis_pred":"(b.1,b.2,x,z)","label":1})j",
        "not json"}) {
    std::istringstream in("\n" + bad + "\n");
    try {
      ParseDataset(in);
      FAIL() << bad;
    } catch (const IngestError& e) {
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
  }
}

struct FixtureRow {
  EntailmentExample ex;
  bool in_a;
  bool in_b;
};

std::vector<FixtureRow> Fixture() {
  std::ifstream in(std::filesystem::path(EGRAPH_TEST_DATA_DIR) /
                   "directional_fixture.jsonl");
  std::vector<FixtureRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    rows.push_back({{P(j["premise_pred"]), P(j["hypothesis_pred"]),
                     j["label"].get<bool>()},
                    j["in_a"].get<bool>(),
                    j["in_b"].get<bool>()});
  }
  return rows;
}

TEST(DirectionalTest, FixtureMembership) {
  auto rows = Fixture();
  ASSERT_EQ(rows.size(), 12u);
  std::vector<EntailmentExample> d;
  std::vector<EntailmentExample> want_a;
  std::vector<EntailmentExample> want_b;
  for (const auto& r : rows) {
    d.push_back(r.ex);
    if (r.in_a) want_a.push_back(r.ex);
    if (r.in_b) want_b.push_back(r.ex);
  }
  EXPECT_EQ(DirectionalSubset(d, DirectionalSetting::kA), want_a);
  EXPECT_EQ(DirectionalSubset(d, DirectionalSetting::kB), want_b);
  EXPECT_EQ(want_a.size(), 4u);
  EXPECT_EQ(want_b.size(), 8u);
}

TEST(DirectionalTest, SubsetsAreClosedUnderReversal) {
  std::mt19937_64 rng(5);
  std::vector<std::string> preds = {kVisitPL, kGoPL,
                                    "(own.1,own.2,person,location)",
                                    "(buy.1,buy.2,person,location)"};
  std::uniform_int_distribution<size_t> pick(0, preds.size() - 1);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<EntailmentExample> d;
    for (int i = 0; i < 10; ++i) {
      d.push_back({P(preds[pick(rng)]), P(preds[pick(rng)]), coin(rng)});
    }
    auto a = DirectionalSubset(d, DirectionalSetting::kA);
    for (const auto& ex : a) {
      bool found = false;
      for (const auto& other : a) {
        found |= other.premise == ex.hypothesis &&
                 other.hypothesis == ex.premise && other.label != ex.label;
      }
      EXPECT_TRUE(found);
    }
    auto b = DirectionalSubset(d, DirectionalSetting::kB);
    EXPECT_LE(a.size(), d.size());
    EXPECT_LE(b.size(), d.size());
  }
}

TEST(DirectionalTest, ParseSetting) {
  EXPECT_EQ(ParseDirectionalSetting("a"), DirectionalSetting::kA);
  EXPECT_THROW(ParseDirectionalSetting("c"), ValidationError);
}

TEST(EvaluateTest, CountsSourcesAndMetrics) {
  auto c = Collection();
  std::vector<EntailmentExample> d = {
      {P(kVisitPL), P(kVisitPL), true},
      {P(kVisitPL), P(kGoPL), true},
      {P(kGoPL), P(kVisitPL), false},
      {P("(visit.1,visit.2,thing,location)"),
       P("(go.1,go.to.2,thing,location)"), true},
      {P("(eat.1,eat.2,person,food)"), P("(like.1,like.2,person,food)"),
       false}};
  auto r = Evaluate(c, d);
  EXPECT_EQ(r.examples, 5u);
  EXPECT_EQ(r.positives, 3u);
  EXPECT_EQ(r.negatives, 2u);
  EXPECT_EQ(r.identity, 1u);
  EXPECT_EQ(r.typed, 2u);
  EXPECT_EQ(r.backoff, 1u);
  EXPECT_EQ(r.unscored, 1u);
  EXPECT_EQ(r.roc_auc, 1.0);
  EXPECT_DOUBLE_EQ(r.prc_auc, 0.5);
  auto j = nlohmann::json::parse(ReportToJson(r));
  EXPECT_EQ(j["counts"]["examples"], 5);
  EXPECT_EQ(j["roc_auc"], 1.0);
}

TEST(EvaluateTest, SingleClassDatasetIsAnError) {
  auto c = Collection();
  std::vector<EntailmentExample> d = {{P(kVisitPL), P(kGoPL), true}};
  EXPECT_THROW(Evaluate(c, d), MetricError);
}

}  // namespace
}  // namespace egraph
