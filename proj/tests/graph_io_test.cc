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

#include "egraph/graph_io.h"

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "egraph/errors.h"

namespace egraph {
namespace {

namespace fs = std::filesystem;

fs::path FreshDir(const std::string& name) {
  auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

EntailmentGraph RandomGraph(const TypePair& types, std::mt19937_64& rng) {
  EntailmentGraph g(types);
  for (int i = 0; i < 6; ++i) {
    TypedPredicate p;
    p.word1 = {"w" + std::to_string(i)};
    p.word2 = {"w" + std::to_string(i), "of"};
    p.idx1 = 1;
    p.idx2 = 2;
    p.type1 = types.second;
    p.type2 = types.first;
    if (p.type1 == p.type2) {
      p.subscript1 = 2;
      p.subscript2 = 1;
    }
    g.AddNode(p);
  }
  std::uniform_real_distribution<double> u(0, 1);
  for (NodeId a = 0; a < 6; ++a) {
    for (NodeId b = 0; b < 6; ++b) {
      if (a != b && u(rng) < 0.5) g.SetScore(a, b, u(rng));
    }
  }
  return g;
}

TEST(GraphIoTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(1);
  auto dir = FreshDir("egraph_graph_io");
  std::vector<EntailmentGraph> graphs = {
      RandomGraph({"person", "person"}, rng),
      RandomGraph({"disease", "medicine"}, rng)};
  WriteGraphs(graphs, dir);
  auto back = ReadGraphs(dir);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_TRUE(IdenticalGraphs(back[0], graphs[1]));
  EXPECT_TRUE(IdenticalGraphs(back[1], graphs[0]));
  fs::remove_all(dir);
}

TEST(GraphIoTest, EdgeRowsCarryTypePair) {
  std::mt19937_64 rng(2);
  auto dir = FreshDir("egraph_graph_rows");
  auto g = RandomGraph({"disease", "medicine"}, rng);
  WriteGraph(g, dir);
  std::ifstream in(dir / "disease#medicine.edges.jsonl");
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  auto row = nlohmann::json::parse(line);
  EXPECT_EQ(row["type_pair"], nlohmann::json({"disease", "medicine"}));
  EXPECT_TRUE(row.contains("pred1"));
  EXPECT_TRUE(row.contains("score"));
  fs::remove_all(dir);
}

TEST(GraphIoTest, EmptyGraphRoundTrip) {
  auto dir = FreshDir("egraph_graph_empty");
  WriteGraph(EntailmentGraph({"a", "b"}), dir);
  auto back = ReadGraphs(dir);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].num_nodes(), 0u);
  EXPECT_EQ(back[0].type_pair(), (TypePair{"a", "b"}));
  fs::remove_all(dir);
}

TEST(GraphIoTest, UnknownPredicateInEdgesIsAnError) {
  auto dir = FreshDir("egraph_graph_bad");
  fs::create_directories(dir);
  std::ofstream(dir / "x#y.nodes.txt") << "# x#y\n(a.1,a.2,x,y)\n";
  std::ofstream(dir / "x#y.edges.jsonl")
      << R"j({"type_pair":["x","y"],"pred1":"(a.1,a.2,x,y)","pred2":"(b.1,b.2,x,y)","score":0.5})j"
      << "\n";
  EXPECT_THROW(ReadGraphs(dir), IoError);
  fs::remove_all(dir);
}

TEST(GraphIoTest, LossTrajectoryJson) {
  auto dir = FreshDir("egraph_loss");
  GlobalConfig config;
  std::vector<LossReport> t = {{1.0, 2.0, 3.0, 4, 1}};
  WriteLossTrajectory({"a", "b"}, config, t, dir);
  std::ifstream in(dir / "a#b.loss.json");
  auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["epochs"].size(), 1u);
  EXPECT_EQ(doc["config"]["variant"], "l3");
  EXPECT_EQ(doc["epochs"][0]["triple_count"], 4);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace egraph
