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

#include <algorithm>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "egraph/errors.h"

namespace egraph {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr std::string_view kNodesSuffix = ".nodes.txt";
constexpr std::string_view kEdgesSuffix = ".edges.jsonl";

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

void WriteGraph(const EntailmentGraph& graph, const fs::path& dir) {
  fs::create_directories(dir);
  const std::string stem = graph.type_pair().FileStem();
  {
    auto out = OpenOut(dir / (stem + std::string(kNodesSuffix)));
    out << "# " << graph.type_pair().Name() << '\n';
    for (const auto& p : graph.nodes()) out << RenderPredicate(p) << '\n';
  }
  auto out = OpenOut(dir / (stem + std::string(kEdgesSuffix)));
  const json types = {graph.type_pair().first, graph.type_pair().second};
  for (const auto& e : graph.SortedEdges()) {
    json row = {{"type_pair", types},
                {"pred1", RenderPredicate(graph.node(e.source))},
                {"pred2", RenderPredicate(graph.node(e.target))},
                {"score", e.score}};
    out << row.dump() << '\n';
  }
  if (!out) throw IoError("write failed in " + dir.string());
}

void WriteGraphs(std::span<const EntailmentGraph> graphs,
                 const fs::path& dir) {
  for (const auto& g : graphs) WriteGraph(g, dir);
}

EntailmentGraph ReadGraph(const fs::path& nodes_file) {
  std::ifstream in(nodes_file);
  if (!in) throw IoError("cannot open " + nodes_file.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw IoError(nodes_file.string() + ": missing '# <type pair>' header");
  }
  TypePair types;
  try {
    types = ParseTypePairName(line.substr(2));
  } catch (const Error& e) {
    throw IoError(nodes_file.string() + ": " + e.what());
  }
  EntailmentGraph graph(types);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      graph.AddNode(ParsePredicate(line));
    } catch (const Error& e) {
      throw IoError(nodes_file.string() + ":" + std::to_string(line_no) +
                    ": " + e.what());
    }
  }

  std::string name = nodes_file.filename().string();
  name.resize(name.size() - kNodesSuffix.size());
  const fs::path edges_file =
      nodes_file.parent_path() / (name + std::string(kEdgesSuffix));
  std::ifstream edges(edges_file);
  if (!edges) throw IoError("cannot open " + edges_file.string());
  line_no = 0;
  while (std::getline(edges, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where =
        edges_file.string() + ":" + std::to_string(line_no);
    try {
      json row = json::parse(line);
      auto p = graph.FindNode(ParsePredicate(row.at("pred1").get<std::string>()));
      auto q = graph.FindNode(ParsePredicate(row.at("pred2").get<std::string>()));
      if (!p || !q) throw IoError("edge refers to a predicate not in the nodes");
      graph.SetScore(*p, *q, row.at("score").get<double>());
    } catch (const json::exception& e) {
      throw IoError(where + ": " + e.what());
    } catch (const Error& e) {
      throw IoError(where + ": " + e.what());
    }
  }
  return graph;
}

std::vector<EntailmentGraph> ReadGraphs(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > kNodesSuffix.size() &&
        name.ends_with(kNodesSuffix)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<EntailmentGraph> graphs;
  for (const auto& f : files) graphs.push_back(ReadGraph(f));
  std::sort(graphs.begin(), graphs.end(),
            [](const EntailmentGraph& a, const EntailmentGraph& b) {
              return a.type_pair() < b.type_pair();
            });
  return graphs;
}

void WriteLossTrajectory(const TypePair& types, const GlobalConfig& config,
                         std::span<const LossReport> trajectory,
                         const fs::path& dir) {
  fs::create_directories(dir);
  json epochs = json::array();
  for (const auto& r : trajectory) {
    epochs.push_back({{"distance_term", r.distance_term},
                      {"constraint_term", r.constraint_term},
                      {"total", r.total},
                      {"triple_count", r.triple_count},
                      {"violated_count", r.violated_count}});
  }
  json doc = {
      {"type_pair", {types.first, types.second}},
      {"config",
       {{"variant", ConstraintVariantName(config.variant)},
        {"epsilon", config.epsilon},
        {"lambda", config.lambda},
        {"learning_rate", config.learning_rate},
        {"epochs", config.epochs},
        {"score_floor", config.score_floor},
        {"gate_source", GateSourceName(config.gate_source)},
        {"minibatch", config.minibatch},
        {"seed", config.seed}}},
      {"epochs", epochs}};
  auto out = OpenOut(dir / (types.FileStem() + ".loss.json"));
  out << doc.dump(2) << '\n';
}

}  // namespace egraph
