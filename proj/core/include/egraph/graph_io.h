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

// On-disk graphs. Each graph is two files named after TypePair::FileStem():
//
//   <stem>.nodes.txt    "# <type pair name>" then one predicate per line,
//                       in node id order
//   <stem>.edges.jsonl  {"type_pair": [t1, t2], "pred1": ..., "pred2": ...,
//                        "score": w} sorted by (source, target) id
//
// Scores are written in shortest round-trip form.

#ifndef EGRAPH_GRAPH_IO_H_
#define EGRAPH_GRAPH_IO_H_

#include <filesystem>
#include <span>
#include <vector>

#include "egraph/entailment_graph.h"
#include "egraph/global_optimizer.h"

namespace egraph {

void WriteGraph(const EntailmentGraph& graph,
                const std::filesystem::path& dir);
void WriteGraphs(std::span<const EntailmentGraph> graphs,
                 const std::filesystem::path& dir);

// Reads the graph whose node manifest is `nodes_file`. Throws IoError.
EntailmentGraph ReadGraph(const std::filesystem::path& nodes_file);
// Every graph in dir, sorted by type pair.
std::vector<EntailmentGraph> ReadGraphs(const std::filesystem::path& dir);

// <stem>.loss.json with the config and one report per epoch.
void WriteLossTrajectory(const TypePair& types, const GlobalConfig& config,
                         std::span<const LossReport> trajectory,
                         const std::filesystem::path& dir);

}  // namespace egraph

#endif  // EGRAPH_GRAPH_IO_H_
