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

// End-to-end runs: ingest -> local -> global -> eval.
//
// A run is described by one YAML file:
//
//   output_dir: out            # stage outputs go to out/{pairs,local,...}
//   seed: 7
//   stages: [ingest, local, global, eval]
//   ingest: {triples: triples.jsonl, min_rels: 3, min_pairs: 3,
//            fixpoint: false}
//   local:  {scorer: mock, location: "", batch_size: 32, prune_below: 0,
//            cache: "", max_retries: 2, timeout_seconds: 60,
//            verbs: "", participles: ""}
//   global: {variant: l3, epsilon: 0.02, lambda: 1.0, learning_rate: 0.05,
//            epochs: 5, score_floor: 0.0001, gate_source: current,
//            minibatch: 0}
//   eval:   {dataset: dev.jsonl, directional: none, precision_floor: 0.5}
//
// Stage inputs default to the previous stage's output directory and can
// be pointed elsewhere with local.pairs, global.local and eval.graphs.
// Relative paths are resolved against the config file's directory.
// Environment variables override paths only: EGRAPH_OUTPUT_DIR,
// EGRAPH_TRIPLES, EGRAPH_DATASET, EGRAPH_GRAPHS, EGRAPH_SCORER_LOCATION.

#ifndef EGRAPH_PIPELINE_H_
#define EGRAPH_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egraph/evaluation.h"
#include "egraph/global_optimizer.h"
#include "egraph/scorer.h"
#include "egraph/triple_store.h"

namespace egraph {

inline constexpr std::string_view kStageNames[] = {"ingest", "local",
                                                   "global", "eval"};

struct RunConfig {
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  std::vector<std::string> stages;

  std::filesystem::path triples;
  FilterOptions filter;

  std::filesystem::path pairs;  // empty: <output_dir>/pairs
  ScorerSpec scorer;
  double prune_below = 0.0;
  std::filesystem::path verbs;
  std::filesystem::path participles;

  std::filesystem::path local_graphs;  // empty: <output_dir>/local
  GlobalConfig global;

  std::filesystem::path graphs;  // empty: <output_dir>/global
  std::filesystem::path dataset;
  std::optional<DirectionalSetting> directional;
  double precision_floor = 0.5;
};

// Throws ConfigError.
RunConfig ParseRunConfig(std::string_view yaml,
                         const std::filesystem::path& base_dir);
// Parses the file and applies the environment overrides.
RunConfig LoadRunConfig(const std::filesystem::path& path);
void ApplyEnvOverrides(RunConfig& config);

// "ingest,local" -> {"ingest", "local"}. Throws ConfigError.
std::vector<std::string> ParseStageList(std::string_view text);

// Canonical JSON of every setting that affects the outputs.
std::string CanonicalConfigJson(const RunConfig& config);

struct PipelineOptions {
  // Overrides config.stages when set.
  std::optional<std::vector<std::string>> stages;
  // Replace non-empty stage output directories.
  bool force = false;
};

struct PipelineResult {
  std::string manifest_json;
  std::optional<EvaluationReport> report;
};

// Validates inputs and outputs of the requested stages (ValidationError),
// then runs them in pipeline order. A failing stage raises StageError. The
// manifest is written to <output_dir>/manifest.json.
PipelineResult RunPipeline(const RunConfig& config,
                           const PipelineOptions& options = {});

}  // namespace egraph

#endif  // EGRAPH_PIPELINE_H_
