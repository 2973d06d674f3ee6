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

#include "egraph/pipeline.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

#include "egraph/errors.h"
#include "egraph/graph_io.h"
#include "egraph/hashing.h"
#include "egraph/lexicon.h"
#include "egraph/local_graph.h"

namespace egraph {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

void CheckKeys(const YAML::Node& node, const std::string& section,
               std::initializer_list<std::string_view> allowed) {
  if (!node) return;
  if (!node.IsMap()) throw ConfigError("'" + section + "' must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + section);
    }
  }
}

template <typename T>
void Read(const YAML::Node& node, const char* key, T& out,
          const std::string& section) {
  if (!node || !node[key]) return;
  try {
    out = node[key].as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError(section + "." + key + ": " + e.what());
  }
}

fs::path Resolve(const fs::path& base, const std::string& value) {
  if (value.empty()) return {};
  fs::path p(value);
  return p.is_absolute() ? p : (base / p).lexically_normal();
}

void ReadPath(const YAML::Node& node, const char* key, fs::path& out,
              const std::string& section, const fs::path& base) {
  std::string value;
  Read(node, key, value, section);
  if (!value.empty()) out = Resolve(base, value);
}

bool IsStage(std::string_view name) {
  return std::find(std::begin(kStageNames), std::end(kStageNames), name) !=
         std::end(kStageNames);
}

fs::path PairsDir(const RunConfig& c) {
  return c.pairs.empty() ? c.output_dir / "pairs" : c.pairs;
}
fs::path LocalDir(const RunConfig& c) {
  return c.local_graphs.empty() ? c.output_dir / "local" : c.local_graphs;
}
fs::path GlobalDir(const RunConfig& c) {
  return c.graphs.empty() ? c.output_dir / "global" : c.graphs;
}

fs::path StageOutput(const RunConfig& c, std::string_view stage) {
  if (stage == "ingest") return c.output_dir / "pairs";
  if (stage == "local") return c.output_dir / "local";
  if (stage == "global") return c.output_dir / "global";
  return c.output_dir / "eval";
}

bool NonEmptyDir(const fs::path& p) {
  return fs::is_directory(p) && !fs::is_empty(p);
}

GeneratorLexicon LoadLexicon(const RunConfig& c) {
  if (c.verbs.empty()) return GeneratorLexicon::Default();
  std::optional<fs::path> participles;
  if (!c.participles.empty()) participles = c.participles;
  return GeneratorLexicon::FromFiles(c.verbs, participles);
}

void RunIngest(const RunConfig& c, const fs::path& out) {
  auto store = FilterTriples(LoadTriples(c.triples), c.filter);
  WriteCandidatePairs(CandidatePairs(store), out);
}

void RunLocal(const RunConfig& c, const fs::path& out) {
  const auto lex = LoadLexicon(c);
  const auto pairs = ReadCandidatePairs(PairsDir(c));
  auto scorer = MakeScorer(c.scorer);
  fs::create_directories(out);
  for (const auto& [types, candidates] : pairs) {
    WriteGraph(BuildLocalGraph(types, candidates, *scorer, lex,
                               {c.prune_below, c.scorer.batch_size}),
               out);
  }
}

void RunGlobal(const RunConfig& c, const fs::path& out) {
  fs::create_directories(out);
  for (const auto& local : ReadGraphs(LocalDir(c))) {
    auto result = Optimize(local, c.global);
    WriteGraph(result.graph, out);
    WriteLossTrajectory(local.type_pair(), c.global, result.trajectory, out);
  }
}

EvaluationReport RunEval(const RunConfig& c, const fs::path& out) {
  GraphCollection graphs(ReadGraphs(GlobalDir(c)));
  auto dataset = LoadDataset(c.dataset);
  if (c.directional) dataset = DirectionalSubset(dataset, *c.directional);
  auto report = Evaluate(graphs, dataset, c.precision_floor);
  fs::create_directories(out);
  std::ofstream(out / "report.json", std::ios::trunc)
      << ReportToJson(report) << '\n';
  WriteCurveTsv(report.curve, out / "curve.tsv");
  return report;
}

}  // namespace

RunConfig ParseRunConfig(std::string_view yaml, const fs::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("invalid YAML: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigError("config must be a YAML mapping");
  CheckKeys(root, "config",
            {"output_dir", "seed", "stages", "ingest", "local", "global",
             "eval"});

  RunConfig c;
  ReadPath(root, "output_dir", c.output_dir, "config", base_dir);
  Read(root, "seed", c.seed, "config");
  if (root["stages"]) {
    if (root["stages"].IsScalar()) {
      c.stages = ParseStageList(root["stages"].as<std::string>());
    } else {
      std::vector<std::string> stages;
      Read(root, "stages", stages, "config");
      std::string joined;
      for (const auto& s : stages) joined += (joined.empty() ? "" : ",") + s;
      c.stages = ParseStageList(joined);
    }
  } else {
    c.stages.assign(std::begin(kStageNames), std::end(kStageNames));
  }

  const auto ingest = root["ingest"];
  CheckKeys(ingest, "ingest", {"triples", "min_rels", "min_pairs", "fixpoint"});
  ReadPath(ingest, "triples", c.triples, "ingest", base_dir);
  Read(ingest, "min_rels", c.filter.min_rels, "ingest");
  Read(ingest, "min_pairs", c.filter.min_pairs, "ingest");
  Read(ingest, "fixpoint", c.filter.fixpoint, "ingest");

  const auto local = root["local"];
  CheckKeys(local, "local",
            {"pairs", "scorer", "location", "batch_size", "prune_below",
             "cache", "max_retries", "timeout_seconds", "verbs",
             "participles"});
  ReadPath(local, "pairs", c.pairs, "local", base_dir);
  std::string kind = "mock";
  Read(local, "scorer", kind, "local");
  try {
    c.scorer.kind = ParseScorerKind(kind);
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("local.scorer: ") + e.what());
  }
  std::string location;
  Read(local, "location", location, "local");
  c.scorer.location = c.scorer.kind == ScorerKind::kFile
                          ? Resolve(base_dir, location).string()
                          : location;
  Read(local, "batch_size", c.scorer.batch_size, "local");
  Read(local, "max_retries", c.scorer.max_retries, "local");
  Read(local, "timeout_seconds", c.scorer.timeout_seconds, "local");
  fs::path cache;
  ReadPath(local, "cache", cache, "local", base_dir);
  c.scorer.cache_path = cache.string();
  Read(local, "prune_below", c.prune_below, "local");
  ReadPath(local, "verbs", c.verbs, "local", base_dir);
  ReadPath(local, "participles", c.participles, "local", base_dir);
  c.scorer.seed = c.seed;

  const auto global = root["global"];
  CheckKeys(global, "global",
            {"local", "variant", "epsilon", "lambda", "learning_rate",
             "epochs", "score_floor", "gate_source", "minibatch"});
  ReadPath(global, "local", c.local_graphs, "global", base_dir);
  std::string variant = "l3";
  std::string gate = "current";
  Read(global, "variant", variant, "global");
  Read(global, "gate_source", gate, "global");
  try {
    c.global.variant = ParseConstraintVariant(variant);
    c.global.gate_source = ParseGateSource(gate);
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("global: ") + e.what());
  }
  Read(global, "epsilon", c.global.epsilon, "global");
  Read(global, "lambda", c.global.lambda, "global");
  Read(global, "learning_rate", c.global.learning_rate, "global");
  Read(global, "epochs", c.global.epochs, "global");
  Read(global, "score_floor", c.global.score_floor, "global");
  Read(global, "minibatch", c.global.minibatch, "global");
  c.global.seed = c.seed;

  const auto eval = root["eval"];
  CheckKeys(eval, "eval",
            {"graphs", "dataset", "directional", "precision_floor"});
  ReadPath(eval, "graphs", c.graphs, "eval", base_dir);
  ReadPath(eval, "dataset", c.dataset, "eval", base_dir);
  std::string directional = "none";
  Read(eval, "directional", directional, "eval");
  if (directional != "none") {
    try {
      c.directional = ParseDirectionalSetting(directional);
    } catch (const ValidationError& e) {
      throw ConfigError(std::string("eval.directional: ") + e.what());
    }
  }
  Read(eval, "precision_floor", c.precision_floor, "eval");

  if (c.output_dir.empty()) throw ConfigError("output_dir is required");
  try {
    c.global.Validate();
    c.scorer.Validate();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  return c;
}

RunConfig LoadRunConfig(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream text;
  text << in.rdbuf();
  auto config = ParseRunConfig(text.str(), path.parent_path());
  ApplyEnvOverrides(config);
  return config;
}

void ApplyEnvOverrides(RunConfig& config) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  if (auto v = env("EGRAPH_OUTPUT_DIR")) config.output_dir = *v;
  if (auto v = env("EGRAPH_TRIPLES")) config.triples = *v;
  if (auto v = env("EGRAPH_DATASET")) config.dataset = *v;
  if (auto v = env("EGRAPH_GRAPHS")) config.graphs = *v;
  if (auto v = env("EGRAPH_SCORER_LOCATION")) config.scorer.location = *v;
}

std::vector<std::string> ParseStageList(std::string_view text) {
  std::set<std::string> requested;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (!IsStage(item)) {
      throw ConfigError("unknown stage '" + item +
                        "' (expected ingest, local, global, eval)");
    }
    requested.insert(item);
  }
  if (requested.empty()) throw ConfigError("no stages requested");
  std::vector<std::string> out;
  for (auto name : kStageNames) {
    if (requested.contains(std::string(name))) out.emplace_back(name);
  }
  return out;
}

std::string CanonicalConfigJson(const RunConfig& c) {
  json doc = {
      {"seed", c.seed},
      {"stages", c.stages},
      {"ingest",
       {{"min_rels", c.filter.min_rels},
        {"min_pairs", c.filter.min_pairs},
        {"fixpoint", c.filter.fixpoint}}},
      {"local",
       {{"scorer", ScorerKindName(c.scorer.kind)},
        {"location", c.scorer.location},
        {"batch_size", c.scorer.batch_size},
        {"seed", c.scorer.seed},
        {"prune_below", c.prune_below},
        {"lexicon", c.verbs.empty() ? "default" : "custom"}}},
      {"global",
       {{"variant", ConstraintVariantName(c.global.variant)},
        {"epsilon", c.global.epsilon},
        {"lambda", c.global.lambda},
        {"learning_rate", c.global.learning_rate},
        {"epochs", c.global.epochs},
        {"score_floor", c.global.score_floor},
        {"gate_source", GateSourceName(c.global.gate_source)},
        {"minibatch", c.global.minibatch},
        {"seed", c.global.seed}}},
      {"eval",
       {{"directional", !c.directional                            ? "none"
                        : *c.directional == DirectionalSetting::kA ? "a"
                                                                   : "b"},
        {"precision_floor", c.precision_floor}}}};
  return doc.dump();
}

PipelineResult RunPipeline(const RunConfig& config,
                           const PipelineOptions& options) {
  const std::vector<std::string> stages =
      options.stages ? *options.stages : config.stages;
  if (stages.empty()) throw ValidationError("no stages to run");
  auto runs = [&](std::string_view s) {
    return std::find(stages.begin(), stages.end(), s) != stages.end();
  };

  // Inputs, checked against what earlier requested stages will produce.
  auto require = [](const fs::path& p, bool dir, const std::string& what) {
    if (p.empty()) throw ValidationError(what + " is not configured");
    if (dir ? !fs::is_directory(p) : !fs::is_regular_file(p)) {
      throw ValidationError(what + " not found: " + p.string());
    }
  };
  json inputs = json::object();
  if (runs("ingest")) {
    require(config.triples, false, "triples file");
    inputs["triples"] = HashFile(config.triples);
  }
  if (runs("local")) {
    if (!(runs("ingest") && PairsDir(config) == StageOutput(config, "ingest"))) {
      require(PairsDir(config), true, "candidate pair directory");
      inputs["pairs"] = HashDirectory(PairsDir(config));
    }
    if (config.scorer.kind == ScorerKind::kFile) {
      require(config.scorer.location, false, "score file");
      inputs["scores"] = HashFile(config.scorer.location);
    }
    if (!config.verbs.empty()) {
      require(config.verbs, false, "verb list");
      inputs["verbs"] = HashFile(config.verbs);
    }
    if (!config.participles.empty()) {
      require(config.participles, false, "participle list");
      inputs["participles"] = HashFile(config.participles);
    }
  }
  if (runs("global") &&
      !(runs("local") && LocalDir(config) == StageOutput(config, "local"))) {
    require(LocalDir(config), true, "local graph directory");
    inputs["local_graphs"] = HashDirectory(LocalDir(config));
  }
  if (runs("eval")) {
    require(config.dataset, false, "dataset");
    inputs["dataset"] = HashFile(config.dataset);
    if (!(runs("global") && GlobalDir(config) == StageOutput(config, "global"))) {
      require(GlobalDir(config), true, "graph directory");
      inputs["graphs"] = HashDirectory(GlobalDir(config));
    }
  }

  for (const auto& s : stages) {
    const fs::path out = StageOutput(config, s);
    if (NonEmptyDir(out) && !options.force) {
      throw ValidationError("output directory " + out.string() +
                            " is not empty; pass --force to overwrite");
    }
  }

  PipelineResult result;
  json stage_log = json::array();
  for (const auto& s : stages) {
    const fs::path out = StageOutput(config, s);
    const auto start = std::chrono::steady_clock::now();
    try {
      fs::remove_all(out);
      fs::create_directories(out);
      if (s == "ingest") RunIngest(config, out);
      if (s == "local") RunLocal(config, out);
      if (s == "global") RunGlobal(config, out);
      if (s == "eval") result.report = RunEval(config, out);
    } catch (const std::exception& e) {
      throw StageError(s, e.what());
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    stage_log.push_back({{"name", s},
                         {"seconds", elapsed.count()},
                         {"output_hash", HashDirectory(out)}});
  }

  const std::string canonical = CanonicalConfigJson(config);
  json manifest = {{"config_hash", Sha256Hex(canonical)},
                   {"config", json::parse(canonical)},
                   {"inputs", inputs},
                   {"stages", stage_log}};
  if (result.report) {
    manifest["metrics"] = {{"prc_auc", result.report->prc_auc},
                           {"roc_auc", result.report->roc_auc},
                           {"examples", result.report->examples}};
  }
  result.manifest_json = manifest.dump(2);
  fs::create_directories(config.output_dir);
  std::ofstream out(config.output_dir / "manifest.json", std::ios::trunc);
  if (!out) throw IoError("cannot write manifest in " +
                          config.output_dir.string());
  out << result.manifest_json << '\n';
  return result;
}

}  // namespace egraph
