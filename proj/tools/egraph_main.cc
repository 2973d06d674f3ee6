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

// egraph: command line front end.
//
//   egraph gensent --predicate P [--graph-types a,b]
//   egraph ingest --triples FILE --out DIR
//   egraph build-local --pairs DIR --scorer mock --out DIR
//   egraph globalize --local DIR --variant l3 --out DIR
//   egraph evaluate --graphs DIR --dataset FILE
//   egraph pipeline --config FILE
//   egraph finetune-corpus --predicates FILE --paraphrases FILE --out DIR

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "egraph/errors.h"
#include "egraph/evaluation.h"
#include "egraph/finetune_corpus.h"
#include "egraph/global_optimizer.h"
#include "egraph/graph_io.h"
#include "egraph/lexicon.h"
#include "egraph/local_graph.h"
#include "egraph/pipeline.h"
#include "egraph/scorer.h"
#include "egraph/sentence_generator.h"
#include "egraph/triple_store.h"

namespace fs = std::filesystem;

namespace {

struct LexiconFlags {
  std::string verbs;
  std::string participles;

  void Add(CLI::App* app) {
    app->add_option("--verbs", verbs, "Verb lemma list (default: built in)")
        ->check(CLI::ExistingFile);
    app->add_option("--participles", participles,
                    "Irregular participle TSV")
        ->check(CLI::ExistingFile);
  }

  egraph::GeneratorLexicon Load() const {
    if (verbs.empty()) return egraph::GeneratorLexicon::Default();
    std::optional<fs::path> p;
    if (!participles.empty()) p = participles;
    return egraph::GeneratorLexicon::FromFiles(verbs, p);
  }
};

void RequireFreshDir(const fs::path& dir, bool force) {
  if (fs::is_directory(dir) && !fs::is_empty(dir)) {
    if (!force) {
      throw egraph::ValidationError("output directory " + dir.string() +
                                    " is not empty; pass --force");
    }
    fs::remove_all(dir);
  }
  fs::create_directories(dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typed entailment graph construction"};
  app.require_subcommand(1);

  // gensent
  auto* gensent = app.add_subcommand("gensent", "Print the template sentence");
  std::string predicate;
  std::string graph_types;
  LexiconFlags gensent_lex;
  gensent->add_option("--predicate", predicate, "Typed predicate")->required();
  gensent->add_option("--graph-types", graph_types,
                      "Ordered graph types 'a,b' (default: the predicate's)");
  gensent_lex.Add(gensent);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Filter triples, link pairs");
  std::string triples_path;
  std::string ingest_out;
  egraph::FilterOptions filter;
  bool ingest_force = false;
  ingest->add_option("--triples", triples_path, "Triples JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--out", ingest_out, "Candidate pair directory")
      ->required();
  ingest->add_option("--min-rels", filter.min_rels, "Rule 1 threshold")
      ->capture_default_str();
  ingest->add_option("--min-pairs", filter.min_pairs, "Rule 2 threshold")
      ->capture_default_str();
  ingest->add_flag("--fixpoint", filter.fixpoint,
                   "Repeat both rules until stable");
  ingest->add_flag("--force", ingest_force, "Overwrite --out");

  // build-local
  auto* build = app.add_subcommand("build-local", "Score local graphs");
  std::string pairs_dir;
  std::string scorer_kind = "mock";
  std::string build_out;
  double prune_below = 0.0;
  bool build_force = false;
  egraph::ScorerSpec spec;
  LexiconFlags build_lex;
  build->add_option("--pairs", pairs_dir, "Candidate pair directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  build->add_option("--scorer", scorer_kind, "file | mock | remote")
      ->check(CLI::IsMember({"file", "mock", "remote"}))
      ->capture_default_str();
  build->add_option("--location", spec.location,
                    "Score file or http://host:port endpoint");
  build->add_option("--batch", spec.batch_size, "Scorer batch size")
      ->capture_default_str();
  build->add_option("--seed", spec.seed, "Mock scorer seed")
      ->capture_default_str();
  build->add_option("--max-retries", spec.max_retries, "Remote retries")
      ->capture_default_str();
  build->add_option("--timeout", spec.timeout_seconds,
                    "Remote timeout in seconds")
      ->capture_default_str();
  build->add_option("--cache", spec.cache_path, "Remote logit cache TSV");
  build->add_option("--prune-below", prune_below,
                    "Drop scores below this value")
      ->capture_default_str();
  build->add_option("--out", build_out, "Local graph directory")->required();
  build->add_flag("--force", build_force, "Overwrite --out");
  build_lex.Add(build);

  // globalize
  auto* globalize = app.add_subcommand("globalize", "Soft transitivity");
  std::string local_dir;
  std::string global_out;
  std::string variant = "l3";
  std::string gate_source = "current";
  bool global_force = false;
  egraph::GlobalConfig gconfig;
  globalize->add_option("--local", local_dir, "Local graph directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  globalize->add_option("--variant", variant, "l1 | l2 | l3")
      ->check(CLI::IsMember({"l1", "l2", "l3", "L1", "L2", "L3"}))
      ->capture_default_str();
  globalize->add_option("--epsilon", gconfig.epsilon, "Gate margin")
      ->capture_default_str();
  globalize->add_option("--lambda", gconfig.lambda, "Constraint weight")
      ->capture_default_str();
  globalize->add_option("--lr", gconfig.learning_rate, "Learning rate")
      ->capture_default_str();
  globalize->add_option("--epochs", gconfig.epochs, "Epochs")
      ->capture_default_str();
  globalize->add_option("--score-floor", gconfig.score_floor,
                        "Smallest score")
      ->capture_default_str();
  globalize->add_option("--gate-source", gate_source, "current | local")
      ->check(CLI::IsMember({"current", "local"}))
      ->capture_default_str();
  globalize->add_option("--shuffle-minibatch", gconfig.minibatch,
                        "Triples per step (0: full batch)")
      ->capture_default_str();
  globalize->add_option("--seed", gconfig.seed, "Minibatch shuffle seed")
      ->capture_default_str();
  globalize->add_option("--out", global_out, "Global graph directory")
      ->required();
  globalize->add_flag("--force", global_force, "Overwrite --out");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "PR-AUC and ROC-AUC");
  std::string graphs_dir;
  std::string dataset_path;
  std::string directional;
  std::string curve_out;
  double precision_floor = 0.5;
  evaluate->add_option("--graphs", graphs_dir, "Graph directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  evaluate->add_option("--dataset", dataset_path, "Examples JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--directional", directional, "Subset: a | b")
      ->check(CLI::IsMember({"a", "b"}));
  evaluate->add_option("--precision-floor", precision_floor,
                       "Lower precision bound of the PR area")
      ->capture_default_str();
  evaluate->add_option("--curve-out", curve_out, "Write curve TSV");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "Run configured stages");
  std::string config_path;
  std::string stages;
  bool pipeline_force = false;
  pipeline->add_option("--config", config_path, "Run config YAML")
      ->required()
      ->check(CLI::ExistingFile);
  pipeline->add_option("--stages", stages,
                       "Comma list of ingest,local,global,eval");
  pipeline->add_flag("--force", pipeline_force,
                     "Overwrite stage output directories");

  // finetune-corpus
  auto* corpus = app.add_subcommand("finetune-corpus",
                                    "Sentence pairs for NLI adaptation");
  std::string predicates_path;
  std::string paraphrases_path;
  std::string corpus_out;
  egraph::FinetuneOptions corpus_options;
  LexiconFlags corpus_lex;
  corpus->add_option("--predicates", predicates_path, "Predicate list")
      ->required()
      ->check(CLI::ExistingFile);
  corpus->add_option("--paraphrases", paraphrases_path,
                     "Paraphrase lexicon TSV")
      ->required()
      ->check(CLI::ExistingFile);
  corpus->add_option("--out", corpus_out, "Output directory")->required();
  corpus->add_option("--split", corpus_options.train_fraction,
                     "Training fraction")
      ->capture_default_str();
  corpus->add_option("--negative-ratio", corpus_options.negative_ratio,
                     "Negatives per positive")
      ->capture_default_str();
  corpus->add_option("--seed", corpus_options.seed, "Sampling seed")
      ->capture_default_str();
  corpus_lex.Add(corpus);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gensent) {
      auto p = egraph::ParsePredicate(predicate);
      egraph::GraphTypeOrder order = egraph::OwnOrder(p);
      if (!graph_types.empty()) {
        auto comma = graph_types.find(',');
        if (comma == std::string::npos) {
          throw egraph::ValidationError("--graph-types expects 'a,b'");
        }
        order = {graph_types.substr(0, comma), graph_types.substr(comma + 1)};
      }
      std::cout << egraph::GenerateSentence(p, order, gensent_lex.Load())
                << '\n';
    } else if (*ingest) {
      RequireFreshDir(ingest_out, ingest_force);
      auto store = egraph::LoadTriples(triples_path);
      auto filtered = egraph::FilterTriples(store, filter);
      auto pairs = egraph::CandidatePairs(filtered);
      egraph::WriteCandidatePairs(pairs, ingest_out);
      size_t n = 0;
      for (const auto& [types, set] : pairs) n += set.size();
      std::cerr << "triples " << store.size() << " -> " << filtered.size()
                << ", " << pairs.size() << " graph(s), " << n
                << " candidate pair(s)\n";
    } else if (*build) {
      spec.kind = egraph::ParseScorerKind(scorer_kind);
      spec.Validate();
      RequireFreshDir(build_out, build_force);
      const auto lex = build_lex.Load();
      auto scorer = egraph::MakeScorer(spec);
      for (const auto& [types, pairs] : egraph::ReadCandidatePairs(pairs_dir)) {
        auto graph = egraph::BuildLocalGraph(types, pairs, *scorer, lex,
                                             {prune_below, spec.batch_size});
        egraph::WriteGraph(graph, build_out);
        std::cerr << types.Name() << ": " << graph.num_nodes() << " nodes, "
                  << graph.num_edges() << " edges\n";
      }
    } else if (*globalize) {
      gconfig.variant = egraph::ParseConstraintVariant(variant);
      gconfig.gate_source = egraph::ParseGateSource(gate_source);
      gconfig.Validate();
      RequireFreshDir(global_out, global_force);
      for (const auto& local : egraph::ReadGraphs(local_dir)) {
        auto result = egraph::Optimize(local, gconfig);
        egraph::WriteGraph(result.graph, global_out);
        egraph::WriteLossTrajectory(local.type_pair(), gconfig,
                                    result.trajectory, global_out);
        std::cerr << local.type_pair().Name() << ": " << local.num_edges()
                  << " -> " << result.graph.num_edges() << " edges\n";
      }
    } else if (*evaluate) {
      egraph::GraphCollection graphs(egraph::ReadGraphs(graphs_dir));
      auto dataset = egraph::LoadDataset(dataset_path);
      if (!directional.empty()) {
        dataset = egraph::DirectionalSubset(
            dataset, egraph::ParseDirectionalSetting(directional));
      }
      auto report = egraph::Evaluate(graphs, dataset, precision_floor);
      std::cout << egraph::ReportToJson(report) << '\n';
      if (!curve_out.empty()) egraph::WriteCurveTsv(report.curve, curve_out);
    } else if (*pipeline) {
      auto config = egraph::LoadRunConfig(config_path);
      egraph::PipelineOptions options;
      options.force = pipeline_force;
      if (!stages.empty()) options.stages = egraph::ParseStageList(stages);
      auto result = egraph::RunPipeline(config, options);
      std::cout << result.manifest_json << '\n';
    } else if (*corpus) {
      auto result = egraph::GenerateFinetuneCorpus(
          egraph::LoadPredicateList(predicates_path),
          egraph::LoadParaphraseLexicon(paraphrases_path), corpus_lex.Load(),
          corpus_options);
      egraph::WriteFinetuneCorpus(result, corpus_out);
      std::cerr << "train " << result.train.size() << ", valid "
                << result.valid.size() << '\n';
    }
  } catch (const egraph::Error& e) {
    std::cerr << "egraph: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "egraph: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
