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

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>

#include <nlohmann/json.hpp>

#include "egraph/errors.h"

namespace egraph {
namespace {

using json = nlohmann::json;

// Whether the hypothesis's first slot plays the role of the premise's
// first slot.
bool SameOrientation(const EntailmentExample& ex) {
  if (ex.premise.same_type()) {
    return ex.premise.subscript1 == ex.hypothesis.subscript1;
  }
  return ex.premise.type1 == ex.hypothesis.type1;
}

// (premise, hypothesis) typed into `types` with the premise's first slot
// taking the first (flip = false) or second type.
std::pair<TypedPredicate, TypedPredicate> Substitute(
    const UntypedPredicate& premise, const UntypedPredicate& hypothesis,
    bool same_orientation, const TypePair& types, bool flip) {
  const std::string& a = flip ? types.second : types.first;
  const std::string& b = flip ? types.first : types.second;
  const int sa = flip ? 2 : 1;
  const int sb = flip ? 1 : 2;
  TypedPredicate p = WithTypes(premise, a, b, sa, sb);
  TypedPredicate q = same_orientation ? WithTypes(hypothesis, a, b, sa, sb)
                                      : WithTypes(hypothesis, b, a, sb, sa);
  return {std::move(p), std::move(q)};
}

bool ParseLabel(const json& v) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) {
    auto n = v.get<long long>();
    if (n == 0 || n == 1) return n == 1;
  }
  throw IngestError("label must be a boolean or 0/1");
}

}  // namespace

std::vector<EntailmentExample> ParseDataset(std::istream& in) {
  std::vector<EntailmentExample> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      json row = json::parse(line);
      EntailmentExample ex;
      ex.premise = ParsePredicate(row.at("premise_pred").get<std::string>());
      ex.hypothesis =
          ParsePredicate(row.at("hypothesis_pred").get<std::string>());
      ex.label = ParseLabel(row.at("label"));
      if (TypePairOf(ex.premise) != TypePairOf(ex.hypothesis)) {
        throw IngestError("premise and hypothesis have different types");
      }
      out.push_back(std::move(ex));
    } catch (const json::exception& e) {
      throw IngestError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw IngestError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<EntailmentExample> LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open dataset " + path.string());
  try {
    return ParseDataset(in);
  } catch (const IngestError& e) {
    throw IngestError(path.string() + ": " + e.what());
  }
}

GraphCollection::GraphCollection(std::vector<EntailmentGraph> graphs)
    : graphs_(std::move(graphs)) {
  for (size_t i = 0; i < graphs_.size(); ++i) {
    if (!by_types_.emplace(graphs_[i].type_pair(), i).second) {
      throw ValidationError("duplicate graph for " +
                            graphs_[i].type_pair().Name());
    }
    for (const auto& p : graphs_[i].nodes()) {
      auto& list = by_untyped_[UntypedForm(p)];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
  }
}

const EntailmentGraph* GraphCollection::Find(const TypePair& types) const {
  auto it = by_types_.find(types);
  return it == by_types_.end() ? nullptr : &graphs_[it->second];
}

ExampleScore GraphCollection::Score(const EntailmentExample& ex) const {
  if (ex.premise == ex.hypothesis) return {1.0, ScoreSource::kIdentity, 0};

  if (const auto* g = Find(TypePairOf(ex.premise))) {
    auto p = g->FindNode(ex.premise);
    auto q = g->FindNode(ex.hypothesis);
    if (p && q) return {g->Score(*p, *q), ScoreSource::kTyped, 0};
  }

  const UntypedPredicate up = UntypedForm(ex.premise);
  const UntypedPredicate uq = UntypedForm(ex.hypothesis);
  auto ip = by_untyped_.find(up);
  auto iq = by_untyped_.find(uq);
  if (ip == by_untyped_.end() || iq == by_untyped_.end()) return {};
  std::vector<size_t> shared;
  std::set_intersection(ip->second.begin(), ip->second.end(),
                        iq->second.begin(), iq->second.end(),
                        std::back_inserter(shared));
  const bool same = SameOrientation(ex);
  double sum = 0.0;
  int used = 0;
  for (size_t gi : shared) {
    const auto& g = graphs_[gi];
    double graph_sum = 0.0;
    int orientations = 0;
    for (bool flip : {false, true}) {
      auto [p, q] = Substitute(up, uq, same, g.type_pair(), flip);
      auto np = g.FindNode(p);
      auto nq = g.FindNode(q);
      if (np && nq) {
        graph_sum += g.Score(*np, *nq);
        ++orientations;
      }
    }
    if (orientations > 0) {
      sum += graph_sum / orientations;
      ++used;
    }
  }
  if (used == 0) return {};
  return {sum / used, ScoreSource::kBackoff, used};
}

DirectionalSetting ParseDirectionalSetting(std::string_view name) {
  if (name == "a") return DirectionalSetting::kA;
  if (name == "b") return DirectionalSetting::kB;
  throw ValidationError("unknown directional setting '" + std::string(name) +
                        "' (expected a or b)");
}

std::vector<EntailmentExample> DirectionalSubset(
    std::span<const EntailmentExample> dataset, DirectionalSetting setting) {
  std::map<std::pair<TypedPredicate, TypedPredicate>, std::set<bool>> labels;
  for (const auto& ex : dataset) {
    labels[{ex.premise, ex.hypothesis}].insert(ex.label);
  }
  std::vector<EntailmentExample> out;
  for (const auto& ex : dataset) {
    auto it = labels.find({ex.hypothesis, ex.premise});
    const bool opposite = it != labels.end() && it->second.contains(!ex.label);
    const bool same = it != labels.end() && it->second.contains(ex.label);
    const bool keep = setting == DirectionalSetting::kA ? opposite : !same;
    if (keep) out.push_back(ex);
  }
  return out;
}

EvaluationReport Evaluate(const GraphCollection& graphs,
                          std::span<const EntailmentExample> dataset,
                          double precision_floor) {
  EvaluationReport report;
  report.precision_floor = precision_floor;
  report.examples = dataset.size();
  std::vector<ScoredLabel> scored;
  scored.reserve(dataset.size());
  for (const auto& ex : dataset) {
    const ExampleScore s = graphs.Score(ex);
    switch (s.source) {
      case ScoreSource::kIdentity:
        ++report.identity;
        break;
      case ScoreSource::kTyped:
        ++report.typed;
        break;
      case ScoreSource::kBackoff:
        ++report.backoff;
        break;
      case ScoreSource::kNone:
        ++report.unscored;
        break;
    }
    (ex.label ? report.positives : report.negatives)++;
    scored.push_back({s.score, ex.label});
  }
  report.prc_auc = PrcAucBounded(scored, precision_floor);
  report.roc_auc = RocAuc(scored);
  report.curve = PrecisionRecallCurve(scored);
  return report;
}

std::string ReportToJson(const EvaluationReport& report) {
  json curve = json::array();
  for (const auto& p : report.curve) {
    curve.push_back({{"threshold", p.threshold},
                     {"precision", p.precision},
                     {"recall", p.recall},
                     {"tpr", p.tpr},
                     {"fpr", p.fpr}});
  }
  json doc = {{"prc_auc", report.prc_auc},
              {"roc_auc", report.roc_auc},
              {"precision_floor", report.precision_floor},
              {"counts",
               {{"examples", report.examples},
                {"positives", report.positives},
                {"negatives", report.negatives},
                {"identity", report.identity},
                {"typed", report.typed},
                {"backoff", report.backoff},
                {"unscored", report.unscored}}},
              {"curve", curve}};
  return doc.dump(2);
}

void WriteCurveTsv(std::span<const CurvePoint> curve,
                   const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "threshold\tprecision\trecall\ttpr\tfpr\n";
  out.precision(17);
  for (const auto& p : curve) {
    out << p.threshold << '\t' << p.precision << '\t' << p.recall << '\t'
        << p.tpr << '\t' << p.fpr << '\n';
  }
}

}  // namespace egraph
