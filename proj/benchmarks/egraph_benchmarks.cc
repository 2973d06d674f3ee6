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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "egraph/global_optimizer.h"
#include "egraph/metrics.h"
#include "egraph/sentence_generator.h"

namespace egraph {
namespace {

EntailmentGraph RandomGraph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  EntailmentGraph g({"x", "y"});
  for (int i = 0; i < n; ++i) {
    g.AddNode(ParsePredicate("(rel" + std::to_string(i) + ".1,rel" +
                             std::to_string(i) + ".2,x,y)"));
  }
  for (NodeId a = 0; a < static_cast<NodeId>(n); ++a) {
    for (NodeId b = 0; b < static_cast<NodeId>(n); ++b) {
      if (a != b && u(rng) < density) {
        g.SetScore(a, b, u(rng) < 0.3 ? 0.99 : 0.5 * u(rng));
      }
    }
  }
  return g;
}

void BM_EnumerateTriples(benchmark::State& state) {
  auto g = RandomGraph(static_cast<int>(state.range(0)), 0.1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateTriples(g, 0.02));
  }
}
BENCHMARK(BM_EnumerateTriples)->Arg(100)->Arg(400)->Arg(1000);

void BM_Optimize(benchmark::State& state) {
  auto g = RandomGraph(static_cast<int>(state.range(0)), 0.05, 2);
  GlobalConfig c;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Optimize(g, c));
  }
}
BENCHMARK(BM_Optimize)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_GenerateSentence(benchmark::State& state) {
  const auto& lex = GeneratorLexicon::Default();
  const std::vector<TypedPredicate> preds = {
      ParsePredicate("(prefer.2,prefer.for.2,medicine,disease)"),
      ParsePredicate("(be.1,be.capital.of.2,location_1,location_2)"),
      ParsePredicate("(give.2,give.3,person,thing)"),
      ParsePredicate("(cure.1,cure.2,medicine,disease)")};
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(GenerateSentence(preds[i++ % preds.size()], lex));
  }
}
BENCHMARK(BM_GenerateSentence);

void BM_PrcAucBounded(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<ScoredLabel> data(static_cast<size_t>(state.range(0)));
  for (auto& d : data) {
    d.label = u(rng) < 0.4;
    d.score = u(rng) + (d.label ? 0.2 : 0.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(PrcAucBounded(data));
  }
}
BENCHMARK(BM_PrcAucBounded)->Arg(1000)->Arg(100000);

}  // namespace
}  // namespace egraph

BENCHMARK_MAIN();
