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

#include <algorithm>
#include <functional>
#include <utility>

#include "oracles/oracles.h"

namespace egraph::oracle {

double PairwiseRocAuc(const std::vector<ScoredLabel>& data) {
  double ordered = 0.0;
  double pairs = 0.0;
  for (const auto& p : data) {
    if (!p.label) continue;
    for (const auto& n : data) {
      if (n.label) continue;
      pairs += 1.0;
      if (p.score > n.score) ordered += 1.0;
      if (p.score == n.score) ordered += 0.5;
    }
  }
  return ordered / pairs;
}

double SweepPrcAuc(const std::vector<ScoredLabel>& data, double floor) {
  std::vector<double> thresholds;
  size_t positives = 0;
  for (const auto& x : data) {
    thresholds.push_back(x.score);
    positives += x.label;
  }
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  std::vector<std::pair<double, double>> points;  // (recall, precision)
  for (double t : thresholds) {
    size_t tp = 0;
    size_t predicted = 0;
    for (const auto& x : data) {
      if (x.score >= t) {
        ++predicted;
        tp += x.label;
      }
    }
    points.emplace_back(static_cast<double>(tp) / positives,
                        static_cast<double>(tp) / predicted);
  }
  points.insert(points.begin(), {0.0, points.front().second});

  // Integral of max(0, g) for g linear from g0 to g1 over width w is
  // w * (max(0,g1)^2 - max(0,g0)^2) / (2 (g1 - g0)).
  double area = 0.0;
  for (size_t i = 1; i < points.size(); ++i) {
    const double w = points[i].first - points[i - 1].first;
    if (w <= 0.0) continue;
    const double g0 = points[i - 1].second - floor;
    const double g1 = points[i].second - floor;
    const double p0 = std::max(0.0, g0);
    const double p1 = std::max(0.0, g1);
    if (g0 == g1) {
      area += w * p0;
    } else {
      area += w * (p1 * p1 - p0 * p0) / (2.0 * (g1 - g0));
    }
  }
  return area;
}

}  // namespace egraph::oracle
