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

#include "egraph/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "egraph/errors.h"

namespace egraph {
namespace {

struct Counts {
  size_t positives = 0;
  size_t negatives = 0;
};

Counts CheckInput(std::span<const ScoredLabel> data) {
  Counts c;
  for (const auto& x : data) {
    if (!std::isfinite(x.score)) throw MetricError("non-finite score");
    (x.label ? c.positives : c.negatives)++;
  }
  if (c.positives == 0 || c.negatives == 0) {
    throw MetricError("metric undefined: need both positive and negative "
                      "examples (got " + std::to_string(c.positives) +
                      " positive, " + std::to_string(c.negatives) +
                      " negative)");
  }
  return c;
}

std::vector<ScoredLabel> SortedDescending(std::span<const ScoredLabel> data) {
  std::vector<ScoredLabel> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredLabel& a, const ScoredLabel& b) {
              return a.score > b.score;
            });
  return sorted;
}

}  // namespace

std::vector<CurvePoint> PrecisionRecallCurve(
    std::span<const ScoredLabel> data) {
  const Counts c = CheckInput(data);
  const auto sorted = SortedDescending(data);
  std::vector<CurvePoint> curve;
  size_t tp = 0;
  size_t fp = 0;
  for (size_t i = 0; i < sorted.size();) {
    const double threshold = sorted[i].score;
    while (i < sorted.size() && sorted[i].score == threshold) {
      (sorted[i].label ? tp : fp)++;
      ++i;
    }
    CurvePoint p;
    p.threshold = threshold;
    p.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    p.recall = static_cast<double>(tp) / static_cast<double>(c.positives);
    p.tpr = p.recall;
    p.fpr = static_cast<double>(fp) / static_cast<double>(c.negatives);
    curve.push_back(p);
  }
  return curve;
}

double RocAuc(std::span<const ScoredLabel> data) {
  const Counts c = CheckInput(data);
  std::vector<ScoredLabel> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredLabel& a, const ScoredLabel& b) {
              return a.score < b.score;
            });
  double positive_rank_sum = 0.0;
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    size_t pos = 0;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      pos += sorted[j].label;
      ++j;
    }
    // Ranks i+1 .. j share the midrank.
    const double midrank = (static_cast<double>(i + 1) + j) / 2.0;
    positive_rank_sum += midrank * pos;
    i = j;
  }
  const double np = static_cast<double>(c.positives);
  const double nn = static_cast<double>(c.negatives);
  return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

double PrcAucBounded(std::span<const ScoredLabel> data,
                     double precision_floor) {
  if (!(precision_floor >= 0.0 && precision_floor <= 1.0)) {
    throw MetricError("precision floor must be in [0, 1]");
  }
  const auto curve = PrecisionRecallCurve(data);
  double area = 0.0;
  double r0 = 0.0;
  double p0 = curve.front().precision;
  for (const auto& point : curve) {
    const double r1 = point.recall;
    const double p1 = point.precision;
    const double h0 = p0 - precision_floor;
    const double h1 = p1 - precision_floor;
    if (r1 > r0) {
      if (h0 >= 0.0 && h1 >= 0.0) {
        area += (r1 - r0) * (h0 + h1) / 2.0;
      } else if (h0 >= 0.0) {
        area += (r1 - r0) * h0 / (h0 - h1) * h0 / 2.0;
      } else if (h1 >= 0.0) {
        area += (r1 - r0) * h1 / (h1 - h0) * h1 / 2.0;
      }
    }
    r0 = r1;
    p0 = p1;
  }
  return area;
}

}  // namespace egraph
