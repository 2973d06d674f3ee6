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

#ifndef EGRAPH_METRICS_H_
#define EGRAPH_METRICS_H_

#include <span>
#include <vector>

namespace egraph {

struct ScoredLabel {
  double score = 0.0;
  bool label = false;
};

struct CurvePoint {
  double threshold = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
};

// One point per distinct score, thresholds descending; an example is
// predicted positive when its score >= threshold. Equal scores flip
// together. Throws MetricError unless both classes are present.
std::vector<CurvePoint> PrecisionRecallCurve(std::span<const ScoredLabel> data);

// Mann-Whitney statistic P(s+ > s-) + P(s+ = s-) / 2 by midrank sums.
// Throws MetricError unless both classes are present.
double RocAuc(std::span<const ScoredLabel> data);

// Area between the precision-recall curve and `precision_floor` where the
// curve is at or above the floor, by trapezoids over recall. The curve
// starts at (recall 0, precision of the highest threshold); crossings of
// the floor are interpolated linearly. Not renormalized: a perfect ranking
// gives 1 - precision_floor.
double PrcAucBounded(std::span<const ScoredLabel> data,
                     double precision_floor = 0.5);

}  // namespace egraph

#endif  // EGRAPH_METRICS_H_
