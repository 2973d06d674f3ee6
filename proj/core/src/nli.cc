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

#include "egraph/nli.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "egraph/errors.h"

namespace egraph {

double EntailProbability(const NliLogits& logits) {
  if (!std::isfinite(logits.entail) || !std::isfinite(logits.contradict) ||
      !std::isfinite(logits.neutral)) {
    throw NumericError("non-finite NLI logits (" +
                       std::to_string(logits.entail) + ", " +
                       std::to_string(logits.contradict) + ", " +
                       std::to_string(logits.neutral) + ")");
  }
  const double m =
      std::max({logits.entail, logits.contradict, logits.neutral});
  const double e = std::exp(logits.entail - m);
  const double c = std::exp(logits.contradict - m);
  const double n = std::exp(logits.neutral - m);
  return e / (e + c + n);
}

}  // namespace egraph
