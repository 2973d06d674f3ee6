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

#ifndef EGRAPH_NLI_H_
#define EGRAPH_NLI_H_

namespace egraph {

// Raw three-way relation scores of an entailment model for one sentence
// pair.
struct NliLogits {
  double entail = 0.0;
  double contradict = 0.0;
  double neutral = 0.0;

  friend bool operator==(const NliLogits&, const NliLogits&) = default;
};

// Softmax mass on "entail". Throws NumericError on non-finite logits.
double EntailProbability(const NliLogits& logits);

}  // namespace egraph

#endif  // EGRAPH_NLI_H_
