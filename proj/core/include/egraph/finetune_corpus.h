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

// Sentence-pair corpus for adapting an NLI model to generated sentences.
//
// The paraphrase lexicon is a TSV of untyped predicate pairs
//   (w1.i1,w2.i2)<TAB>(w1.i1,w2.i2)<TAB>label
// with label in {paraphrase, entail, none}. Every ordered pair (p, q) of
// typed predicates from the same type pair yields at most one row:
//   paraphrase  -> "entail" for (p, q) and (q, p)
//   entail      -> "entail" for (p, q)
//   none        -> "neutral"
// Pairs not covered by the lexicon become "neutral" negatives, sampled
// down to negative_ratio times the number of entail rows.

#ifndef EGRAPH_FINETUNE_CORPUS_H_
#define EGRAPH_FINETUNE_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "egraph/lexicon.h"
#include "egraph/predicate.h"

namespace egraph {

enum class ParaphraseLabel { kParaphrase, kEntail, kNone };

using ParaphraseLexicon =
    std::map<std::pair<UntypedPredicate, UntypedPredicate>, ParaphraseLabel>;

// Throws CorpusError on unknown labels, malformed rows and conflicting
// entries.
ParaphraseLexicon ParseParaphraseLexicon(std::istream& in);
ParaphraseLexicon LoadParaphraseLexicon(const std::filesystem::path& path);

// One typed predicate per line; blank and '#' lines skipped.
std::vector<TypedPredicate> LoadPredicateList(
    const std::filesystem::path& path);

struct CorpusRow {
  std::string sentence1;
  std::string sentence2;
  std::string label;  // "entail" or "neutral"

  friend bool operator==(const CorpusRow&, const CorpusRow&) = default;
};

struct FinetuneOptions {
  double train_fraction = 0.8;
  double negative_ratio = 3.0;
  std::uint64_t seed = 0;
};

struct FinetuneCorpus {
  std::vector<CorpusRow> train;
  std::vector<CorpusRow> valid;
};

FinetuneCorpus GenerateFinetuneCorpus(
    const std::vector<TypedPredicate>& predicates,
    const ParaphraseLexicon& paraphrases, const GeneratorLexicon& lex,
    const FinetuneOptions& options = {});

// Writes train.jsonl and valid.jsonl with {sentence1, sentence2, label}.
void WriteFinetuneCorpus(const FinetuneCorpus& corpus,
                         const std::filesystem::path& dir);

}  // namespace egraph

#endif  // EGRAPH_FINETUNE_CORPUS_H_
