#!/usr/bin/env python3
# Copyright 2026 The egraph Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/verbs.txt and data/participles.tsv.

Requires `pip install lemminflect wordfreq`. Verb lemmas are taken from the
lemminflect inflection table and kept when their Zipf frequency is at least
--min-zipf. Participles are only written when they differ from the default
rule applied by the sentence generator.
"""

import argparse
import csv
import gzip
import os
import re

import lemminflect
from wordfreq import zipf_frequency

VOWELS = set("aeiou")


def default_participle(lemma):
    if lemma.endswith("e"):
        return lemma + "d"
    if len(lemma) > 1 and lemma.endswith("y") and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ied"
    return lemma + "ed"


def verb_lemmas():
    path = os.path.join(os.path.dirname(lemminflect.__file__), "resources",
                        "infl_lu.csv.gz")
    with gzip.open(path, "rt") as f:
        for row in csv.reader(f):
            if len(row) > 1 and row[1] == "verb":
                yield row[0]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--min-zipf", type=float, default=3.0)
    parser.add_argument("--out", default=os.path.join(
        os.path.dirname(__file__), "..", "data"))
    args = parser.parse_args()

    word = re.compile(r"^[a-z]+$")
    verbs = sorted({v for v in verb_lemmas()
                    if word.match(v) and zipf_frequency(v, "en") >= args.min_zipf})
    # Copula forms are always verbs.
    verbs = sorted(set(verbs) | {"be", "is"})

    overrides = []
    for v in verbs:
        if v in ("be", "is"):
            continue
        forms = lemminflect.getInflection(v, tag="VBN")
        if not forms:
            continue
        participle = forms[0]
        if participle != default_participle(v):
            overrides.append((v, participle))

    with open(os.path.join(args.out, "verbs.txt"), "w") as f:
        for v in verbs:
            f.write(v + "\n")
    with open(os.path.join(args.out, "participles.tsv"), "w") as f:
        for v, p in overrides:
            f.write(f"{v}\t{p}\n")
    print(f"{len(verbs)} verbs, {len(overrides)} participle overrides")


if __name__ == "__main__":
    main()
