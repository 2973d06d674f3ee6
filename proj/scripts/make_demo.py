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

"""Writes the small demo corpus under data/demo/.

triples.jsonl  extracted triples over two type pairs
dev.jsonl      labelled predicate pairs for evaluation
"""

import argparse
import json
import os
import random

WORLDS = {
    ("person", "location"): {
        "preds": ["(visit.1,visit.2,person,location)",
                  "(go.1,go.to.2,person,location)",
                  "(live.1,live.in.2,person,location)",
                  "(reside.1,reside.in.2,person,location)",
                  "(leave.1,leave.2,person,location)",
                  "(return.1,return.to.2,person,location)",
                  "(bear.2,bear.in.2,person,location)"],
        "entities": (["ada", "bo", "cy", "dee", "eli", "fay", "gus", "hal"],
                     ["paris", "rome", "oslo", "lima", "kyiv", "quito"]),
        "gold": [(1, 0), (3, 2), (2, 0), (5, 0), (6, 2), (0, 1), (2, 3)],
    },
    ("medicine", "disease"): {
        "preds": ["(cure.1,cure.2,medicine,disease)",
                  "(treat.1,treat.2,medicine,disease)",
                  "(prevent.1,prevent.2,medicine,disease)",
                  "(relieve.1,relieve.2,medicine,disease)",
                  "(cause.1,cause.2,medicine,disease)",
                  "(prefer.2,prefer.for.2,medicine,disease)"],
        "entities": (["aspirin", "statin", "insulin", "quinine", "codeine"],
                     ["flu", "malaria", "gout", "asthma", "migraine"]),
        "gold": [(0, 1), (2, 1), (3, 1), (5, 1), (0, 3)],
    },
}


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("--out", default=os.path.join(
      os.path.dirname(__file__), "..", "data", "demo"))
  parser.add_argument("--seed", type=int, default=7)
  args = parser.parse_args()
  rng = random.Random(args.seed)

  triples = []
  dev = []
  for world in WORLDS.values():
    preds = world["preds"]
    firsts, seconds = world["entities"]
    for a in firsts:
      for b in seconds:
        if rng.random() < 0.5:
          continue
        chosen = rng.sample(preds, rng.randint(3, len(preds)))
        for p in chosen:
          row = {"pred": p, "arg1": a, "arg2": b}
          if rng.random() < 0.2:
            row["count"] = rng.randint(2, 4)
          triples.append(row)
    gold = set(world["gold"])
    for i, p in enumerate(preds):
      for j, q in enumerate(preds):
        if i != j:
          dev.append({"premise_pred": p, "hypothesis_pred": q,
                      "label": (i, j) in gold})

  os.makedirs(args.out, exist_ok=True)
  with open(os.path.join(args.out, "triples.jsonl"), "w") as f:
    for row in triples:
      f.write(json.dumps(row) + "\n")
  with open(os.path.join(args.out, "dev.jsonl"), "w") as f:
    for row in dev:
      f.write(json.dumps(row) + "\n")


if __name__ == "__main__":
  main()
