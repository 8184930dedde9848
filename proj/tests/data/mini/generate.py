#!/usr/bin/env python3

# tests/data/mini/generate.py

# Copyright 2026  The disfleval Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http:#www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.

# Regenerates the mini corpus. Output is deterministic.

import json
import math
import os
import random

HOP, WIN = 0.020, 0.025
LEAD = 0.05
STEP, LEN = 0.30, 0.25

# (segment_id, [(text, role, region_id)])
SEGMENTS = [
    ("sw01", [("And", "o", None), ("um", "o", None), ("I", "o", None),
              ("think", "o", None), ("one", "o", None), ("thing", "o", None)]),
    ("sw02", [("H-", "e", "r1"), ("how", "c", "r1"), ("do", "o", None),
              ("you", "o", None), ("feel", "o", None), ("about", "o", None),
              ("that?", "o", None)]),
    ("sw03", [("well", "o", None), ("with", "e", "r1"), ("my", "e", "r1"),
              ("with", "c", "r1"), ("my", "c", "r1"),
              ("grandmother", "o", None)]),
    ("sw04", [("And", "o", None), ("uh", "o", None), ("we", "e", "r1"),
              ("were", "e", "r1"), ("I", "c", "r1"), ("was", "c", "r1"),
              ("fortunate", "o", None)]),
    ("sw05", [("If", "e", "r1"), ("you", "e", "r1"), ("how", "o", None),
              ("long", "o", None), ("do", "o", None), ("you", "o", None),
              ("want", "o", None), ("to", "o", None), ("stay?", "o", None)]),
    ("sw06", [("i", "e", "r1"), ("uh", "o", None), ("i", "c", "r1"),
              ("went", "o", None), ("to", "e", "r2"), ("to", "c", "r2"),
              ("the", "o", None), ("store.", "o", None)]),
    ("sw07", [("th-", "e", None), ("the", "c", None), ("point", "o", None),
              ("is", "o", None), ("umm", "o", None), ("fine,", "o", None)]),
    ("sw08", [("that", "o", None), ("sounds", "o", None),
              ("good", "o", None)]),
]

ROLE = {"o": "outside", "e": "error", "c": "correction"}

HYPS = {
    "sw01": "and i think one thing",
    "sw02": "how how do you feel about that",
    "sw03": "well with my with my grandmother",
    "sw04": "and i was fortunate",
    "sw05": "if you how long you want to stay",
    "sw06": "i uh i went to the store",
    "sw07": "the the point is um fine",
    # sw08 deliberately missing
}


def times(k):
    s = round(LEAD + k * STEP, 6)
    return s, round(s + LEN, 6)


def duration(n):
    return round(LEAD + n * STEP + LEAD, 6)


def nframes(d):
    if d < WIN:
        return 1
    return max(1, math.floor((d - WIN) / HOP + 1e-9) + 1)


def write_jsonl(path, records):
    with open(path, "w") as f:
        for r in records:
            f.write(json.dumps(r) + "\n")


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    rng = random.Random(20261015)

    ref = []
    for sid, words in SEGMENTS:
        out = []
        for k, (text, role, rid) in enumerate(words):
            s, e = times(k)
            w = {"text": text, "start_s": s, "end_s": e, "role": ROLE[role]}
            if rid is not None:
                w["region_id"] = rid
            out.append(w)
        ref.append({"segment_id": sid, "duration_s": duration(len(words)),
                    "words": out})
    write_jsonl(os.path.join(here, "ref.jsonl"), ref)

    hyp = []
    for sid, text in HYPS.items():
        toks = text.split()
        ws = []
        for k, t in enumerate(toks):
            s, e = times(k)
            ws.append({"text": t, "start_s": s, "end_s": e})
        hyp.append({"segment_id": sid, "words": ws})
    write_jsonl(os.path.join(here, "hyp.jsonl"), hyp)

    # Three systems: word-level rules, frame-level noisy, frame-level sparse.
    fp_words = {"um", "uh", "umm"}
    sys_a = []
    for sid, text in HYPS.items():
        ws = []
        for k, t in enumerate(text.split()):
            s, e = times(k)
            flags = [int(t in fp_words), 0, 0, 0, 0]
            if k + 1 < len(text.split()) and text.split()[k + 1] == t:
                flags[2] = 1
            ws.append({"text": t, "start_s": s, "end_s": e, "flags": flags})
        sys_a.append({"segment_id": sid, "words": ws})
    write_jsonl(os.path.join(here, "pred_a.jsonl"), sys_a)

    for name, p in (("pred_b.jsonl", 0.08), ("pred_c.jsonl", 0.02)):
        recs = []
        for sid, words in SEGMENTS:
            n = nframes(duration(len(words)))
            frames = [[int(rng.random() < p) for _ in range(5)]
                      for _ in range(n)]
            recs.append({"segment_id": sid, "frames": frames})
        write_jsonl(os.path.join(here, name), recs)

    # Word vectors and frame features for sw04, dim 4.
    words = SEGMENTS[3][1]
    wv = []
    for k, (text, _, _) in enumerate(words):
        s, e = times(k)
        wv.append({"text": text, "start_s": s, "end_s": e,
                   "vec": [round(rng.uniform(-1, 1), 4) for _ in range(4)]})
    write_jsonl(os.path.join(here, "words.jsonl"), wv)
    n = nframes(duration(len(words)))
    with open(os.path.join(here, "frames.txt"), "w") as f:
        f.write("dim=4 nframes=%d\n" % n)
        for _ in range(n):
            f.write(" ".join("%.4f" % rng.uniform(-1, 1) for _ in range(4))
                    + "\n")


if __name__ == "__main__":
    main()
