# Copyright 2026 The judgekit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes golden-set fixture files that reproduce the reference case-study counts.

Both judges of a case share the same items and gold labels; only judge labels
differ. Run from this directory: python3 generate_fixtures.py
"""
import csv
import json

CASES = {
    "case1": {"positives": 83, "total": 1000,
               "judge_a": (63, 133, 784, 20), "judge_b": (47, 69, 848, 36)},
    "case2": {"positives": 200, "total": 1000,
               "judge_a": (50, 20, 780, 150), "judge_b": (40, 0, 800, 160)},
}


def records(positives, total, counts):
    tp, fp, tn, fn = counts
    assert tp + fn == positives and fp + tn == total - positives
    out = []
    for i in range(total):
        gold = "violation" if i < positives else "safe"
        if i < positives:
            judge = "violation" if i < tp else "safe"
        else:
            judge = "violation" if i - positives < fp else "safe"
        out.append({"id": f"item-{i:04d}", "gold_label": gold, "judge_label": judge})
    return out


for case, spec in CASES.items():
    for judge in ("judge_a", "judge_b"):
        rows = records(spec["positives"], spec["total"], spec[judge])
        with open(f"{case}_{judge}.jsonl", "w") as f:
            for r in rows:
                f.write(json.dumps(r) + "\n")
        if case == "case1":
            with open(f"{case}_{judge}.csv", "w", newline="") as f:
                w = csv.DictWriter(f, fieldnames=["id", "gold_label", "judge_label"])
                w.writeheader()
                w.writerows(rows)
