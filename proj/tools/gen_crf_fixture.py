#!/usr/bin/env python3
# Copyright 2026 The fairify Authors
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

"""Regenerates fixtures/crf/crf.csv, a synthetic case-report-form dataset.

The values are random but seeded, so the file is reproducible. The script also
prints the triple counts a correct mapping run must report for this file,
computed straight from the generated rows.
"""
import csv
import datetime
import io
import random
import sys
from pathlib import Path

ROWS = 200
OUT = Path(__file__).resolve().parent.parent / "fixtures" / "crf" / "crf.csv"

OUTCOMES = ["discharged", "death", "transfer", "hospitalized"]
NOTES = ["", "", "", "fever on admission", "cough, \"dry\"", "dyspnoea\nimproving",
         "no comorbidities", "", "oxygen therapy"]


def main():
    rng = random.Random(2021)
    rows = []
    for i in range(1, ROWS + 1):
        admitted = datetime.date(2020, 4, 1) + datetime.timedelta(days=rng.randrange(300))
        age = str(rng.randrange(18, 95))
        if rng.random() < 0.05:
            age = ""
        elif rng.random() < 0.02:
            age = "unknown"  # ingest records a row error and nulls the cell
        elif rng.random() < 0.1:
            age = "0" + age
        sex = rng.choice(["F", "M", "F", "M", "U"])
        fever = rng.choice(["true", "false", "1", "0", ""])
        icu = rng.choice(["true", "false", "false", ""])
        crp = rng.choice(["NA", "", f"{rng.uniform(0.5, 300):.2f}", f"{rng.uniform(0.5, 300):.1f}0"])
        outcome = rng.choice(OUTCOMES + [""])
        outcome_date = ""
        if outcome and outcome != "hospitalized":
            outcome_date = (admitted + datetime.timedelta(days=rng.randrange(1, 40))).isoformat()
        notes = rng.choice(NOTES)
        site = rng.choice(["RJ-01", "RJ-02", "SP-07"])
        rows.append([f"VBR-{i:04d}", admitted.isoformat(), age, sex, fever, icu, crp,
                     outcome, outcome_date, notes, site])

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["patient_id", "admission_date", "age", "sex", "fever", "icu_admission",
                "crp_mg_l", "outcome", "outcome_date", "notes", "site"])
    w.writerows(rows)
    OUT.write_text(buf.getvalue(), encoding="utf-8")

    # Counting law for fixtures/crf/mapping.json: one class triple per row,
    # one triple per non-null, well-typed data cell, one per mapped object cell.
    def int_ok(s):
        return s.lstrip("+-").isdigit()
    data_cols = {
        "admission_date": lambda r: r[1] != "",
        "age": lambda r: r[2] != "" and int_ok(r[2]),
        "fever": lambda r: r[4] != "",
        "icu_admission": lambda r: r[5] != "",
        "crp_mg_l": lambda r: r[6] not in ("", "NA"),
        "outcome_date": lambda r: r[8] != "",
        "notes": lambda r: r[9] != "",
    }
    data = sum(1 for r in rows for ok in data_cols.values() if ok(r))
    nulls = sum(1 for r in rows for ok in data_cols.values() if not ok(r))
    sex_mapped = sum(1 for r in rows if r[3] in ("F", "M"))
    sex_unmapped = sum(1 for r in rows if r[3] == "U")
    outcome_mapped = sum(1 for r in rows if r[7] != "")
    outcome_null = sum(1 for r in rows if r[7] == "")
    discharged = sum(1 for r in rows if r[7] == "discharged")
    row_errors = sum(1 for r in rows if r[2] == "unknown")
    print(f"rows_in={ROWS}")
    print(f"triples_out={ROWS + data + sex_mapped + outcome_mapped}")
    print(f"skipped_nulls={nulls + outcome_null}")
    print(f"skipped_unmapped={sex_unmapped}")
    print(f"row_errors={row_errors}")
    print(f"discharged={discharged}")


if __name__ == "__main__":
    sys.exit(main())
