"""Stable exact serialization: canonical JSON and CSV with string scalars."""

from __future__ import annotations

import csv
import io
import json

from .fields import scalar_str


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def matrix_to_lists(m) -> list:
    return [[scalar_str(x) for x in row] for row in m]


def matrix_to_csv(m) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in m:
        w.writerow([scalar_str(x) for x in row])
    return buf.getvalue()


def mann_reps_to_json(reps, params) -> list:
    out = []
    for rep in reps:
        out.append(
            {
                "subset": list(rep.subset),
                "free_entries": [[i, k, v] for (i, k), v in rep.entries],
                "matrix": [[str(x) for x in row] for row in rep.matrix(params)],
            }
        )
    return out


def tuple_vector_to_json(vec) -> dict:
    entries = [
        {"m": list(m), "c": scalar_str(c)}
        for m, c in sorted(vec.coeffs.items())
    ]
    return {"n": vec.n, "M": vec.trunc, "entries": entries}
