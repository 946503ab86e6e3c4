"""Build the bundled example rows and compare them with their recorded parameters."""

from __future__ import annotations

import json
import time
from importlib import resources

from . import genexpr
from .codebuild import gray_span
from .f16poly import factor_xn_minus_1
from .metrics import d_mds, min_distance_certified


def load_examples() -> dict[str, list[dict]]:
    data = json.loads(resources.files("m4cyclic").joinpath("data/examples.json").read_text())
    return data["examples"]


def build_row(n: int, k: int, generators: list[str], seed: int = 16, d_hint: int | None = None) -> dict:
    t0 = time.perf_counter()
    fs = factor_xn_minus_1(n)
    gens = [genexpr.parse(g, fs, k) for g in generators]
    code = gray_span(gens, n, k, provenance="; ".join(generators))
    dist = min_distance_certified(code, d_hint, seed)
    params = [code.length, code.dim, dist.d]
    return {
        "n": n,
        "k": k,
        "generators": generators,
        "params": params,
        "d_mds": d_mds(code.length, code.dim),
        "distance": dist.to_json(),
        "seconds": round(time.perf_counter() - t0, 3),
    }


def verdict(got: dict, expected: list[int], expected_mds: int) -> dict:
    diff = {}
    for name, g, e in zip(("length", "dim", "d"), got["params"], expected):
        if g != e:
            diff[name] = {"got": g, "expected": e}
    if got["d_mds"] != expected_mds:
        diff["d_mds"] = {"got": got["d_mds"], "expected": expected_mds}
    return {"verdict": "MATCH" if not diff else "MISMATCH", "diff": diff}


def run_example(eid: str, seed: int = 16) -> list[dict]:
    rows = load_examples()[str(eid)]
    out = []
    for i, row in enumerate(rows, 1):
        got = build_row(row["n"], row["k"], row["generators"], seed, row["expected"][2])
        rep = {"example": str(eid), "row": i, **got, "expected": row["expected"],
               "expected_d_mds": row["d_mds"], **verdict(got, row["expected"], row["d_mds"])}
        if "reference" in row:
            rep["reference"] = row["reference"]
        out.append(rep)
    return out


def run_all(seed: int = 16) -> list[dict]:
    return [r for eid in load_examples() for r in run_example(eid, seed)]
