"""Seeded property suites shared by the CLI and the acceptance tests."""

from __future__ import annotations

import json
import random
import time
from importlib import resources

from . import gf2e
from .codebuild import (
    ConstructionProfile,
    assemble_generators,
    cardinality_xi,
    gray_span,
    random_profile,
    submodule_sample_classify,
    to_rprime_form,
)
from .dualbuild import dual_cardinality_check, dual_generators, verify_orthogonality
from .f16poly import factor_xn_minus_1
from .rring import (
    RElem,
    RPoly,
    basis_rank,
    psi,
    psi_inv,
    r_mul,
    theta,
    theta_inv,
    twist_exponent,
)

EXPECTED_FACTORS = {
    3: ["x + 1", "x + w^5", "x + w^10"],
    5: ["x + 1", "x + w^3", "x + w^6", "x + w^9", "x + w^12"],
    7: ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"],
}


def _result(name: str, ok: bool, t0: float, **details) -> dict:
    return {"suite": name, "ok": bool(ok), "seconds": round(time.perf_counter() - t0, 3), **details}


def _rand_elem(k: int, rng: random.Random) -> RElem:
    return RElem(k, [rng.getrandbits(16) for _ in range(k)])


def _rand_poly(n: int, k: int, rng: random.Random) -> RPoly:
    return RPoly(n, k, [_rand_elem(k, rng) for _ in range(n)])


def load_profiles() -> list[tuple[str, ConstructionProfile]]:
    data = json.loads(resources.files("m4cyclic").joinpath("data/profiles.json").read_text())
    return [(p["name"], ConstructionProfile.from_json(p["profile"])) for p in data["profiles"]]


# ---------------------------------------------------------------------------


def factor_suite() -> dict:
    t0 = time.perf_counter()
    rows = {}
    for n, want in EXPECTED_FACTORS.items():
        got = [str(f) for f in factor_xn_minus_1(n).factors]
        rows[n] = {"got": got, "want": want, "ok": got == want}
    return _result("factor", all(r["ok"] for r in rows.values()), t0, rows=rows)


def core_suite(samples: int = 300, seed: int = 16) -> dict:
    """Field and ring axioms on random samples."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    fails: list[str] = []
    for a in range(1, 16):
        if gf2e.mul(a, gf2e.inv(a)) != 1:
            fails.append(f"inverse of {gf2e.fmt(a)}")
    for _ in range(samples):
        a, b, c = (rng.randrange(16) for _ in range(3))
        if gf2e.mul(a, b ^ c) != gf2e.mul(a, b) ^ gf2e.mul(a, c):
            fails.append(f"gf16 distributivity {a},{b},{c}")
    for n in (3, 5, 7, 9, 15):
        fs = factor_xn_minus_1(n)
        if str(fs.product()) != f"x^{n} + 1":
            fails.append(f"factor product n={n}")
    for k in (1, 2, 3):
        for _ in range(samples // 3):
            a, b, c = (_rand_elem(k, rng) for _ in range(3))
            if r_mul(r_mul(a, b), c) != r_mul(a, r_mul(b, c)):
                fails.append(f"associativity k={k}")
            if r_mul(a, b + c) != r_mul(a, b) + r_mul(a, c):
                fails.append(f"left distributivity k={k}")
            if r_mul(a + b, c) != r_mul(a, c) + r_mul(b, c):
                fails.append(f"right distributivity k={k}")
    return _result("core", not fails, t0, failures=fails[:10], failure_count=len(fails))


def iso_suite(samples: int = 1000, seed: int = 16, ks=(1, 2, 3, 4)) -> dict:
    """Basis rank, psi round-trip/additivity/multiplicativity and the twist exponent."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    per_k = {}
    for k in ks:
        rank = basis_rank(k)
        bad_rt = bad_add = bad_mul = 0
        for _ in range(samples):
            a, b = _rand_elem(k, rng), _rand_elem(k, rng)
            ma, mb = psi_inv(a), psi_inv(b)
            bad_rt += psi(ma) != a or psi_inv(psi(ma)) != ma
            bad_add += psi_inv(a + b) != ma + mb
            bad_mul += psi_inv(r_mul(a, b)) != ma * mb
        per_k[k] = {"basis_rank": rank, "expected_rank": 16 * k, "roundtrip_failures": bad_rt,
                    "additivity_failures": bad_add, "multiplicativity_failures": bad_mul,
                    "ok": rank == 16 * k and not (bad_rt or bad_add or bad_mul)}
    try:
        s = twist_exponent()
    except ArithmeticError:
        s = None
    ok = all(r["ok"] for r in per_k.values()) and s in (2, 4, 8)
    return _result("iso", ok, t0, samples=samples, per_k=per_k, twist_exponent=s)


def gray_suite(pairs: int = 10_000, seed: int = 16) -> dict:
    """theta bijective and right-linear; Lee distance equals Hamming distance of images."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    # k = 1 exhaustively
    images = set()
    inv_fail = 0
    for x in range(1 << 16):
        r = RElem(1, [x])
        img = tuple(theta(r))
        images.add(img)
        inv_fail += theta_inv(list(img), 1) != r
    bij_k1 = len(images) == 1 << 16 and not inv_fail
    inv_fail_k = 0
    lin_fail = 0
    for k in (2, 3, 4):
        for _ in range(500):
            a, b = _rand_elem(k, rng), _rand_elem(k, rng)
            ta = theta(a)
            inv_fail_k += theta_inv(ta, k) != a
            if theta(a + b) != [x ^ y for x, y in zip(ta, theta(b))]:
                lin_fail += 1
            c = rng.randrange(1, 16)
            if theta(r_mul(a, RElem.scalar(k, c))) != [gf2e.mul(c, x) for x in ta]:
                lin_fail += 1
    iso_fail = 0
    for i in range(pairs):
        n = 1 + (i % 3)
        k = 1 + (i // 3) % 4
        a, b = _rand_poly(n, k, rng), _rand_poly(n, k, rng)
        diff = a + b  # characteristic 2
        ga, gb = a.gray(), b.gray()
        if diff.lee_weight() != sum(1 for x, y in zip(ga, gb) if x != y):
            iso_fail += 1
    ok = bij_k1 and not inv_fail_k and not lin_fail and not iso_fail
    return _result("gray", ok, t0, bijective_k1=bij_k1, inverse_failures=inv_fail_k,
                   linearity_failures=lin_fail, isometry_pairs=pairs, isometry_failures=iso_fail)


def cardinality_suite(per_size: int = 50, seed: int = 16, sizes=((3, 1), (5, 1), (3, 2), (5, 2))) -> dict:
    """gray_span rank against the closed-form exponent and the decomposed-form count."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    rows = []
    for n, k in sizes:
        rank_ok = rp_ok = 0
        first_fail = None
        for _ in range(per_size):
            prof = random_profile(n, k, rng, unit_deg=None)
            xi = cardinality_xi(prof).xi
            rank = gray_span(assemble_generators(prof)).dim
            rp = to_rprime_form(prof).rprime_exponent
            rank_ok += rank == xi
            rp_ok += rp == xi
            if first_fail is None and (rank != xi or rp != xi):
                first_fail = {"profile": prof.to_json(), "rank": rank, "xi": xi, "rprime": rp}
        rows.append({"n": n, "k": k, "profiles": per_size, "rank_eq_xi": rank_ok,
                     "rprime_eq_xi": rp_ok, "first_failure": first_fail})
    ok = all(r["rank_eq_xi"] == r["profiles"] and r["rprime_eq_xi"] == r["profiles"] for r in rows)
    return _result("cardinality", ok, t0, rows=rows)


def _binary_factors(prof: ConstructionProfile) -> bool:
    return all(c in (0, 1) for f in prof.factors.factors for c in f.coeffs)


def duality_suite(per_size: int = 4, seed: int = 16, include_corpus: bool = True,
                  sizes=tuple((n, k) for n in (3, 5, 7) for k in (1, 2, 3))) -> dict:
    """Orthogonality, xi + eta = 4kn and Hermitian/Euclidean coincidence for binary factors."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    cases: list[tuple[str, ConstructionProfile]] = list(load_profiles()) if include_corpus else []
    for n, k in sizes:
        for i in range(per_size):
            cases.append((f"random-n{n}-k{k}-{i}", random_profile(n, k, rng)))
    rows = []
    for name, prof in cases:
        gens = assemble_generators(prof)
        dual = dual_generators(prof, "euclidean")
        orth = verify_orthogonality(gens, dual, "euclidean")
        card = dual_cardinality_check(prof)
        row = {"name": name, "n": prof.n, "k": prof.k, "violations": len(orth.violations),
               "first_violation": orth.violations[0] if orth.violations else None,
               "closed_form_ok": card["closed_form_ok"], "dim_sum_ok": card["sum_ok"],
               "dims": [card["dim_code"], card["dim_dual"]]}
        if _binary_factors(prof):
            herm = dual_generators(prof, "hermitian")
            row["hermitian_equals_euclidean"] = herm.gens == dual.gens
        rows.append(row)
    orth_ok = all(r["violations"] == 0 for r in rows)
    closed_ok = all(r["closed_form_ok"] for r in rows)
    herm_rows = [r for r in rows if "hermitian_equals_euclidean" in r]
    herm_ok = bool(herm_rows) and all(r["hermitian_equals_euclidean"] for r in herm_rows)
    return _result(
        "duality", orth_ok and closed_ok and herm_ok, t0,
        profiles=len(rows),
        orthogonal_profiles=sum(r["violations"] == 0 for r in rows),
        closed_form_ok=closed_ok,
        dim_sum_ok_profiles=sum(r["dim_sum_ok"] for r in rows),
        hermitian_checked=len(herm_rows),
        hermitian_ok=herm_ok,
        rows=rows,
    )


def submodule_suite(trials: int = 200, seed: int = 16) -> dict:
    t0 = time.perf_counter()
    reports = {k: submodule_sample_classify(k, trials, seed) for k in (1, 2)}
    return _result("submodule", all(r["ok"] for r in reports.values()), t0, per_k=reports)


SUITES = {
    "core": [core_suite, factor_suite],
    "iso": [iso_suite, gray_suite],
    "duality": [duality_suite],
    "cardinality": [cardinality_suite],
    "submodule": [submodule_suite],
}


def run(name: str) -> list[dict]:
    if name == "all":
        return [fn() for key in SUITES for fn in SUITES[key]]
    return [fn() for fn in SUITES[name]]
