"""Euclidean and Hermitian duals of profile-built codes, with orthogonality and
size checks."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .codebuild import (
    CardinalitySummary,
    ConstructionProfile,
    GeneratorSet,
    LinearCodeF16,
    assemble_generators,
    cardinality_xi,
    class_count,
    gray_span,
    spanning_words,
)
from .f16poly import F16Poly, gcd, poly_conj, reciprocal
from .rring import TO_MAT, RElem, RPoly, r_conj

FLAVORS = ("euclidean", "hermitian")


def dual_heads(c: int, k: int) -> list[tuple[int, int]]:
    """Monomials u^a v^b heading the dual generators of class c (u^a with a >= k vanish)."""
    if c == 0:
        return [(0, 0)]
    if c == 1:
        return []
    if 2 <= c <= k:
        return [(k - (c - 1), 0)]
    for band, vpow in ((1, 3), (2, 2), (3, 1)):
        lo = band * k + 1
        if lo <= c <= lo + k - 1:
            i = c - lo + 1
            return [(0, vpow), (k - (i - 1), 0)]
    if 4 * k + 1 <= c <= 5 * k - 1:
        return [(k - (c - 4 * k), 3)]
    if c == 5 * k:
        return [(k - 1, 3)]
    if 5 * k + 1 <= c <= 5 * k + 3:
        return [(0, 4 - (c - 5 * k)), (k - 1, 0)]
    raise ValueError(f"class {c} out of range")


def star_hat(prof: ConstructionProfile, c: int, flavor: str = "euclidean") -> F16Poly:
    h = prof.P_hat(c)
    if flavor == "hermitian":
        h = poly_conj(h)
    elif flavor != "euclidean":
        raise ValueError(f"unknown flavor {flavor!r}")
    return reciprocal(h, monic=True)


def _dual_terms(prof: ConstructionProfile, flavor: str):
    n, k = prof.n, prof.k
    for c in range(class_count(k)):
        if prof.P(c).deg == 0:
            continue
        if k == 1 and c > 4:
            continue
        h = star_hat(prof, c, flavor)
        for a, b in dual_heads(c, k):
            if a >= k or b >= 4:
                continue
            yield c, (a, b), h


def dual_generators(prof: ConstructionProfile, flavor: str = "euclidean") -> GeneratorSet:
    prof.validate()
    n, k = prof.n, prof.k
    gens, labels = [], []
    for c, (a, b), h in _dual_terms(prof, flavor):
        head = RPoly.constant(n, RElem.monomial(k, a, b))
        g = head * RPoly.from_f16poly(h, n, k)
        if g.is_zero():
            continue
        gens.append(g)
        labels.append(f"class {c}: u^{a} v^{b} * {h}")
    return GeneratorSet(n, k, gens, labels)


def euclidean_dual_generators(prof: ConstructionProfile) -> GeneratorSet:
    return dual_generators(prof, "euclidean")


def hermitian_dual_generators(prof: ConstructionProfile) -> GeneratorSet:
    return dual_generators(prof, "hermitian")


# ---------------------------------------------------------------------------
# orthogonality


def _word_bits(p: RPoly) -> int:
    out = 0
    shift = 0
    for c in p.coeffs:
        for x in c.layers:
            out |= TO_MAT[x] << shift
            shift += 16
    return out


def _independent_family(gs: GeneratorSet, with_scalars: bool = True):
    """A GF(2)-independent subset of the spanning family, with family keys."""
    rows: dict[int, int] = {}
    picked = []
    for gi, g in enumerate(gs.gens):
        for key, w in spanning_words(g, with_scalars):
            v = _word_bits(w)
            while v:
                top = v.bit_length() - 1
                r = rows.get(top)
                if r is None:
                    rows[top] = v
                    picked.append(((gi,) + key, w))
                    break
                v ^= r
    return picked


def _to_tensor(words: list[RPoly]) -> np.ndarray:
    """(N, n, k, 4, 4) bit array of the matrix forms."""
    if not words:
        return np.zeros((0, 0, 0, 4, 4), dtype=np.uint8)
    n, k = words[0].n, words[0].k
    out = np.zeros((len(words), n, k, 4, 4), dtype=np.uint8)
    shifts = np.arange(16).reshape(4, 4)
    for a, w in enumerate(words):
        for j, c in enumerate(w.coeffs):
            for i, x in enumerate(c.layers):
                out[a, j, i] = (TO_MAT[x] >> shifts) & 1
    return out


def _pair_products(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """sum_j A[a, j] * B[b, j] in M_4(F_2[u]/u^k); returns (Na, Nb, k, 4, 4) bits."""
    Na, n, k = A.shape[:3]
    Nb = B.shape[0]
    out = np.zeros((Na, Nb, k, 4, 4), dtype=np.int64)
    for i1 in range(k):
        # (a, r, j, m) x (j, m, b, c)
        left = A[:, :, i1].transpose(0, 2, 1, 3).reshape(Na * 4, n * 4).astype(np.float32)
        for i2 in range(k - i1):
            right = B[:, :, i2].transpose(1, 2, 0, 3).reshape(n * 4, Nb * 4).astype(np.float32)
            prod = (left @ right).astype(np.int64).reshape(Na, 4, Nb, 4).transpose(0, 2, 1, 3)
            out[:, :, i1 + i2] += prod
    return (out & 1).astype(np.uint8)


def _bits_to_relem(m: np.ndarray) -> RElem:
    from .rring import FROM_MAT

    k = m.shape[0]
    layers = []
    weights = (1 << np.arange(16)).reshape(4, 4)
    for i in range(k):
        layers.append(FROM_MAT[int((m[i].astype(np.int64) * weights).sum())])
    return RElem(k, layers)


@dataclass
class OrthogonalityReport:
    flavor: str
    conj_mode: str
    pairs_checked: int
    violations: list[dict]
    family_sizes: tuple[int, int]
    sufficient: bool  # True when the pairing is bilinear, so the family check covers the codes

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "conj_mode": self.conj_mode,
            "pairs_checked": self.pairs_checked,
            "family_sizes": list(self.family_sizes),
            "bilinear_cover": self.sufficient,
            "violations": self.violations,
            "ok": self.ok,
        }


def verify_orthogonality(c: GeneratorSet, d: GeneratorSet, flavor: str = "euclidean",
                         conj_mode: str = "coeff", max_report: int = 5) -> OrthogonalityReport:
    """Check <a, b> = 0 over GF(2)-spanning subsets of the right-module families of c and d."""
    if (c.n, c.k) != (d.n, d.k):
        raise ValueError(f"dimension mismatch: {(c.n, c.k)} vs {(d.n, d.k)}")
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    fa = _independent_family(c)
    fb = _independent_family(d)
    bwords = [w for _, w in fb]
    if flavor == "hermitian":
        bwords = [w.map(lambda r: r_conj(r, conj_mode)) for w in bwords]
    viol: list[dict] = []
    total = len(fa) * len(fb)
    if fa and fb:
        A = _to_tensor([w for _, w in fa])
        B = _to_tensor(bwords)
        P = _pair_products(A, B)
        bad = np.argwhere(P.reshape(len(fa), len(fb), -1).any(axis=2))
        for a, b in bad[:max_report]:
            viol.append({
                "c_word": _key_json(fa[a][0]),
                "d_word": _key_json(fb[b][0]),
                "inner_product": str(_bits_to_relem(P[a, b])),
            })
        if len(bad) > max_report:
            viol.append({"more": int(len(bad) - max_report)})
    sufficient = flavor == "euclidean" or conj_mode == "coeff"
    return OrthogonalityReport(flavor, conj_mode, total, viol, (len(fa), len(fb)), sufficient)


def _key_json(key) -> dict:
    g, t, i, j, l = key
    return {"generator": g, "x": t, "u": i, "v": j, "w": l}


# ---------------------------------------------------------------------------
# sizes


def dual_cardinality_check(prof: ConstructionProfile, flavor: str = "euclidean") -> dict:
    n, k = prof.n, prof.k
    card = cardinality_xi(prof)
    c_code = gray_span(assemble_generators(prof))
    d_code = gray_span(dual_generators(prof, flavor))
    return {
        "flavor": flavor,
        "xi": card.xi,
        "eta": card.eta,
        "dim_code": c_code.dim,
        "dim_dual": d_code.dim,
        "total": c_code.dim + d_code.dim,
        "expected_total": 4 * k * n,
        "sum_ok": c_code.dim + d_code.dim == 4 * k * n,
        "eta_ok": d_code.dim == card.eta,
        "closed_form_ok": card.xi + card.eta == 4 * k * n,
    }


def dual_to_rprime_form(prof: ConstructionProfile, flavor: str = "euclidean") -> CardinalitySummary:
    """Monomial-position form of the dual: A*_pos is the gcd of the dual hats covering u^i v^j."""
    n, k = prof.n, prof.k
    xn1 = F16Poly.xn_minus_1(n)
    terms = list(_dual_terms(prof, flavor))
    A: list[F16Poly] = []
    for j in range(4):
        for i in range(k):
            g = xn1
            for _, (a, b), h in terms:
                if i >= a and j >= b:
                    g = gcd(g, h)
            A.append(g)
    A += [xn1] * (k - 1 + 4)
    degA = [a.deg for a in A]
    card = cardinality_xi(prof)
    return CardinalitySummary(card.xi, card.eta, degA, A, (5 * k + 3) * n - sum(degA))


def dual_report(prof: ConstructionProfile, flavor: str = "euclidean", conj_mode: str = "coeff") -> dict:
    gens = assemble_generators(prof)
    dual = dual_generators(prof, flavor)
    orth = verify_orthogonality(gens, dual, flavor, conj_mode)
    card = dual_cardinality_check(prof, flavor)
    rp = dual_to_rprime_form(prof, flavor)
    return {
        "profile": prof.to_json(),
        "flavor": flavor,
        "conj_mode": conj_mode,
        "dual_generators": dual.labels,
        "dims": {"code": card["dim_code"], "dual": card["dim_dual"], "length": 4 * prof.k * prof.n},
        "xi": card["xi"],
        "eta": card["eta"],
        "sum_ok": card["sum_ok"],
        "eta_ok": card["eta_ok"],
        "dual_rprime_exponent": rp.rprime_exponent,
        "violations": orth.violations,
        "orthogonality": orth.to_json(),
    }


def image_dual(code: LinearCodeF16) -> LinearCodeF16:
    """Plain GF(16) dual of a Gray image (not the ring dual)."""
    from .codebuild import code_from_rows

    return code_from_rows(code.parity_check(), code.length, "image-level nullspace")


if __name__ == "__main__":  # pragma: no cover
    import sys

    print(json.dumps(dual_report(ConstructionProfile.from_json(sys.argv[1])), indent=2))
