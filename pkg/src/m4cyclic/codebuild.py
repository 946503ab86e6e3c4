"""Cyclic codes over R: class profiles, generator assembly, Gray-image spans and
closed-form cardinalities."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import gf2e, linalg16
from .f16poly import F16Poly, FactorSet, factor_xn_minus_1, gcd, hat, is_unit_mod, parse_poly
from .rring import RElem, RPoly, TO_MAT, r_mul

# ---------------------------------------------------------------------------
# profiles


def class_count(k: int) -> int:
    """Number of classes including the unused class 0."""
    return 5 * k + 4


def class_label(c: int, k: int) -> str:
    if c == 0:
        return "unused"
    for band, head in enumerate(["", "v", "v^2", "v^3"]):
        lo = band * k + 1
        if lo <= c <= lo + k - 1:
            i = c - lo + 1
            u = "" if i == 1 else ("u" if i == 2 else f"u^{i - 1}")
            return "*".join(x for x in (u, head) if x) or "1"
    if 4 * k + 1 <= c <= 5 * k - 1:
        return f"beta[{c - 4 * k}]"
    if 5 * k <= c <= 5 * k + 3:
        return f"alpha[{c - 5 * k}]"
    raise ValueError(f"class {c} out of range for k={k}")


def _key2(s) -> tuple[int, int]:
    if isinstance(s, (tuple, list)):
        return int(s[0]), int(s[1])
    s = str(s)
    if "," in s:
        a, b = s.split(",")
        return int(a), int(b)
    if len(s) == 2:
        return int(s[0]), int(s[1])
    raise ValueError(f"ambiguous index key {s!r}; use 'a,b'")


@dataclass
class ConstructionProfile:
    n: int
    k: int
    class_of: dict[int, int]  # factor index (1-based) -> class
    betas: dict[tuple[int, int], F16Poly] = field(default_factory=dict)  # (m, i)
    alphas: dict[tuple[int, int], F16Poly] = field(default_factory=dict)  # (j, l)
    seed: int = 16

    @property
    def factors(self) -> FactorSet:
        return factor_xn_minus_1(self.n, self.seed)

    def members(self, c: int) -> list[int]:
        m = len(self.factors)
        return [f for f in range(1, m + 1) if self.class_of.get(f, 0) == c]

    def P(self, c: int) -> F16Poly:
        out = F16Poly([1])
        for f in self.members(c):
            out = out * self.factors[f - 1]
        return out

    def P_hat(self, c: int) -> F16Poly:
        return hat(self.P(c), self.n)

    def degrees(self) -> list[int]:
        return [self.P(c).deg for c in range(class_count(self.k))]

    def populated(self) -> list[int]:
        return sorted({c for c in (self.class_of.get(f, 0) for f in range(1, len(self.factors) + 1)) if c})

    def beta(self, m: int, i: int) -> F16Poly:
        return self.betas.get((m, i), F16Poly([1]))

    def alpha(self, j: int, l: int) -> F16Poly:
        if (j, l) == (1, 1):
            return F16Poly()
        if (j, l) == (1, 2):
            return F16Poly([1])
        return self.alphas.get((j, l), F16Poly([1]))

    def validate(self) -> None:
        n, k = self.n, self.k
        m = len(self.factors)
        for f, c in self.class_of.items():
            if not 1 <= f <= m:
                raise ValueError(f"factor index {f} out of range 1..{m}")
            if not 0 <= c < class_count(k):
                raise ValueError(f"class {c} out of range 0..{class_count(k) - 1}")
            if k == 1 and c > 4:
                raise ValueError(
                    f"class {c} is u-headed and vanishes when k=1; only classes 0..4 are allowed"
                )
        for (j, l), a in self.alphas.items():
            if (j, l) == (1, 1) and not a.is_zero():
                raise ValueError("alpha_11 is fixed to 0")
            if (j, l) == (1, 2) and a != F16Poly([1]):
                raise ValueError("alpha_12 is fixed to 1")
            if (j, l) not in ((1, 1), (1, 2)) and not is_unit_mod(a, n):
                raise ValueError(f"alpha_{j}{l} = {a} is not a unit modulo x^{n} - 1")
        for (mm, i), b in self.betas.items():
            if not is_unit_mod(b, n):
                raise ValueError(f"beta_{mm}{i} = {b} is not a unit modulo x^{n} - 1")

    # serialisation --------------------------------------------------------
    def to_json(self) -> dict:
        classes: dict[str, list[int]] = {}
        for f, c in sorted(self.class_of.items()):
            if c:
                classes.setdefault(str(c), []).append(f)
        return {
            "n": self.n,
            "k": self.k,
            "classes": classes,
            "alphas": {f"{j},{l}": str(p) for (j, l), p in sorted(self.alphas.items())},
            "betas": {f"{m},{i}": str(p) for (m, i), p in sorted(self.betas.items())},
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data) -> "ConstructionProfile":
        if isinstance(data, (str, Path)):
            data = json.loads(Path(data).read_text())
        class_of: dict[int, int] = {}
        for c, fs in data.get("classes", {}).items():
            for f in fs:
                if int(f) in class_of:
                    raise ValueError(f"factor {f} assigned to two classes")
                class_of[int(f)] = int(c)
        prof = cls(
            n=int(data["n"]),
            k=int(data["k"]),
            class_of=class_of,
            betas={_key2(key): parse_poly(v) for key, v in data.get("betas", {}).items()},
            alphas={_key2(key): parse_poly(v) for key, v in data.get("alphas", {}).items()},
            seed=int(data.get("seed", 16)),
        )
        prof.validate()
        return prof


def random_unit(n: int, rng: random.Random, max_deg: int | None = None) -> F16Poly:
    d = n - 1 if max_deg is None else max_deg
    while True:
        p = F16Poly(rng.randrange(16) for _ in range(d + 1))
        if not p.is_zero() and is_unit_mod(p, n):
            return p


def random_profile(n: int, k: int, rng: random.Random, classes: Sequence[int] | None = None,
                   unit_deg: int | None = 0) -> ConstructionProfile:
    """Random class assignment and unit data; unit_deg=None draws units of degree < n."""
    m = len(factor_xn_minus_1(n))
    pool = list(classes) if classes is not None else list(range(5 if k == 1 else class_count(k)))
    class_of = {f: rng.choice(pool) for f in range(1, m + 1)}
    betas = {(mm, i): random_unit(n, rng, unit_deg) for mm in (1, 2, 3) for i in range(1, k)}
    alphas = {}
    for l in range(3, k + 1):
        alphas[(1, l)] = random_unit(n, rng, unit_deg)
    for j in (2, 3, 4):
        for l in range(1, k + 1):
            alphas[(j, l)] = random_unit(n, rng, unit_deg)
    prof = ConstructionProfile(n, k, class_of, betas, alphas)
    prof.validate()
    return prof


# ---------------------------------------------------------------------------
# generators


def _mono(n: int, k: int, i: int, j: int) -> RPoly:
    return RPoly.constant(n, RElem.monomial(k, i, j))


def _lift(p: F16Poly, n: int, k: int) -> RPoly:
    return RPoly.from_f16poly(p, n, k)


def _u_series(prof: ConstructionProfile, j: int, l_lo: int, l_hi: int) -> RPoly:
    """sum_{l=l_lo}^{l_hi} u^{l-1} alpha_{jl}."""
    n, k = prof.n, prof.k
    out = RPoly.zero(n, k)
    for l in range(l_lo, l_hi + 1):
        a = prof.alpha(j, l)
        if not a.is_zero():
            out = out + _mono(n, k, l - 1, 0) * _lift(a, n, k)
    return out


def class_head(prof: ConstructionProfile, c: int) -> RPoly | None:
    """The R_n element multiplying the class hat, in displayed order."""
    n, k = prof.n, prof.k
    if c == 0:
        return None
    if 1 <= c <= 4 * k:
        band, i = divmod(c - 1, k)
        return _mono(n, k, i, band)
    if 4 * k + 1 <= c <= 5 * k - 1:
        i = c - 4 * k
        out = _mono(n, k, i, 0)
        for mm in (1, 2, 3):
            out = out + _mono(n, k, 0, mm) * _lift(prof.beta(mm, i), n, k)
        return out
    # the alpha classes; the leading u is the alpha_12 = 1 term
    u_full = _u_series(prof, 1, 2, k)
    tail = c - 5 * k
    if tail == 0:
        out = u_full
        for i in (1, 2, 3):
            out = out + _mono(n, k, 0, i) * _u_series(prof, i + 1, 1, k)
        return out
    if tail == 1:
        out = _mono(n, k, 0, 1) * u_full
        for i in (2, 3):
            out = out + _mono(n, k, 0, i) * _u_series(prof, i, 1, k)
        return out
    if tail == 2:
        return _mono(n, k, 0, 2) * u_full + _mono(n, k, 0, 3) * _u_series(prof, 2, 1, k - 1)
    if tail == 3:
        short = _mono(n, k, 1, 0) + _u_series(prof, 1, 3, k - 1)
        return _mono(n, k, 0, 3) * short
    raise ValueError(f"class {c} out of range")


@dataclass
class GeneratorSet:
    n: int
    k: int
    gens: list[RPoly]
    labels: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def assemble_generators(prof: ConstructionProfile) -> GeneratorSet:
    prof.validate()
    n, k = prof.n, prof.k
    gens, labels = [], []
    for c in prof.populated():
        head = class_head(prof, c)
        gens.append(head * _lift(prof.P_hat(c), n, k))
        labels.append(f"class {c} ({class_label(c, k)})")
    return GeneratorSet(n, k, gens, labels)


# ---------------------------------------------------------------------------
# Gray image


@dataclass
class LinearCodeF16:
    length: int
    basis: np.ndarray  # rref rows
    pivots: list[int]
    provenance: str = ""

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def contains(self, v) -> bool:
        return linalg16.in_rowspace(self.basis, self.pivots, v)

    def parity_check(self) -> np.ndarray:
        if self.dim == 0:
            return np.eye(self.length, dtype=np.uint8)
        return linalg16.nullspace(self.basis, self.length)

    def encode(self, msg) -> np.ndarray:
        return linalg16.combine(msg, self.basis)

    def same_space(self, other: "LinearCodeF16") -> bool:
        return (self.length == other.length and self.pivots == other.pivots
                and np.array_equal(self.basis, other.basis))

    def params(self) -> tuple[int, int]:
        return self.length, self.dim


def code_from_rows(rows, length: int, provenance: str = "") -> LinearCodeF16:
    a = np.asarray(rows, dtype=np.uint8).reshape(-1, length)
    if a.shape[0] == 0:
        return LinearCodeF16(length, np.zeros((0, length), np.uint8), [], provenance)
    basis, piv = linalg16.rref(a)
    return LinearCodeF16(length, basis, piv, provenance)


def spanning_words(g: RPoly, with_scalars: bool = False) -> Iterable[tuple[tuple[int, int, int, int], RPoly]]:
    """g * x^t u^i v^j (and * w^l when with_scalars), keyed by (t, i, j, l)."""
    n, k = g.n, g.k
    ls = range(4) if with_scalars else (0,)
    for i in range(k):
        for j in range(4):
            for l in ls:
                m = RElem.monomial(k, i, j, gf2e.wpow(l))
                h = g.mul_right(m)
                for t in range(n):
                    yield (t, i, j, l), h.shift(t)


def gray_rows(gens: Iterable[RPoly], n: int, k: int) -> np.ndarray:
    rows = []
    block = 4 * k
    for g in gens:
        for i in range(k):
            for j in range(4):
                h = g.mul_right(RElem.monomial(k, i, j))
                base = np.array(h.gray(), dtype=np.uint8)
                if not base.any():
                    continue
                for t in range(n):
                    rows.append(np.roll(base, t * block))
    if not rows:
        return np.zeros((0, 4 * k * n), dtype=np.uint8)
    return np.stack(rows)


def gray_span(gens, n: int | None = None, k: int | None = None, provenance: str = "") -> LinearCodeF16:
    """Right R_n-span of the generators, Gray-mapped and row-reduced over GF(16)."""
    if isinstance(gens, GeneratorSet):
        n, k, gens = gens.n, gens.k, gens.gens
    gens = list(gens)
    if gens:
        n, k = gens[0].n, gens[0].k
        for g in gens:
            if (g.n, g.k) != (n, k):
                raise ValueError("generators disagree on (n, k)")
    if n is None or k is None:
        raise ValueError("n and k are required for an empty generator set")
    return code_from_rows(gray_rows(gens, n, k), 4 * k * n, provenance)


# ---------------------------------------------------------------------------
# closed-form cardinalities


def xi_weights(k: int) -> list[int]:
    w = [0] * class_count(k)
    for i in range(1, k + 1):
        w[i] = 4 * k - 4 * (i - 1)
        w[k + i] = 3 * k - 3 * (i - 1)
        w[2 * k + i] = 2 * k - 2 * (i - 1)
        w[3 * k + i] = k - (i - 1)
    for i in range(1, k):
        w[4 * k + i] = 4 * k - i
    w[5 * k] = 4 * k - 1
    w[5 * k + 1] = 3 * k - 3
    w[5 * k + 2] = 2 * k - 2
    w[5 * k + 3] = k - 1
    return w


def eta_weights(k: int) -> list[int]:
    w = [0] * class_count(k)
    w[0] = 4 * k
    for i in range(2, k + 1):
        w[i] = 4 * (i - 1)
    for i in range(1, k + 1):
        w[k + i] = k + 3 * (i - 1)
        w[2 * k + i] = 2 * k + 2 * (i - 1)
        w[3 * k + i] = 3 * k + (i - 1)
    for i in range(1, k):
        w[4 * k + i] = i
    w[5 * k] = 1
    w[5 * k + 1] = k + 3
    w[5 * k + 2] = 2 * k + 2
    w[5 * k + 3] = 3 * k + 1
    return w


@dataclass
class CardinalitySummary:
    xi: int
    eta: int
    degA: list[int] | None = None
    A: list[F16Poly] | None = None
    rprime_exponent: int | None = None

    def to_json(self) -> dict:
        out = {"xi": self.xi, "eta": self.eta}
        if self.degA is not None:
            out["degA"] = self.degA
            out["rprime_exponent"] = self.rprime_exponent
            out["A"] = [str(a) for a in self.A or []]
        return out


def cardinality_xi(prof: ConstructionProfile) -> CardinalitySummary:
    degs = prof.degrees()
    k = prof.k
    xi = sum(w * d for w, d in zip(xi_weights(k), degs))
    eta = sum(w * d for w, d in zip(eta_weights(k), degs))
    if xi + eta != 4 * k * prof.n:
        raise ArithmeticError(f"xi + eta = {xi + eta} != 4kn = {4 * k * prof.n}")
    return CardinalitySummary(xi, eta)


def rprime_lists(k: int) -> list[list[int]]:
    """For each A_j (j = 1..5k+3), the classes whose hats are summed."""
    lists: list[list[int]] = [[1]]
    beta_all = [4 * k + i for i in range(1, k)]
    for j in range(1, k):
        lists.append(list(range(1, j + 2)) + [4 * k + i for i in range(1, j + 1)] + [5 * k])
    lists.append([k + 1] + beta_all + [5 * k, 1])
    for j in range(1, k):
        lists.append(list(range(1, j + 2)) + [k + i for i in range(1, j + 2)] + beta_all + [5 * k, 5 * k + 1])
    lists.append([i * k + 1 for i in (1, 2)] + beta_all + [5 * k, 5 * k + 1] + [1])
    for j in range(1, k):
        lists.append(list(range(1, j + 2)) + [k + i for i in range(1, j + 2)]
                     + [2 * k + i for i in range(1, j + 2)] + beta_all + [5 * k + t for t in range(3)])
    lists.append([i * k + 1 for i in (1, 2, 3)] + beta_all + [5 * k + t for t in range(3)] + [1])
    for j in range(1, k):
        lists.append(list(range(1, j + 2)) + [k + i for i in range(1, j + 2)]
                     + [2 * k + i for i in range(1, j + 2)] + [3 * k + i for i in range(1, j + 2)]
                     + beta_all + [5 * k + t for t in range(4)])
    for j in range(1, k):
        lists.append([4 * k + i for i in range(1, j + 1)])
    for t in range(4):
        lists.append([5 * k + t])
    assert len(lists) == 5 * k + 3
    return lists


def _ideal_gcd(polys: Iterable[F16Poly], n: int) -> F16Poly:
    g = F16Poly.xn_minus_1(n)
    for p in polys:
        g = gcd(g, p)
    return g


def to_rprime_form(prof: ConstructionProfile, hats: Sequence[F16Poly] | None = None) -> CardinalitySummary:
    """The A_j generators in F16[x]/<x^n - 1> and the resulting size exponent."""
    n, k = prof.n, prof.k
    if hats is None:
        hats = [prof.P_hat(c) for c in range(class_count(k))]
    A = [_ideal_gcd((hats[c] for c in lst), n) for lst in rprime_lists(k)]
    degA = [a.deg for a in A]
    base = cardinality_xi(prof)
    return CardinalitySummary(base.xi, base.eta, degA, A, (5 * k + 3) * n - sum(degA))


# ---------------------------------------------------------------------------
# CRT idempotents


def crt_decompose(n: int, k: int = 1, seed: int = 16) -> dict:
    from .f16poly import inverse_mod

    fs = factor_xn_minus_1(n, seed)
    mod = F16Poly.xn_minus_1(n)
    idem = []
    for f in fs.factors:
        h = hat(f, n)
        e = (h * inverse_mod(h % f, f)) % mod
        idem.append(e)
    total = F16Poly()
    for e in idem:
        total = total + e
    sum_ok = total % mod == F16Poly([1])
    orth_ok = all(
        ((idem[r] * idem[s]) % mod == (idem[r] if r == s else F16Poly()))
        for r in range(len(idem)) for s in range(len(idem))
    )
    lifted = [RPoly.from_f16poly(e, n, k) for e in idem]
    lift_sum = RPoly.zero(n, k)
    for e in lifted:
        lift_sum = lift_sum + e
    lift_ok = lift_sum == RPoly.one(n, k) and all(
        (lifted[r] * lifted[s]) == (lifted[r] if r == s else RPoly.zero(n, k))
        for r in range(len(lifted)) for s in range(len(lifted))
    )
    v = RPoly.constant(n, RElem.monomial(k, 0, 1))
    central = [e * v == v * e for e in lifted]
    return {
        "n": n,
        "k": k,
        "factors": [str(f) for f in fs.factors],
        "idempotents": [str(e) for e in idem],
        "sum_is_one": sum_ok,
        "orthogonal": orth_ok,
        "lifted_ok": lift_ok,
        "commutes_with_v": central,
        "ok": sum_ok and orth_ok and lift_ok,
    }


# ---------------------------------------------------------------------------
# submodules of R (single linear factor), sampled


def _bits(r: RElem) -> int:
    out = 0
    for i, x in enumerate(r.layers):
        out |= TO_MAT[x] << (16 * i)
    return out


class _F2Space:
    """GF(2) subspace of ints, kept as an echelon basis keyed by leading bit."""

    def __init__(self, vecs: Iterable[int] = ()):
        self.rows: dict[int, int] = {}
        for v in vecs:
            self.add(v)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self.rows.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.rows[v.bit_length() - 1] = v
            return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains_space(self, other: "_F2Space") -> bool:
        return all(self.reduce(v) == 0 for v in other.rows.values())


def right_span(g: RElem) -> _F2Space:
    k = g.k
    sp = _F2Space()
    for i in range(k):
        for j in range(4):
            for l in range(4):
                sp.add(_bits(r_mul(g, RElem.monomial(k, i, j, gf2e.wpow(l)))))
    return sp


def _span_of(gens: Sequence[RElem]) -> _F2Space:
    sp = _F2Space()
    for g in gens:
        for v in right_span(g).rows.values():
            sp.add(v)
    return sp


def _signature(sp: _F2Space, monos: dict[tuple[int, int], _F2Space]) -> tuple:
    inside = frozenset(key for key, m in monos.items() if sp.contains_space(m))
    around = frozenset(key for key, m in monos.items() if m.contains_space(sp))
    return (sp.dim, inside, around)


def _elem(k: int, terms: Sequence[tuple[int, int, int]]) -> RElem:
    """sum of v^j u^i c in written order v^j * (u^i c)."""
    out = RElem.zero(k)
    for i, j, c in terms:
        out = out + r_mul(RElem.monomial(k, 0, j), RElem.monomial(k, i, 0, c))
    return out


def submodule_forms(k: int, rng: random.Random, samples: int = 200) -> list[tuple[str, list[RElem]]]:
    """Generators of the classified submodule forms, with sampled nonzero scalar parameters."""
    forms: list[tuple[str, list[RElem]]] = [("zero", [])]
    for i in range(k):
        for j in range(4):
            forms.append((f"<u^{i}v^{j}>", [RElem.monomial(k, i, j)]))
    nz = lambda: rng.randrange(1, 16)  # noqa: E731

    def draws():
        yield lambda: 1
        for _ in range(samples):
            yield nz

    for i in range(1, k):
        forms.append((f"<u^{i},v,v^2,v^3>", [RElem.monomial(k, i, 0)] + [RElem.monomial(k, 0, j) for j in (1, 2, 3)]))
        for d in draws():
            forms.append((f"<u^{i}+v b+v^2 b+v^3 b>",
                          [_elem(k, [(i, 0, 1), (0, 1, d()), (0, 2, d()), (0, 3, d())])]))

    def useries(j: int, lo: int, hi: int, d, lead: bool) -> list[tuple[int, int, int]]:
        t = [(1, j, 1)] if lead else []
        for l in range(lo, hi + 1):
            t.append((l - 1, j, d()))
        return t

    for d in draws():
        t = useries(0, 3, k, d, True)
        for jj in (1, 2, 3):
            t += useries(jj, 1, k if jj < 3 else k - 1, d, False)
        forms.append(("alpha-0", [_elem(k, t)]))
        t = useries(1, 3, k, d, True) + useries(2, 1, k, d, False) + useries(3, 1, k - 1, d, False)
        forms.append(("alpha-1", [_elem(k, t)]))
        t = useries(2, 3, k, d, True) + useries(3, 1, k - 1, d, False)
        forms.append(("alpha-2", [_elem(k, t)]))
        t = useries(3, 3, k - 1, d, True)
        forms.append(("alpha-3", [_elem(k, t)]))
    return forms


def random_submodule_generator(k: int, rng: random.Random) -> RElem:
    """A random element, biased towards non-units by premultiplying monomials."""
    def rnd():
        return RElem(k, [rng.getrandbits(16) for _ in range(k)])

    mode = rng.randrange(3)
    if mode == 0:
        return rnd()
    mono = RElem.monomial(k, rng.randrange(k), rng.randrange(4))
    if mode == 1:
        return r_mul(mono, rnd())
    mono2 = RElem.monomial(k, rng.randrange(k), rng.randrange(4))
    return r_mul(mono, rnd()) + r_mul(mono2, rnd())


def submodule_sample_classify(k: int, trials: int = 200, seed: int = 16, form_samples: int = 200) -> dict:
    if k > 2:
        raise ValueError("sampling classification is limited to k <= 2")
    rng = random.Random(seed)
    monos = {(i, j): right_span(RElem.monomial(k, i, j)) for i in range(k) for j in range(4)}
    catalog: dict[tuple, str] = {}
    for name, gens in submodule_forms(k, rng, form_samples):
        catalog.setdefault(_signature(_span_of(gens), monos), name)
    dims = {sig[0] for sig in catalog}
    matched, unmatched = 0, []
    dim_only = 0
    counts: dict[str, int] = {}
    for _ in range(trials):
        g = random_submodule_generator(k, rng)
        sig = _signature(right_span(g), monos)
        if sig[0] in dims:
            dim_only += 1
        name = catalog.get(sig)
        if name is None:
            if len(unmatched) < 10:
                unmatched.append({"g": str(g), "f2_dim": sig[0],
                                  "contains": sorted(sig[1]), "contained_in": sorted(sig[2])})
            continue
        matched += 1
        counts[name] = counts.get(name, 0) + 1
    return {
        "k": k,
        "trials": trials,
        "matched": matched,
        "unmatched_count": trials - matched,
        "unmatched_examples": unmatched,
        "dimension_only_matches": dim_only,
        "catalog_signatures": len(catalog),
        "catalog_dims": sorted(dims),
        "form_counts": counts,
        "ok": matched == trials,
    }
