"""The ring R = M_4(F_2[u]/<u^k>) and its coordinate form over F_16[u, v].

An element is stored in coordinate form: ``k`` layers (one per power of u), each
a 16-bit int whose nibble ``j`` is the GF(16) coefficient ``c_ij`` in

    r = sum_{i,j} u^i v^j c_ij            (scalars on the right).

The matrix form maps ``u^i v^j w^l`` to ``u^i V^j OMEGA^l`` with ``V = I + E``.
A 4x4 bit matrix is packed into a 16-bit int, bit ``4*row + col``.
Multiplication is carried out in the matrix form and transported back, so the
noncommutativity ``v*w != w*v`` is handled exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from . import gf2e
from .f16poly import F16Poly

# ---------------------------------------------------------------------------
# 4x4 bit matrices packed into ints


def pack(mat) -> int:
    m = np.asarray(mat, dtype=np.uint8) & 1
    out = 0
    for r in range(4):
        for c in range(4):
            if m[r, c]:
                out |= 1 << (4 * r + c)
    return out


def unpack(m: int) -> np.ndarray:
    return np.array([[(m >> (4 * r + c)) & 1 for c in range(4)] for r in range(4)], dtype=np.uint8)


def mat_mul(a: int, b: int) -> int:
    rows = ((b & 0xF), (b >> 4) & 0xF, (b >> 8) & 0xF, (b >> 12) & 0xF)
    out = 0
    for r in range(4):
        sel = (a >> (4 * r)) & 0xF
        acc = 0
        if sel & 1:
            acc ^= rows[0]
        if sel & 2:
            acc ^= rows[1]
        if sel & 4:
            acc ^= rows[2]
        if sel & 8:
            acc ^= rows[3]
        out |= acc << (4 * r)
    return out


IDENTITY = pack(np.eye(4, dtype=np.uint8))


def mat_pow(a: int, e: int) -> int:
    out = IDENTITY
    for _ in range(e):
        out = mat_mul(out, a)
    return out


@lru_cache(maxsize=None)
def mat_rank(m: int) -> int:
    rows = [(m >> (4 * r)) & 0xF for r in range(4)]
    rank = 0
    for bit in range(4):
        piv = next((i for i in range(rank, 4) if rows[i] >> bit & 1), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(4):
            if i != rank and rows[i] >> bit & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# basis constants

E_MATRIX = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint8)
OMEGA_MATRIX = np.array([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]], dtype=np.uint8)
E = pack(E_MATRIX)
OMEGA = pack(OMEGA_MATRIX)
V = E ^ IDENTITY

_V_POW = [mat_pow(V, j) for j in range(4)]
_OMEGA_POW = [mat_pow(OMEGA, l) for l in range(15)]


def scalar_matrix(c: int) -> int:
    """Matrix of the GF(16) element ``c`` (a polynomial in OMEGA)."""
    out = 0
    for l in range(4):
        if c >> l & 1:
            out ^= _OMEGA_POW[l]
    return out


# right basis: bit 4j+l <-> V^j OMEGA^l ; left basis: bit 4j+l <-> OMEGA^l V^j
RIGHT_BASIS = [mat_mul(_V_POW[j], _OMEGA_POW[l]) for j in range(4) for l in range(4)]
LEFT_BASIS = [mat_mul(_OMEGA_POW[l], _V_POW[j]) for j in range(4) for l in range(4)]


def _linear_table(basis: Sequence[int]) -> np.ndarray:
    idx = np.arange(1 << 16, dtype=np.uint32)
    out = np.zeros(1 << 16, dtype=np.uint32)
    for b, m in enumerate(basis):
        out ^= ((idx >> b) & 1) * np.uint32(m)
    return out


def _invert_table(table: np.ndarray) -> np.ndarray:
    inv = np.full(1 << 16, -1, dtype=np.int64)
    inv[table] = np.arange(1 << 16)
    if (inv < 0).any():
        raise ArithmeticError("basis matrices are not F2-independent")
    return inv.astype(np.uint32)


_TO_MAT = _linear_table(RIGHT_BASIS)
_FROM_MAT = _invert_table(_TO_MAT)
_LEFT_TO_MAT = _linear_table(LEFT_BASIS)
_MAT_TO_LEFT = _invert_table(_LEFT_TO_MAT)

TO_MAT = _TO_MAT.tolist()
FROM_MAT = _FROM_MAT.tolist()


@dataclass(frozen=True)
class BasisConstants:
    E: np.ndarray
    OMEGA: np.ndarray
    V: np.ndarray


BASIS = BasisConstants(E_MATRIX, OMEGA_MATRIX, unpack(V))


def basis_rank(k: int) -> int:
    """F2-rank of the 16k vectorised matrices u^i V^j OMEGA^l."""
    rows = []
    for i in range(k):
        for m in RIGHT_BASIS:
            rows.append(m << (16 * i))
    rank = 0
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                rank += 1
                break
            v ^= pivots[top]
    return rank


@lru_cache(maxsize=None)
def twist_exponent() -> int:
    """The s with E * OMEGA = OMEGA^s * E."""
    lhs = mat_mul(E, OMEGA)
    hits = [s for s in range(1, 15) if mat_mul(_OMEGA_POW[s], E) == lhs]
    if len(hits) != 1 or hits[0] not in (2, 4, 8):
        raise ArithmeticError(f"E does not normalise OMEGA (candidates {hits})")
    return hits[0]


# ---------------------------------------------------------------------------
# element types


class MatForm:
    """Element of M_4(F_2[u]/<u^k>) stored as k packed bit-matrix layers."""

    __slots__ = ("k", "layers")

    def __init__(self, k: int, layers: Sequence[int]):
        if len(layers) != k:
            raise ValueError("layer count must equal k")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "layers", tuple(int(x) for x in layers))

    def __setattr__(self, name, value):
        raise AttributeError("MatForm is immutable")

    @classmethod
    def from_entries(cls, k: int, entries) -> "MatForm":
        """Build from a 4x4 array of k-bit ints (bit i = coefficient of u^i)."""
        layers = [0] * k
        for r in range(4):
            for c in range(4):
                e = int(entries[r][c])
                for i in range(k):
                    if e >> i & 1:
                        layers[i] |= 1 << (4 * r + c)
        return cls(k, layers)

    def entries(self) -> list[list[int]]:
        out = [[0] * 4 for _ in range(4)]
        for i, m in enumerate(self.layers):
            for r in range(4):
                for c in range(4):
                    if m >> (4 * r + c) & 1:
                        out[r][c] |= 1 << i
        return out

    def __add__(self, other: "MatForm") -> "MatForm":
        return MatForm(self.k, [a ^ b for a, b in zip(self.layers, other.layers)])

    __sub__ = __add__

    def __mul__(self, other: "MatForm") -> "MatForm":
        if other.k != self.k:
            raise ValueError("mismatched k")
        return MatForm(self.k, _layer_product(self.layers, other.layers))

    def __eq__(self, other) -> bool:
        return isinstance(other, MatForm) and self.k == other.k and self.layers == other.layers

    def __hash__(self) -> int:
        return hash((self.k, self.layers))

    def __str__(self) -> str:
        def entry(e: int) -> str:
            if e == 0:
                return "0"
            terms = []
            for i in range(self.k):
                if e >> i & 1:
                    terms.append("1" if i == 0 else ("u" if i == 1 else f"u^{i}"))
            return "+".join(terms)

        rows = self.entries()
        return "\n".join("[" + ", ".join(entry(e) for e in row) + "]" for row in rows)

    __repr__ = __str__


def _layer_product(a: Sequence[int], b: Sequence[int]) -> list[int]:
    k = len(a)
    out = [0] * k
    for i in range(k):
        if not a[i]:
            continue
        for j in range(k - i):
            if b[j]:
                out[i + j] ^= mat_mul(a[i], b[j])
    return out


class RElem:
    """Element of R in coordinate form over F_16[u, v]/<u^k, v^4>."""

    __slots__ = ("k", "layers")

    def __init__(self, k: int, layers: Sequence[int]):
        if k < 1:
            raise ValueError("k must be >= 1")
        if len(layers) != k:
            raise ValueError("layer count must equal k")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "layers", tuple(int(x) for x in layers))

    def __setattr__(self, name, value):
        raise AttributeError("RElem is immutable")

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, k: int) -> "RElem":
        return cls(k, (0,) * k)

    @classmethod
    def one(cls, k: int) -> "RElem":
        return cls.scalar(k, 1)

    @classmethod
    def scalar(cls, k: int, c: int) -> "RElem":
        return cls(k, (c & 0xF,) + (0,) * (k - 1))

    @classmethod
    def monomial(cls, k: int, i: int, j: int, c: int = 1) -> "RElem":
        """``u^i v^j c``; zero when ``i >= k`` or ``j >= 4``."""
        if i >= k or j >= 4 or c == 0:
            return cls.zero(k)
        layers = [0] * k
        layers[i] = c << (4 * j)
        return cls(k, layers)

    @classmethod
    def from_coeffs(cls, k: int, coeffs) -> "RElem":
        """From a k x 4 array whose entry (i, j) is the coefficient of u^i v^j."""
        layers = []
        for i in range(k):
            x = 0
            for j in range(4):
                x |= (int(coeffs[i][j]) & 0xF) << (4 * j)
            layers.append(x)
        return cls(k, layers)

    # views ----------------------------------------------------------------
    def coeff(self, i: int, j: int) -> int:
        return (self.layers[i] >> (4 * j)) & 0xF

    def coeffs(self) -> list[list[int]]:
        return [[self.coeff(i, j) for j in range(4)] for i in range(self.k)]

    def flat(self) -> list[int]:
        """d_1 .. d_4k of the Gray map, as a 0-indexed list."""
        return [self.coeff(i, j) for i in range(self.k) for j in range(4)]

    def is_zero(self) -> bool:
        return not any(self.layers)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "RElem") -> "RElem":
        if other.k != self.k:
            raise ValueError("mismatched k")
        return RElem(self.k, [a ^ b for a, b in zip(self.layers, other.layers)])

    __sub__ = __add__

    def __neg__(self) -> "RElem":
        return self

    def __mul__(self, other: "RElem") -> "RElem":
        return r_mul(self, other)

    def scale_right(self, c: int) -> "RElem":
        """``r * c`` for a GF(16) scalar c; acts coefficient-wise."""
        out = []
        for x in self.layers:
            y = 0
            for j in range(4):
                y |= gf2e.mul((x >> (4 * j)) & 0xF, c) << (4 * j)
            out.append(y)
        return RElem(self.k, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, RElem) and self.k == other.k and self.layers == other.layers

    def __hash__(self) -> int:
        return hash((self.k, self.layers))

    def left_coeffs(self) -> list[list[int]]:
        """Coefficients c'_ij with r = sum u^i c'_ij v^j (scalars on the left)."""
        out = []
        for x in self.layers:
            y = int(_MAT_TO_LEFT[_TO_MAT[x]])
            out.append([(y >> (4 * j)) & 0xF for j in range(4)])
        return out

    def __str__(self) -> str:
        terms = []
        lc = self.left_coeffs()
        for i in range(self.k - 1, -1, -1):
            for j in range(3, -1, -1):
                c = lc[i][j]
                if c == 0:
                    continue
                mono = []
                if i:
                    mono.append("u" if i == 1 else f"u^{i}")
                if j:
                    mono.append("v" if j == 1 else f"v^{j}")
                if not mono:
                    terms.append(gf2e.fmt(c))
                elif c == 1:
                    terms.append("*".join(mono))
                else:
                    terms.append("*".join([gf2e.fmt(c)] + mono))
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"RElem(k={self.k}, {self})"


def psi_inv(r: RElem) -> MatForm:
    return MatForm(r.k, [TO_MAT[x] for x in r.layers])


def psi(m: MatForm) -> RElem:
    return RElem(m.k, [FROM_MAT[x] for x in m.layers])


def r_mul(a: RElem, b: RElem) -> RElem:
    if a.k != b.k:
        raise ValueError(f"mismatched k: {a.k} vs {b.k}")
    prod = _layer_product([TO_MAT[x] for x in a.layers], [TO_MAT[x] for x in b.layers])
    return RElem(a.k, [FROM_MAT[m] for m in prod])


def r_pow(a: RElem, e: int) -> RElem:
    out = RElem.one(a.k)
    for _ in range(e):
        out = r_mul(out, a)
    return out


CONJ_MODES = ("coeff", "power")


def r_conj(r: RElem, mode: str = "coeff") -> RElem:
    """Conjugation ``b -> b^4``: as a ring power or coefficient-wise Frobenius."""
    if mode == "power":
        sq = r_mul(r, r)
        return r_mul(sq, sq)
    if mode == "coeff":
        out = []
        for x in r.layers:
            y = 0
            for j in range(4):
                y |= gf2e.conj((x >> (4 * j)) & 0xF) << (4 * j)
            out.append(y)
        return RElem(r.k, out)
    raise ValueError(f"unknown conjugation mode {mode!r}")


# ---------------------------------------------------------------------------
# Gray map and weights


def theta(r: RElem) -> list[int]:
    d = r.flat()
    m = len(d)
    last = d[m - 1]
    out = [0] * m
    out[0] = last
    for t in range(1, m - 1):
        out[t] = d[m - 1 - t] ^ last
    total = 0
    for x in d:
        total ^= x
    out[m - 1] = total
    return out


def theta_inv(vec: Sequence[int], k: int) -> RElem:
    m = 4 * k
    if len(vec) != m:
        raise ValueError(f"expected {m} coordinates")
    d = [0] * m
    last = vec[0]
    d[m - 1] = last
    for t in range(1, m - 1):
        d[m - 1 - t] = vec[t] ^ last
    rest = 0
    for x in d[1:]:
        rest ^= x
    d[0] = vec[m - 1] ^ rest
    return RElem.from_coeffs(k, [d[4 * i : 4 * i + 4] for i in range(k)])


def lee_weight(r: RElem) -> int:
    return sum(1 for x in theta(r) if x)


def bachoc_phi(r: RElem) -> tuple[int, ...]:
    """Triangular map to k packed M_4(F_2) matrices: (Y_k, Y_k+Y_{k-1}, ..., Y_k+Y_2, Y_1+...+Y_k)."""
    ys = [TO_MAT[x] for x in r.layers]  # ys[i] = Y_{i+1}
    k = r.k
    last = ys[k - 1]
    total = 0
    for y in ys:
        total ^= y
    if k == 1:
        return (total,)
    out = [last]
    for t in range(1, k - 1):
        out.append(ys[k - 1 - t] ^ last)
    out.append(total)
    return tuple(out)


def default_bachoc_base(m: int) -> int:
    """0 on the zero matrix, 1 on invertible matrices, 2 otherwise."""
    if m == 0:
        return 0
    return 1 if mat_rank(m) == 4 else 2


def bachoc_weight(r: RElem, base: Callable[[int], int] = default_bachoc_base) -> int:
    return sum(base(y) for y in bachoc_phi(r))


# ---------------------------------------------------------------------------
# polynomials over R modulo x^n - 1


class RPoly:
    """Element of R_n = R[x]/<x^n - 1>; coeffs[t] is the coefficient of x^t."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n: int, k: int, coeffs: Sequence[RElem]):
        if len(coeffs) != n:
            raise ValueError("need exactly n coefficients")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RPoly is immutable")

    @classmethod
    def zero(cls, n: int, k: int) -> "RPoly":
        z = RElem.zero(k)
        return cls(n, k, [z] * n)

    @classmethod
    def constant(cls, n: int, r: RElem) -> "RPoly":
        return cls(n, r.k, [r] + [RElem.zero(r.k)] * (n - 1))

    @classmethod
    def one(cls, n: int, k: int) -> "RPoly":
        return cls.constant(n, RElem.one(k))

    @classmethod
    def from_f16poly(cls, p: F16Poly, n: int, k: int) -> "RPoly":
        c = [0] * n
        for e, a in enumerate(p.coeffs):
            c[e % n] ^= a
        return cls(n, k, [RElem.scalar(k, a) for a in c])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "RPoly") -> "RPoly":
        self._check(other)
        return RPoly(self.n, self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __sub__ = __add__

    def __mul__(self, other: "RPoly") -> "RPoly":
        self._check(other)
        n = self.n
        acc = [[0] * self.k for _ in range(n)]
        bm = [[TO_MAT[x] for x in b.layers] for b in other.coeffs]
        for s, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            am = [TO_MAT[x] for x in a.layers]
            for t, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                prod = _layer_product(am, bm[t])
                slot = acc[(s + t) % n]
                for i, m in enumerate(prod):
                    slot[i] ^= m
        return RPoly(n, self.k, [RElem(self.k, [FROM_MAT[m] for m in slot]) for slot in acc])

    def mul_right(self, r: RElem) -> "RPoly":
        return RPoly(self.n, self.k, [r_mul(c, r) for c in self.coeffs])

    def mul_left(self, r: RElem) -> "RPoly":
        return RPoly(self.n, self.k, [r_mul(r, c) for c in self.coeffs])

    def shift(self, t: int) -> "RPoly":
        """Multiply by x^t (a cyclic rotation of the coefficients)."""
        n = self.n
        t %= n
        return RPoly(n, self.k, self.coeffs[n - t :] + self.coeffs[: n - t])

    def map(self, fn: Callable[[RElem], RElem]) -> "RPoly":
        return RPoly(self.n, self.k, [fn(c) for c in self.coeffs])

    def gray(self) -> list[int]:
        out: list[int] = []
        for c in self.coeffs:
            out.extend(theta(c))
        return out

    def lee_weight(self) -> int:
        return sum(lee_weight(c) for c in self.coeffs)

    def _check(self, other: "RPoly") -> None:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(f"mismatched (n, k): {(self.n, self.k)} vs {(other.n, other.k)}")

    def __eq__(self, other) -> bool:
        return isinstance(other, RPoly) and (self.n, self.k, self.coeffs) == (other.n, other.k, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"RPoly(n={self.n}, k={self.k}, [{body}])"


def rpoly_from_gray(vec: Sequence[int], n: int, k: int) -> RPoly:
    m = 4 * k
    return RPoly(n, k, [theta_inv(vec[t * m : (t + 1) * m], k) for t in range(n)])


def inner_product(a: RPoly, b: RPoly, hermitian: bool = False, conj_mode: str = "coeff") -> RElem:
    """sum_j a_j b_j, or sum_j a_j conj(b_j) for the Hermitian form."""
    a._check(b)
    acc = RElem.zero(a.k)
    for x, y in zip(a.coeffs, b.coeffs):
        if hermitian:
            y = r_conj(y, conj_mode)
        acc = acc + r_mul(x, y)
    return acc
