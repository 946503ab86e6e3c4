"""Polynomials over GF(16) and the factorization of x^n - 1."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import gf2e


class F16Poly:
    """Immutable polynomial over GF(16), coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    def __setattr__(self, name, value):
        raise AttributeError("F16Poly is immutable")

    @classmethod
    def x_power(cls, e: int, c: int = 1) -> "F16Poly":
        return cls([0] * e + [c])

    @classmethod
    def xn_minus_1(cls, n: int) -> "F16Poly":
        return cls([1] + [0] * (n - 1) + [1])

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, F16Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "F16Poly") -> "F16Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return F16Poly(self[i] ^ other[i] for i in range(n))

    __sub__ = __add__

    def __mul__(self, other: "F16Poly") -> "F16Poly":
        return F16Poly(gf2e._pmul(list(self.coeffs), list(other.coeffs)))

    def scale(self, c: int) -> "F16Poly":
        return F16Poly(gf2e.mul(c, x) for x in self.coeffs)

    def __divmod__(self, other: "F16Poly"):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        a = list(self.coeffs)
        dm = other.deg
        q = [0] * max(len(a) - dm, 0)
        li = gf2e.inv(other.lead())
        while len(a) - 1 >= dm and a:
            c = gf2e.mul(a[-1], li)
            shift = len(a) - 1 - dm
            q[shift] = c
            for j, y in enumerate(other.coeffs):
                if y:
                    a[shift + j] ^= gf2e.mul(c, y)
            while a and a[-1] == 0:
                a.pop()
        return F16Poly(q), F16Poly(a)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "F16Poly":
        if self.is_zero():
            return self
        return self.scale(gf2e.inv(self.lead()))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = gf2e.mul(acc, x) ^ c
        return acc

    def __repr__(self) -> str:
        return f"F16Poly({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for e in range(self.deg, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                terms.append(gf2e.fmt(c))
                continue
            mono = "x" if e == 1 else f"x^{e}"
            terms.append(mono if c == 1 else f"{gf2e.fmt(c)}*{mono}")
        return " + ".join(terms)

    def sort_key(self):
        """Canonical order: by degree, then coefficients from the top down."""
        return (self.deg, tuple(gf2e.sort_key(c) for c in reversed(self.coeffs)))


_TERM = re.compile(r"^(?:(0|1|w(?:\^\{?\d+\}?)?)\s*\*?\s*)?(x(?:\^\{?(\d+)\}?)?)?$")


def parse_poly(text) -> F16Poly:
    """Parse ``x^3 + w^5*x^2 + 1`` style text, or a lowest-first coefficient list."""
    if isinstance(text, F16Poly):
        return text
    if isinstance(text, (list, tuple)):
        return F16Poly(gf2e.parse(c) if isinstance(c, str) else int(c) for c in text)
    if isinstance(text, int):
        return F16Poly([text])
    coeffs: dict[int, int] = {}
    for raw in str(text).split("+"):
        term = raw.strip()
        m = _TERM.match(term)
        if not term or not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad polynomial term {raw!r} in {text!r}")
        c = gf2e.parse(m.group(1)) if m.group(1) else 1
        e = 0 if m.group(2) is None else int(m.group(3) or 1)
        coeffs[e] = coeffs.get(e, 0) ^ c
    top = max(coeffs) if coeffs else -1
    return F16Poly(coeffs.get(i, 0) for i in range(top + 1))


def poly_mul_mod(a: F16Poly, b: F16Poly, modulus: F16Poly) -> F16Poly:
    if modulus.is_zero():
        raise ZeroDivisionError("zero modulus")
    return (a * b) % modulus


def gcd(a: F16Poly, b: F16Poly) -> F16Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: F16Poly, b: F16Poly):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = F16Poly([1]), F16Poly()
    t0, t1 = F16Poly(), F16Poly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = gf2e.inv(r0.lead())
    return r0.scale(c), s0.scale(c), t0.scale(c)


def inverse_mod(a: F16Poly, m: F16Poly) -> F16Poly:
    g, s, _ = xgcd(a % m, m)
    if g != F16Poly([1]):
        raise ValueError(f"{a} is not invertible modulo {m}")
    return s % m


def is_unit_mod(a: F16Poly, n: int) -> bool:
    return gcd(a, F16Poly.xn_minus_1(n)) == F16Poly([1])


def reciprocal(f: F16Poly, monic: bool = False) -> F16Poly:
    """Coefficient reversal ``x^deg(f) * f(1/x)``."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    r = F16Poly(reversed(f.coeffs))
    return r.monic() if monic else r


def poly_conj(f: F16Poly) -> F16Poly:
    return F16Poly(gf2e.conj(c) for c in f.coeffs)


def hat(P: F16Poly, n: int) -> F16Poly:
    """Cofactor (x^n - 1) / P; P must divide x^n - 1."""
    q, r = divmod(F16Poly.xn_minus_1(n), P)
    if not r.is_zero():
        raise ValueError(f"{P} does not divide x^{n} - 1 (remainder {r})")
    return q


def is_irreducible(f: F16Poly) -> bool:
    return gf2e.is_irreducible(list(f.coeffs))


def cyclotomic_cosets(n: int, q: int = 16) -> list[list[int]]:
    seen = set()
    cosets = []
    for s in range(n):
        if s in seen:
            continue
        coset = []
        t = s
        while t not in coset:
            coset.append(t)
            t = (t * q) % n
        seen.update(coset)
        cosets.append(coset)
    return cosets


@dataclass(frozen=True)
class FactorSet:
    n: int
    factors: tuple[F16Poly, ...]
    ext_degree: int
    seed: int

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i: int) -> F16Poly:
        return self.factors[i]

    def product(self) -> F16Poly:
        out = F16Poly([1])
        for f in self.factors:
            out = out * f
        return out

    def table(self) -> list[str]:
        return [f"f{i + 1} = {f}" for i, f in enumerate(self.factors)]


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int, seed: int = 16) -> FactorSet:
    """Irreducible factors of x^n - 1 over GF(16) via cyclotomic cosets."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be a positive odd integer, got {n}")
    field, rho = gf2e.nth_root(n, seed)
    powers = [field.one()]
    for _ in range(1, n):
        powers.append(field.mul(powers[-1], rho))
    factors = []
    for coset in cyclotomic_cosets(n):
        poly = [field.one()]  # coefficients in GF(16^m), lowest first
        for s in coset:
            root = powers[s]
            # multiply by (x + root)
            nxt = [field.zero()] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = field.add(nxt[i + 1], c)
                nxt[i] = field.add(nxt[i], field.mul(c, root))
            poly = nxt
        if not all(field.is_base(c) for c in poly):
            raise ArithmeticError(f"coset {coset} gave a factor outside GF(16)")
        f = F16Poly(c[0] for c in poly)
        if not is_irreducible(f):
            raise ArithmeticError(f"factor {f} failed the irreducibility check")
        factors.append(f)
    factors.sort(key=F16Poly.sort_key)
    fs = FactorSet(n, tuple(factors), field.m, seed)
    if fs.product() != F16Poly.xn_minus_1(n):
        raise ArithmeticError("factor product differs from x^n - 1")
    return fs
