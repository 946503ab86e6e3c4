"""Arithmetic in GF(16) and in the extensions GF(16^m).

GF(16) elements are plain ints in ``range(16)``: bit ``l`` is the coefficient of
``w^l`` in the polynomial basis, and ``w`` is a root of ``x^4 + x + 1``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MODULUS = 0b10011  # x^4 + x + 1
ORDER = 16
W = 0b0010

EXP = [0] * 30
LOG = [-1] * 16


def _init_tables() -> None:
    x = 1
    for i in range(15):
        EXP[i] = x
        LOG[x] = i
        x <<= 1
        if x & 0x10:
            x ^= MODULUS
    for i in range(15, 30):
        EXP[i] = EXP[i - 15]


_init_tables()

# full 16x16 product table, used by the vectorised kernels in linalg16
MUL = np.zeros((16, 16), dtype=np.uint8)
for _a in range(1, 16):
    for _b in range(1, 16):
        MUL[_a, _b] = EXP[LOG[_a] + LOG[_b]]
INV = np.zeros(16, dtype=np.uint8)
for _a in range(1, 16):
    INV[_a] = EXP[(15 - LOG[_a]) % 15]
del _a, _b


def add(a: int, b: int) -> int:
    return a ^ b


def mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def inv(a: int) -> int:
    """Multiplicative inverse, computed as ``a^14``."""
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(16)")
    return power(a, 14)


def div(a: int, b: int) -> int:
    return mul(a, inv(b))


def power(a: int, e: int) -> int:
    if a == 0:
        return 1 if e == 0 else 0
    return EXP[(LOG[a] * e) % 15]


def wpow(t: int) -> int:
    """The element ``w^t`` (exponent taken mod 15)."""
    return EXP[t % 15]


def conj(a: int) -> int:
    """Frobenius conjugate ``a^4`` (an involution, since ``a^16 = a``)."""
    return power(a, 4)


def log(a: int) -> int:
    if a == 0:
        raise ValueError("log of zero")
    return LOG[a]


def fmt(a: int) -> str:
    """Power notation: ``0``, ``1``, ``w``, ``w^2`` ... ``w^14``."""
    if a == 0:
        return "0"
    t = LOG[a]
    if t == 0:
        return "1"
    if t == 1:
        return "w"
    return f"w^{t}"


def parse(text: str) -> int:
    s = text.strip().replace("{", "").replace("}", "")
    if s == "0":
        return 0
    if s == "1":
        return 1
    if s == "w":
        return W
    if s.startswith("w^"):
        return wpow(int(s[2:]))
    raise ValueError(f"not a GF(16) element: {text!r}")


def sort_key(a: int) -> int:
    """Zero first, then nonzero elements by discrete log."""
    return 0 if a == 0 else 1 + LOG[a]


# ---------------------------------------------------------------------------
# raw polynomial helpers over GF(16) (lists, lowest degree first)


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= mul(x, y)
    return _trim(out)


def _pmod(a: list[int], m: list[int]) -> list[int]:
    a = list(a)
    _trim(a)
    dm = len(m) - 1
    lead_inv = inv(m[-1])
    while len(a) - 1 >= dm:
        c = mul(a[-1], lead_inv)
        shift = len(a) - 1 - dm
        for j, y in enumerate(m):
            if y:
                a[shift + j] ^= mul(c, y)
        _trim(a)
    return a


def _pgcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b)
    if a:
        c = inv(a[-1])
        a = [mul(c, x) for x in a]
    return a


def _ppowmod(base: list[int], e: int, m: list[int]) -> list[int]:
    result = [1]
    b = _pmod(base, m)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, b), m)
        b = _pmod(_pmul(b, b), m)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(coeffs: list[int]) -> bool:
    """Rabin's test over GF(16) for a polynomial given lowest degree first."""
    f = _trim(list(coeffs))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, ORDER**d, f) != _pmod(x, f):
        return False
    for p in _prime_factors(d):
        h = _ppowmod(x, ORDER ** (d // p), f)
        h = h + [0] * (2 - len(h)) if len(h) < 2 else list(h)
        h[1] ^= 1
        if _pgcd(f, _trim(h)) != [1]:
            return False
    return True


# ---------------------------------------------------------------------------
# extension fields GF(16^m)


def mult_order(base: int, n: int) -> int:
    """Smallest m >= 1 with base^m = 1 (mod n)."""
    if n == 1:
        return 1
    if math.gcd(base, n) != 1:
        raise ValueError(f"{base} is not invertible mod {n}")
    m, x = 1, base % n
    while x != 1:
        x = (x * base) % n
        m += 1
    return m


@dataclass(frozen=True)
class ExtField:
    """GF(16^m) realised as GF(16)[y]/<g(y)>; elements are m-tuples of GF(16)."""

    m: int
    modulus: tuple[int, ...]
    seed: int

    @property
    def order(self) -> int:
        return ORDER**self.m

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.m

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.m - 1)

    def embed(self, a: int) -> tuple[int, ...]:
        return (a,) + (0,) * (self.m - 1)

    def is_base(self, x: tuple[int, ...]) -> bool:
        return all(c == 0 for c in x[1:])

    def _pad(self, p: list[int]) -> tuple[int, ...]:
        return tuple(p) + (0,) * (self.m - len(p))

    def add(self, x, y):
        return tuple(a ^ b for a, b in zip(x, y))

    def mul(self, x, y):
        return self._pad(_pmod(_pmul(list(x), list(y)), list(self.modulus)))

    def pow(self, x, e: int):
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def random_element(self, rng: random.Random):
        return tuple(rng.randrange(16) for _ in range(self.m))


@lru_cache(maxsize=None)
def ext_build(m: int, seed: int = 16) -> ExtField:
    """GF(16^m) with a randomly searched, verified-irreducible monic modulus."""
    if not 1 <= m <= 12:
        raise ValueError("extension degree must be in 1..12")
    rng = random.Random(seed * 1000 + m)
    while True:
        g = [rng.randrange(16) for _ in range(m)] + [1]
        if g[0] != 0 and is_irreducible(g):
            return ExtField(m, tuple(g), seed)


@lru_cache(maxsize=None)
def nth_root(n: int, seed: int = 16) -> tuple[ExtField, tuple[int, ...]]:
    """An element of multiplicative order exactly ``n`` in GF(16^m), m = ord_n(16)."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be a positive odd integer, got {n}")
    m = mult_order(16, n)
    field = ext_build(m, seed)
    if n == 1:
        return field, field.one()
    cofactor = (field.order - 1) // n
    rng = random.Random(seed * 7919 + n)
    primes = _prime_factors(n)
    while True:
        a = field.random_element(rng)
        if a == field.zero():
            continue
        rho = field.pow(a, cofactor)
        if rho == field.one():
            continue
        if all(field.pow(rho, n // p) != field.one() for p in primes):
            return field, rho
