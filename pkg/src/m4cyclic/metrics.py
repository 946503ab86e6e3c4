"""Hamming/Lee weights and minimum distance of Gray-image codes."""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import gf2e
from .codebuild import LinearCodeF16
from .gf2e import MUL
from .linalg16 import batch_full_column_rank, nullspace, rref

EXHAUSTIVE_BOUND = 2**24


@dataclass
class DistanceResult:
    d: int | None  # None: no nonzero codeword
    witness: np.ndarray | None
    certificate: str  # exhaustive | column-independence | open | empty
    lower: int = 0
    upper: int | None = None
    work: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.certificate in ("exhaustive", "column-independence", "empty")

    def to_json(self) -> dict:
        return {
            "d": self.d if self.d is not None else "inf",
            "lower": self.lower,
            "upper": self.upper if self.upper is not None else "inf",
            "certificate": self.certificate,
            "witness": None if self.witness is None else [gf2e.fmt(int(x)) for x in self.witness],
            "witness_support": None if self.witness is None else [int(i) for i in np.nonzero(self.witness)[0]],
            "work": self.work,
        }


def hamming_weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def _all_combos(rows: np.ndarray) -> np.ndarray:
    """All 16^len(rows) GF(16) combinations of rows."""
    words = np.zeros((1, rows.shape[1]), dtype=np.uint8)
    for r in rows:
        words = (words[None, :, :] ^ MUL[:, r][:, None, :]).reshape(-1, rows.shape[1])
    return words


def min_distance_exhaustive(code: LinearCodeF16, bound: int = EXHAUSTIVE_BOUND) -> DistanceResult:
    k = code.dim
    if k == 0:
        return DistanceResult(None, None, "empty", 0, None, {"codewords": 0})
    if 16**k > bound:
        raise ValueError(f"16^{k} codewords exceeds the exhaustive bound {bound}")
    g = code.basis
    split = min(k, 4)
    tail = _all_combos(g[k - split:])
    best, wit = None, None
    count = 0
    for msg in itertools.product(range(16), repeat=k - split):
        head = np.zeros(code.length, dtype=np.uint8)
        for c, r in zip(msg, g):
            if c:
                head ^= MUL[c, r]
        words = tail ^ head
        wts = np.count_nonzero(words, axis=1)
        if not any(msg):
            wts[0] = code.length + 1
        i = int(np.argmin(wts))
        count += len(words)
        if best is None or wts[i] < best:
            best, wit = int(wts[i]), words[i].copy()
    return DistanceResult(best, wit, "exhaustive", best, best, {"codewords": count})


def _search_upper(code: LinearCodeF16, target: int | None, probes: int, rng: random.Random, work: dict):
    """Low-weight word by sparse row combinations, then information-set probes."""
    best_w, best = code.length + 1, None

    def consider(words: np.ndarray):
        nonlocal best_w, best
        wts = np.count_nonzero(words, axis=1)
        wts[wts == 0] = code.length + 1
        i = int(np.argmin(wts))
        if wts[i] < best_w:
            best_w, best = int(wts[i]), words[i].copy()

    def combos(g: np.ndarray, depth: int):
        consider(g)
        m = len(g)
        if depth >= 2 and m >= 2:
            for a in range(m):
                # normalise the first coefficient to 1
                if a + 1 == m:
                    continue
                block = (g[a][None, :] ^ MUL[1:16][:, g[a + 1:]]).reshape(-1, g.shape[1])
                consider(block)
                work["combos"] = work.get("combos", 0) + len(block)
        if depth >= 3 and m >= 3 and m <= 40:
            scal = MUL[1:16]
            for a, b in itertools.combinations(range(m), 2):
                if best_w <= (target or 0):
                    return
                pair = (g[a][None, :] ^ scal[:, g[b]])  # (15, len)
                rest = g[b + 1:]
                if len(rest) == 0:
                    continue
                trip = pair[:, None, None, :] ^ scal[:, rest][None, :, :, :]
                consider(trip.reshape(-1, g.shape[1]))
                work["combos"] = work.get("combos", 0) + trip.shape[0] * trip.shape[1] * trip.shape[2]

    g = code.basis
    combos(g, 3 if g.shape[0] <= 40 else 2)
    for _ in range(probes):
        if target is not None and best_w <= target:
            break
        perm = list(range(code.length))
        rng.shuffle(perm)
        gp, _ = rref(g[:, perm])
        inv = np.argsort(perm)
        combos(gp[:, inv], 2)
        work["probes"] = work.get("probes", 0) + 1
    return best_w, best


def _witness_from_subset(H: np.ndarray, cols: tuple[int, ...], length: int) -> np.ndarray:
    sub = H[:, list(cols)]
    ns = nullspace(sub, len(cols))
    v = np.zeros(length, dtype=np.uint8)
    v[list(cols)] = ns[0]
    return v


def min_distance_certified(code: LinearCodeF16, d_hint: int | None = None, seed: int = 16,
                           max_subsets: int = 20_000_000, probes: int = 20,
                           chunk: int = 100_000) -> DistanceResult:
    """Witness (upper bound) plus column-independence of H (lower bound)."""
    n, k = code.length, code.dim
    work = {"subsets": 0, "combos": 0, "probes": 0}
    if k == 0:
        return DistanceResult(None, None, "empty", 0, None, work)
    rng = random.Random(seed)
    ub, wit = _search_upper(code, d_hint, probes, rng, work)
    H = code.parity_check()
    r = H.shape[0]
    for t in range(1, ub):
        total = math.comb(n, t)
        if work["subsets"] + total > max_subsets:
            return DistanceResult(None, wit, "open", t, ub, work)
        if t > r:
            # any r+1 columns are dependent; cannot happen since ub <= r + 1
            break
        it = itertools.combinations(range(n), t)
        while True:
            block = np.fromiter(itertools.chain.from_iterable(itertools.islice(it, chunk)), dtype=np.int64)
            if block.size == 0:
                break
            block = block.reshape(-1, t)
            stack = H[:, block].transpose(1, 0, 2)  # (B, r, t)
            ok = batch_full_column_rank(stack)
            work["subsets"] += len(block)
            if not ok.all():
                cols = tuple(int(c) for c in block[int(np.argmin(ok))])
                v = _witness_from_subset(H, cols, n)
                assert code.contains(v) and hamming_weight(v) == t
                return DistanceResult(t, v, "column-independence", t, t, work)
    return DistanceResult(ub, wit, "column-independence", ub, ub, work)


def min_distance(code: LinearCodeF16, d_hint: int | None = None, seed: int = 16, **kw) -> DistanceResult:
    if code.dim and 16**code.dim <= 2**16:
        return min_distance_exhaustive(code)
    return min_distance_certified(code, d_hint, seed, **kw)


def mds_gap(length: int, dim: int, d: int) -> int:
    return (length - dim + 1) - d


def d_mds(length: int, dim: int) -> int:
    return length - dim + 1


def lee_profile(words, bound: int = 2**16) -> Counter:
    """Histogram of Lee weights over an iterable of RPoly, or over all words of a LinearCodeF16 given (n, k)."""
    from .rring import RPoly, lee_weight

    if isinstance(words, tuple) and isinstance(words[0], LinearCodeF16):
        code, n, k = words
        if 16**code.dim > bound:
            raise ValueError(f"16^{code.dim} codewords exceeds bound {bound}")
        from .rring import rpoly_from_gray

        words = (rpoly_from_gray(w, n, k) for w in _all_combos(code.basis)) if code.dim else [RPoly.zero(n, k)]
    hist: Counter = Counter()
    count = 0
    for p in words:
        count += 1
        if count > bound:
            raise ValueError(f"more than {bound} codewords")
        hist[sum(lee_weight(c) for c in p.coeffs)] += 1
    return hist
