"""Dense linear algebra over GF(16) on numpy uint8 arrays."""

from __future__ import annotations

import numpy as np

from .gf2e import INV, MUL


def as_matrix(rows, ncols: int | None = None) -> np.ndarray:
    a = np.asarray(rows, dtype=np.uint8)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else np.zeros((0, ncols or 0), dtype=np.uint8)
    return a


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = np.array(m, dtype=np.uint8, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = MUL[INV[a[r, c]], a[r]]
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] ^= MUL[col[hit][:, None], a[r][None, :]]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


def nullspace(m: np.ndarray, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : m x^T = 0}."""
    m = as_matrix(m, ncols)
    n = m.shape[1] if m.size or ncols is None else ncols
    r, piv = rref(m) if m.shape[0] else (np.zeros((0, n), dtype=np.uint8), [])
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.uint8)
    for i, f in enumerate(free):
        out[i, f] = 1
        # char 2: x_pivot = sum over free of r[row, free] * x_free
        for row, p in enumerate(piv):
            out[i, p] = r[row, f]
    return out


def in_rowspace(basis: np.ndarray, pivots: list[int], v) -> bool:
    """Membership test against an rref basis."""
    w = np.array(v, dtype=np.uint8, copy=True)
    for row, p in enumerate(pivots):
        if w[p]:
            w ^= MUL[w[p], basis[row]]
    return not w.any()


def combine(coeffs, basis: np.ndarray) -> np.ndarray:
    """Linear combination sum_i coeffs[i] * basis[i]."""
    out = np.zeros(basis.shape[1], dtype=np.uint8)
    for c, row in zip(coeffs, basis):
        if c:
            out ^= MUL[c, row]
    return out


def mat_vec(m: np.ndarray, v) -> np.ndarray:
    """m @ v over GF(16)."""
    v = np.asarray(v, dtype=np.uint8)
    prods = MUL[m, v[None, :]]
    return np.bitwise_xor.reduce(prods, axis=1) if m.shape[1] else np.zeros(m.shape[0], np.uint8)


def batch_full_column_rank(stack: np.ndarray) -> np.ndarray:
    """For a (B, r, t) stack, a bool array: True where the t columns are independent."""
    a = np.array(stack, dtype=np.uint8, copy=True)
    B, r, t = a.shape
    ok = np.ones(B, dtype=bool)
    if t > r:
        ok[:] = False
        return ok
    prow = np.zeros(B, dtype=np.int64)
    rows_idx = np.arange(r)[None, :]
    bidx = np.arange(B)
    for c in range(t):
        cand = (a[:, :, c] != 0) & (rows_idx >= prow[:, None])
        has = cand.any(axis=1)
        ok &= has
        piv = np.argmax(cand, axis=1)
        # swap pivot row into position prow
        pr = np.minimum(prow, r - 1)
        top = a[bidx, pr].copy()
        a[bidx, pr] = a[bidx, piv]
        a[bidx, piv] = top
        prow_row = a[bidx, pr]
        scale = INV[prow_row[:, c]]
        prow_row = MUL[scale[:, None], prow_row]
        prow_row[~has] = 0
        a[bidx, pr] = prow_row
        factors = a[:, :, c].copy()
        factors[bidx, pr] = 0
        a ^= MUL[factors[:, :, None], prow_row[:, None, :]]
        prow = prow + has
    return ok
