import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from m4cyclic.codebuild import code_from_rows, gray_span
from m4cyclic.metrics import (
    hamming_weight,
    lee_profile,
    mds_gap,
    min_distance_certified,
    min_distance_exhaustive,
)
from m4cyclic.rring import RElem, RPoly


@st.composite
def small_codes(draw):
    length = draw(st.integers(3, 12))
    dim = draw(st.integers(1, min(4, length)))
    rows = draw(st.lists(st.lists(st.integers(0, 15), min_size=length, max_size=length),
                         min_size=dim, max_size=dim))
    return code_from_rows(np.array(rows, dtype=np.uint8), length)


@settings(max_examples=40, deadline=None)
@given(small_codes())
def test_certified_matches_exhaustive(code):
    a, b = min_distance_exhaustive(code), min_distance_certified(code)
    assert a.d == b.d
    if b.d is not None:
        assert code.contains(b.witness) and hamming_weight(b.witness) == b.d
        assert b.certificate == "column-independence"


def test_empty_code():
    code = code_from_rows(np.zeros((0, 5), dtype=np.uint8), 5)
    assert min_distance_exhaustive(code).d is None
    res = min_distance_certified(code)
    assert res.d is None and res.to_json()["d"] == "inf"


def test_full_space():
    code = code_from_rows(np.eye(8, dtype=np.uint8), 8)
    assert min_distance_certified(code).d == 1
    assert mds_gap(8, 8, 1) == 0


def test_unit_row_gives_one():
    rows = np.array([[0, 0, 7, 0, 0, 0], [1, 1, 1, 1, 1, 1]], dtype=np.uint8)
    assert min_distance_certified(code_from_rows(rows, 6)).d == 1


def test_mds_gap_values():
    assert mds_gap(20, 14, 5) == 2
    assert mds_gap(20, 19, 2) == 0


def test_reed_solomon_is_mds():
    # evaluation code of degree < 4 polynomials at all 15 nonzero points
    from m4cyclic import gf2e

    pts = [gf2e.wpow(i) for i in range(15)]
    rows = np.array([[gf2e.power(p, j) for p in pts] for j in range(4)], dtype=np.uint8)
    code = code_from_rows(rows, 15)
    res = min_distance_certified(code)
    assert res.d == 12 and mds_gap(15, 4, res.d) == 0
    assert res.work["subsets"] > 0


def test_certificate_soundness():
    rng = np.random.default_rng(4)
    code = code_from_rows(rng.integers(0, 16, (6, 14)), 14)
    res = min_distance_certified(code)
    for _ in range(200):
        v = np.zeros(14, dtype=np.uint8)
        idx = rng.choice(14, res.d - 1, replace=False)
        v[idx] = rng.integers(1, 16, res.d - 1)
        assert not code.contains(v)


def test_open_on_work_limit():
    rng = np.random.default_rng(2)
    code = code_from_rows(rng.integers(0, 16, (30, 40)), 40)
    res = min_distance_certified(code, max_subsets=10)
    assert res.certificate == "open" and res.d is None and res.upper is not None


def test_witness_json_uses_w_notation():
    code = code_from_rows(np.array([[2, 3, 0]], dtype=np.uint8), 3)
    js = min_distance_certified(code).to_json()
    assert js["witness"] == ["1", "w^3", "0"]  # basis rows are normalised
    assert js["witness_support"] == [0, 1]


def test_lee_profile_zero():
    assert lee_profile([RPoly.zero(3, 1)]) == {0: 1}


def test_lee_profile_full_r1():
    words = (RPoly(1, 1, [RElem(1, [x])]) for x in range(1 << 16))
    hist = lee_profile(words, bound=1 << 16)
    assert sorted(hist) == [0, 1, 2, 3, 4]
    assert sum(hist.values()) == 1 << 16
    # theta is a GF(16)-linear bijection onto GF(16)^4
    assert hist[1] == 4 * 15 and hist[4] == 15**4


def test_lee_min_equals_hamming_min():
    g = RPoly.constant(3, RElem.monomial(1, 0, 3))  # v^3
    code = gray_span([g], 3, 1)
    hist = lee_profile((code, 3, 1))
    lee_min = min(w for w in hist if w)
    assert lee_min == min_distance_exhaustive(code).d
