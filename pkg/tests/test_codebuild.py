import json
import random

import numpy as np
import pytest

from m4cyclic.codebuild import (
    ConstructionProfile,
    assemble_generators,
    cardinality_xi,
    class_count,
    code_from_rows,
    crt_decompose,
    eta_weights,
    gray_span,
    random_profile,
    rprime_lists,
    xi_weights,
)
from m4cyclic.f16poly import F16Poly
from m4cyclic.rring import RPoly


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_weights_complement(k):
    xi, eta = xi_weights(k), eta_weights(k)
    assert len(xi) == len(eta) == class_count(k) == 5 * k + 4
    assert all(a + b == 4 * k for a, b in zip(xi, eta))
    assert xi[0] == 0 and xi[1] == 4 * k


def test_rprime_lists_shape():
    for k in (1, 2, 3):
        assert len(rprime_lists(k)) == 5 * k + 3


def test_profile_json_roundtrip():
    prof = random_profile(5, 2, random.Random(3), unit_deg=None)
    again = ConstructionProfile.from_json(json.loads(json.dumps(prof.to_json())))
    assert again.to_json() == prof.to_json()
    assert assemble_generators(again).gens == assemble_generators(prof).gens


def test_profile_validation():
    with pytest.raises(ValueError):
        ConstructionProfile(3, 1, {1: 7}).validate()  # u-headed class at k = 1
    with pytest.raises(ValueError):
        ConstructionProfile(3, 2, {4: 1}).validate()
    with pytest.raises(ValueError):
        ConstructionProfile(3, 2, {1: 9}, betas={(1, 1): F16Poly([1, 1])}).validate()  # x + 1 is a zero divisor
    with pytest.raises(ValueError):
        ConstructionProfile.from_json({"n": 3, "k": 1, "classes": {"1": [1], "2": [1]}})


@pytest.mark.parametrize("n, k", [(3, 1), (5, 2), (7, 1)])
def test_zero_and_full(n, k):
    m = len(ConstructionProfile(n, k, {}).factors)
    zero = ConstructionProfile(n, k, {})
    full = ConstructionProfile(n, k, {f: 1 for f in range(1, m + 1)})
    assert gray_span(assemble_generators(zero)).dim == 0 == cardinality_xi(zero).xi
    assert gray_span(assemble_generators(full)).dim == 4 * k * n == cardinality_xi(full).xi


@pytest.mark.parametrize("cls", [1, 2, 3, 4])
def test_single_monomial_class_binary_factor(cls):
    # binary factors commute with every element of R, so the rank is the closed form
    prof = ConstructionProfile(7, 1, {2: cls})
    assert gray_span(assemble_generators(prof)).dim == cardinality_xi(prof).xi


def test_xi_plus_eta_identity():
    rng = random.Random(5)
    for n, k in [(3, 1), (5, 2), (7, 3)]:
        for _ in range(10):
            card = cardinality_xi(random_profile(n, k, rng))
            assert card.xi + card.eta == 4 * k * n


def test_crt_decompose():
    rep = crt_decompose(5, 1)
    assert rep["ok"]
    assert rep["commutes_with_v"][0]  # the x + 1 idempotent is binary
    assert not all(rep["commutes_with_v"])
    rep7 = crt_decompose(7, 2)
    assert rep7["ok"] and all(rep7["commutes_with_v"])


def test_linear_code_basics():
    rows = np.array([[1, 2, 3, 0], [0, 1, 1, 5]], dtype=np.uint8)
    c = code_from_rows(rows, 4)
    assert c.dim == 2
    H = c.parity_check()
    assert H.shape == (2, 4)
    w = c.encode([3, 7])
    assert c.contains(w)
    assert c.same_space(code_from_rows(c.basis[::-1], 4))


def test_gray_span_of_one():
    c = gray_span([RPoly.one(3, 2)], 3, 2)
    assert c.params() == (24, 24)
