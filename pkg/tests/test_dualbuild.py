import random

import pytest

from m4cyclic.codebuild import ConstructionProfile, random_profile
from m4cyclic.dualbuild import (
    dual_cardinality_check,
    dual_generators,
    dual_heads,
    dual_report,
    dual_to_rprime_form,
    verify_orthogonality,
)
from m4cyclic.codebuild import GeneratorSet, assemble_generators
from m4cyclic.rring import RElem, RPoly


def test_heads_table_k2():
    k = 2
    assert dual_heads(0, k) == [(0, 0)]
    assert dual_heads(1, k) == []
    assert dual_heads(2, k) == [(1, 0)]
    assert dual_heads(k + 1, k) == [(0, 3), (2, 0)]
    assert dual_heads(4 * k + 1, k) == [(1, 3)]
    assert dual_heads(5 * k, k) == [(1, 3)]
    assert dual_heads(5 * k + 3, k) == [(0, 1), (1, 0)]


def test_zero_code_dual_is_full():
    prof = ConstructionProfile(3, 1, {})
    rep = dual_report(prof)
    assert rep["dims"] == {"code": 0, "dual": 12, "length": 12}
    assert rep["eta"] == 12 and rep["violations"] == []
    assert dual_to_rprime_form(prof).rprime_exponent == 0 + 12


def test_full_code_dual_is_zero():
    prof = ConstructionProfile(5, 2, {f: 1 for f in range(1, 6)})
    rep = dual_report(prof)
    assert rep["dims"]["dual"] == 0 and rep["violations"] == []
    form = dual_to_rprime_form(prof)
    assert all(a.deg == 5 for a in form.A)


def test_single_v_class_generators():
    prof = ConstructionProfile(3, 1, {2: 2})
    labels = dual_generators(prof).labels
    # f2 = x + w^5 sits in the v class; f1 f3 is unassigned
    assert labels == ["class 0: u^0 v^0 * x + w^10", "class 2: u^0 v^3 * x^2 + w^10*x + w^5"]


def test_hermitian_equals_euclidean_on_binary_factors():
    rng = random.Random(9)
    for k in (1, 2, 3):
        for _ in range(5):
            prof = random_profile(7, k, rng)
            assert dual_generators(prof, "hermitian").gens == dual_generators(prof, "euclidean").gens


def test_hermitian_differs_when_factors_move():
    prof = ConstructionProfile(5, 1, {2: 1})
    assert dual_generators(prof, "hermitian").gens != dual_generators(prof, "euclidean").gens


def test_orthogonality_detects_violation():
    one = GeneratorSet(1, 1, [RPoly.one(1, 1)], ["1"])
    rep = verify_orthogonality(one, one)
    assert not rep.ok and rep.violations[0]["inner_product"] != "0"


def test_orthogonality_of_annihilating_pair():
    # u is central and u^2 = 0 at k = 2
    u = GeneratorSet(3, 2, [RPoly.constant(3, RElem.monomial(2, 1, 0))], ["u"])
    rep = verify_orthogonality(u, u)
    assert rep.ok


def test_dual_cardinality_fields():
    card = dual_cardinality_check(ConstructionProfile(7, 1, {1: 1, 2: 2, 3: 4}))
    assert card["closed_form_ok"] and card["expected_total"] == 28


def test_mismatched_lengths():
    a = GeneratorSet(3, 1, [RPoly.one(3, 1)], ["1"])
    b = GeneratorSet(5, 1, [RPoly.one(5, 1)], ["1"])
    with pytest.raises(ValueError):
        verify_orthogonality(a, b)
