import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from m4cyclic import genexpr
from m4cyclic.f16poly import factor_xn_minus_1
from m4cyclic.rring import RElem, RPoly

FS5 = factor_xn_minus_1(5)
FS3 = factor_xn_minus_1(3)


def test_literal_example_parses():
    text = "(w^3v^3 + w^5v^2 + w^4v + w^{13} +w )f_2 + wf_1"
    p = genexpr.parse(text, FS5, 1)
    assert not p.is_zero()
    assert genexpr.parse(genexpr.format(p), FS5, 1) == p


def test_written_order_matters():
    vw = genexpr.parse("v w", FS3, 1)
    wv = genexpr.parse("w v", FS3, 1)
    assert vw != wv
    assert genexpr.format(vw) == "w^8*v + w^10"


def test_implicit_and_explicit_product_agree():
    assert genexpr.parse("w^2 u v f_2", FS3, 2) == genexpr.parse("w^2*u*v*f_2", FS3, 2)
    assert genexpr.parse("f{2}", FS3, 1) == genexpr.parse("f_2", FS3, 1)


def test_nilpotent_overflow():
    assert genexpr.parse("u^2", FS3, 2).is_zero()
    assert genexpr.parse("v^4", FS3, 3).is_zero()
    assert genexpr.parse("(u + 1)^2", FS3, 2) == RPoly.one(3, 2)


def test_integers_reduce_mod_two():
    assert genexpr.parse("2", FS3, 1).is_zero()
    assert genexpr.parse("3", FS3, 1) == RPoly.one(3, 1)


def test_w_exponent_wraps():
    assert genexpr.parse("w^15", FS3, 1) == RPoly.one(3, 1)


@pytest.mark.parametrize("text, pos", [
    ("(w v + 1", 8),
    ("w + + v", 4),
    ("w $ v", 2),
    ("f_9", 0),
    ("", 0),
    ("w^v", 2),
])
def test_errors_have_positions(text, pos):
    with pytest.raises(genexpr.ExprError) as e:
        genexpr.parse(text, FS3, 1)
    assert e.value.pos == pos


@settings(max_examples=60)
@given(st.lists(st.integers(0, 0xFFFF), min_size=3, max_size=3))
def test_format_roundtrip(layers):
    p = RPoly(3, 1, [RElem(1, [x]) for x in layers])
    assert genexpr.parse(genexpr.format(p), FS3, 1) == p


def test_format_roundtrip_k3(rng):
    from conftest import rand_poly

    for _ in range(20):
        p = rand_poly(5, 3, rng)
        assert genexpr.parse(genexpr.format(p), FS5, 3) == p
