from hypothesis import given
from hypothesis import strategies as st

from m4cyclic import gf2e

el = st.integers(0, 15)
nz = st.integers(1, 15)


def test_tables():
    assert gf2e.wpow(0) == 1 and gf2e.wpow(15) == 1
    assert gf2e.wpow(4) == gf2e.wpow(1) ^ 1  # w^4 = w + 1
    assert sorted(gf2e.wpow(i) for i in range(15)) == list(range(1, 16))
    assert gf2e.mult_order(2, 5) == 4


@given(el, el, el)
def test_field_axioms(a, b, c):
    assert gf2e.mul(a, b) == gf2e.mul(b, a)
    assert gf2e.mul(a, gf2e.mul(b, c)) == gf2e.mul(gf2e.mul(a, b), c)
    assert gf2e.mul(a, b ^ c) == gf2e.mul(a, b) ^ gf2e.mul(a, c)


@given(nz)
def test_inverse_and_log(a):
    assert gf2e.mul(a, gf2e.inv(a)) == 1
    assert gf2e.wpow(gf2e.log(a)) == a
    assert gf2e.div(a, a) == 1


@given(el)
def test_fmt_parse_roundtrip(a):
    assert gf2e.parse(gf2e.fmt(a)) == a


@given(el)
def test_conj_is_frobenius_square(a):
    assert gf2e.conj(a) == gf2e.power(a, 4)
    assert gf2e.conj(gf2e.conj(a)) == gf2e.power(a, 16) == a


def test_conj_fixes_f4():
    for a in (0, 1, gf2e.wpow(5), gf2e.wpow(10)):
        assert gf2e.power(a, 4) == a


def test_irreducible_over_gf16():
    assert gf2e.is_irreducible([1, 1, 0, 1])  # x^3 + x + 1, degree prime to 4
    assert not gf2e.is_irreducible([1, 1, 0, 0, 1])  # x^4 + x + 1 has the root w
    assert not gf2e.is_irreducible([1, 0, 1])  # (x + 1)^2
