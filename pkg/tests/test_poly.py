from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from secrecygain.poly import PolyQ, format_poly, from_factored, poly_gcd, square_free_part

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)
polys = st.lists(rationals, max_size=6).map(PolyQ)


def test_basic_arithmetic():
    p = PolyQ([1, 1])
    assert p * p == PolyQ([1, 2, 1])
    assert p**3 == PolyQ([1, 3, 3, 1])
    assert p - p == PolyQ()
    assert p(F(1, 2)) == F(3, 2)
    assert PolyQ([0, 0, 3]).derivative() == PolyQ([0, 6])


def test_trailing_zeros_stripped():
    assert PolyQ([1, 0, 0]).degree == 0
    assert PolyQ([0, 0]).is_zero()


@given(polys, st.lists(rationals, max_size=5).map(lambda c: PolyQ(c + [1])))
def test_divmod_reconstructs(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_and_square_free():
    a = PolyQ([-1, 1]) ** 2 * PolyQ([2, 1])
    assert poly_gcd(a, a.derivative()) == PolyQ([-1, 1])
    assert square_free_part(a) == (PolyQ([-1, 1]) * PolyQ([2, 1])).monic()


def test_from_factored():
    assert from_factored([(1, 3, 0), (F(-45, 16), 0, 2)]) == PolyQ([1, -3, F(3, 16), -1])


def test_format():
    assert format_poly(PolyQ([1, -3, F(3, 16), -1])) == "1 - 3*z + 3/16*z^2 - z^3"
    assert format_poly(PolyQ()) == "0"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        PolyQ([1]).divmod(PolyQ())
