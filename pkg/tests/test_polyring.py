import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_growth.polyring import (
    ONE,
    ZERO,
    NonIntegralSeries,
    Polynomial,
    RationalFunction,
    poly_add,
    poly_divmod_exact,
    poly_from_json,
    poly_gcd,
    poly_mul,
    poly_pow,
    poly_to_json,
    reciprocal_polynomial,
    rf_combine,
    rf_from_json,
    rf_to_json,
    series_expand,
)

P = lambda *c: Polynomial(c)  # noqa: E731
RF = RationalFunction.make

polys = st.lists(st.integers(-20, 20), max_size=6).map(lambda c: Polynomial(tuple(c)))
nonzero_polys = polys.filter(lambda a: not a.is_zero())


def test_trailing_zeros_trimmed():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).is_zero()
    assert P(0, 0).degree == -1


def test_add():
    assert poly_add(P(1, 1), P(1, 2)) == P(2, 3)
    assert poly_add(P(3, 0, 1), ZERO) == P(3, 0, 1)
    assert poly_add(P(1, 1), P(-1, -1)).coeffs == ()


def test_mul():
    assert poly_mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert poly_mul(P(4, 0, -3), ONE) == P(4, 0, -3)
    assert poly_mul(P(1, 1), P(1, -1)) == P(1, 0, -1)


def test_pow():
    assert poly_pow(P(0, 2), 2) == P(0, 0, 4)
    assert poly_pow(P(5, 7), 0) == ONE
    assert poly_pow(P(1, 1), 3) == P(1, 3, 3, 1)
    with pytest.raises(ValueError):
        poly_pow(P(1, 1), -1)


def test_gcd_sign_convention():
    # 1 - t^2 = (1 - t)(1 + t); the gcd is reported with positive leading term
    assert poly_gcd(P(1, 0, -1), P(1, -1)) == P(-1, 1)
    assert poly_gcd(P(1, 1), P(1, 2)) == ONE
    assert poly_gcd(P(-6, 0, 4), ZERO) == P(-3, 0, 2)
    with pytest.raises(ValueError):
        poly_gcd(ZERO, ZERO)


def test_gcd_nontrivial_common_factor():
    f = P(2, 1) * P(-1, 3) * P(1, 0, 1)
    g = P(2, 1) * P(1, 0, 1) * P(5, 5, 1)
    assert poly_gcd(f, g) == P(2, 1) * P(1, 0, 1)
    assert poly_gcd(f * 6, g * 10) == P(2, 1) * P(1, 0, 1)


def test_exact_division():
    assert poly_divmod_exact(P(1, 0, -1), P(1, -1)) == P(1, 1)
    with pytest.raises(ArithmeticError):
        poly_divmod_exact(P(1, 0, 1), P(1, -1))


def test_rf_combine():
    assert rf_combine(RF(1, P(1, -1)), RF(P(1, 1)), "mul") == RF(P(1, 1), P(1, -1))
    a = RF(P(1, 2), P(3, 0, 1))
    assert rf_combine(a, a, "sub") == RF(0)
    assert rf_combine(a, a, "sub").den == ONE
    assert rf_combine(RF(1, P(1, -1)), RF(1, P(1, 1)), "add") == RF(2, P(1, 0, -1))
    with pytest.raises(ZeroDivisionError):
        rf_combine(a, RF(0), "div")
    with pytest.raises(ValueError):
        rf_combine(a, a, "pow")


def test_rf_normal_form():
    f = RF(P(2, 0, -2), P(4, -4))  # 2(1-t)(1+t) / 4(1-t)
    assert (f.num, f.den) == (P(1, 1), P(2))
    g = RF(P(1), P(1, -1))
    assert g.den.lead > 0 and (g.num, g.den) == (P(-1), P(-1, 1))
    with pytest.raises(ZeroDivisionError):
        RF(1, ZERO)


def test_reciprocal():
    assert reciprocal_polynomial(P(1, 0, -2)) == P(-2, 0, 1)
    assert reciprocal_polynomial(P(1, 2)) == P(2, 1)
    assert reciprocal_polynomial(P(1, 3, 1)) == P(1, 3, 1)
    with pytest.raises(ValueError):
        reciprocal_polynomial(ZERO)


def test_series_expand():
    assert series_expand(RF(P(1, 1), P(1, -1)), 4) == [1, 2, 2, 2, 2]
    assert series_expand(RF(1), 3) == [1, 0, 0, 0]
    assert series_expand(RF(P(1, 4, 1), P(1, -1) ** 2), 4) == [1, 6, 12, 18, 24]


def test_series_expand_errors():
    with pytest.raises(ZeroDivisionError):
        series_expand(RF(1, P(0, 1)), 3)
    with pytest.raises(NonIntegralSeries):
        series_expand(RF(1, P(2, -1)), 3)
    assert series_expand(RF(1, P(2, -1)), 2, integral=False) == [
        Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]


def test_json_roundtrip():
    a = P(1, 2, 0, -1)
    assert poly_to_json(a) == ["1", "2", "0", "-1"]
    assert poly_from_json(poly_to_json(a)) == a
    f = RF(P(1, 4, 1), P(1, -1) ** 2)
    s = json.dumps(rf_to_json(f))
    assert rf_from_json(json.loads(s)) == f
    assert json.dumps(rf_to_json(rf_from_json(json.loads(s)))) == s


def test_big_integer_coefficients():
    big = 10**40 + 7
    f = RF(P(big), P(1, -1))
    assert series_expand(f, 3) == [big] * 4
    assert poly_from_json(poly_to_json(P(big, -big))) == P(big, -big)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(nonzero_polys)
def test_reciprocal_involution(a):
    if a[0] != 0:
        assert reciprocal_polynomial(reciprocal_polynomial(a)) == a


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert g.lead > 0
    poly_divmod_exact(a.primitive(), g)
    poly_divmod_exact(b.primitive(), g)


@given(polys, nonzero_polys.filter(lambda d: d[0] != 0), st.integers(0, 15))
def test_series_multiplies_back(num, den, N):
    f = RF(num, den)
    terms = series_expand(f, N, integral=False)
    lhs = [sum(terms[k] * f.den[n - k] for k in range(n + 1)) for n in range(N + 1)]
    assert lhs == [f.num[n] for n in range(N + 1)]


@settings(max_examples=50)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_normalization_is_canonical(a, b, c):
    # (a/b) * (c/c) and (a*c)/(b*c) reached by different routes
    x = RF(a, b) * RF(c, c)
    y = RF(a * c, b * c)
    assert (x.num, x.den) == (y.num, y.den)
    assert RF(a, b) + RF(c, b) == RF(a + c, b)
