from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from factorpoly.polynomials import UniPoly, binomial_row, poly_gcd, squarefree_decomposition
from factorpoly.quadratic import QuadSurd, parse_exact, sign, sqrt_rational, to_str
from tests.strategies import rational_lists


def P(*c):
    return UniPoly(c)


def test_trimming_and_degree():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P().degree == -1 and P(0, 0).is_zero()
    assert P(0, 0, 3).trailing_zeros() == 2
    assert P(0, 0, 3).shift_down(2) == P(3)


def test_arithmetic_small():
    assert P(1, 1) ** 3 == P(1, 3, 3, 1)
    q, r = P(1, 3, 3, 1).divmod(P(1, 1))
    assert q == P(1, 2, 1) and r.is_zero()
    assert P(1, 3, 3, 1)(Fraction(-1)) == 0
    assert binomial_row(4) == P(1, 4, 6, 4, 1)


def test_squarefree_decomposition_exact():
    p = P(1, 1) ** 3 * P(1, 0, 1)
    parts = {mult: s.monic() for s, mult in squarefree_decomposition(p)}
    assert parts == {1: P(1, 0, 1), 3: P(1, 1)}


def test_json_round_trip_with_surds():
    p = P(1, parse_exact("sqrt(3)"), 1)
    assert p.to_json() == ["1", "sqrt(3)", "1"]
    assert UniPoly.from_json(p.to_json()) == p


@given(rational_lists(), rational_lists())
def test_ring_laws(a, b):
    p, q = UniPoly(a), UniPoly(b)
    assert p * q == q * p
    assert (p + q) - q == p
    assume(not q.is_zero())
    d, r = p.divmod(q)
    assert d * q + r == p
    assert r.degree < q.degree


@given(rational_lists(max_size=5), rational_lists(max_size=5))
def test_gcd_divides(a, b):
    p, q = UniPoly(a), UniPoly(b)
    assume(not (p.is_zero() and q.is_zero()))
    g = poly_gcd(p, q)
    assert (p % g).is_zero() and (q % g).is_zero()


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=4))
def test_squarefree_reassembles(factors):
    p = UniPoly([1])
    for r, k in factors:
        p = p * UniPoly([-r, 1]) ** k
    rebuilt = UniPoly([1])
    for s, mult in squarefree_decomposition(p):
        rebuilt = rebuilt * s ** mult
    assert rebuilt.monic() == p.monic()


# -- quadratic field ---------------------------------------------------------


def test_surd_basics():
    r3 = sqrt_rational(3)
    assert isinstance(r3, QuadSurd)
    assert r3 * r3 == 3 and isinstance(r3 * r3, Fraction)
    assert sqrt_rational(Fraction(1, 4)) == Fraction(1, 2)
    assert sqrt_rational(12) == 2 * r3
    assert sign(r3 - Fraction(17, 10)) == 1 and sign(r3 - Fraction(18, 10)) == -1
    assert to_str(1 + 2 * sqrt_rational(2)) == "1+2*sqrt(2)"
    assert parse_exact("1+2*sqrt(2)") == 1 + 2 * sqrt_rational(2)
    assert parse_exact("0.75") == Fraction(3, 4)


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        sqrt_rational(2) + sqrt_rational(3)


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50).filter(bool), st.sampled_from([2, 3, 5, 6]))
def test_surd_sign_matches_float(a, b, m):
    x = QuadSurd(a, b, m)
    fx = float(a) + float(b) * m ** 0.5
    if abs(fx) > 1e-9:
        assert sign(x) == (1 if fx > 0 else -1)
    assert x * x.inverse() == 1
