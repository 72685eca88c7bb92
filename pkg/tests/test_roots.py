import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from factorpoly.polynomials import UniPoly
from factorpoly.quadratic import sqrt_rational
from factorpoly.roots import (
    HALF_PLANE,
    Disc,
    DiscExterior,
    Outcome,
    RootFindingError,
    Sector,
    classify,
    find_roots,
    nonvanishing_in,
)
from factorpoly.sturm import distinct_real_roots, only_nonpositive_real_roots, real_root_count
from tests.strategies import rational_lists


def _sorted(zs):
    return sorted(zs, key=lambda z: (round(z.real, 6), round(z.imag, 6)))


def test_linear_exact():
    rs = find_roots(UniPoly([1, 1]))
    assert rs.all_roots() == [-1]
    assert max(rs.residuals) == 0


def test_triple_root():
    zs = find_roots(UniPoly([1, 3, 3, 1])).all_roots()
    assert len(zs) == 3 and all(abs(z + 1) < 1e-12 for z in zs)


def test_conjugate_pair():
    zs = _sorted(find_roots(UniPoly([1, 2, 2])).all_roots())
    assert abs(zs[0] - complex(-0.5, -0.5)) < 1e-12
    assert abs(zs[1] - complex(-0.5, 0.5)) < 1e-12


def test_zero_roots_deflated():
    rs = find_roots(UniPoly([0, 0, 1, 1]))
    assert rs.zero_multiplicity == 2
    assert sorted(abs(z) for z in rs.all_roots()) == [0, 0, 1]


def test_surd_coefficients():
    # 1 + sqrt(3) y + y^2 has roots on the unit circle at arg +-5pi/6
    zs = find_roots(UniPoly([1, sqrt_rational(3), 1])).all_roots()
    for z in zs:
        assert abs(abs(z) - 1) < 1e-12
        assert abs(abs(cmath.phase(z)) - 5 * math.pi / 6) < 1e-12


def test_non_convergence_is_loud():
    with pytest.raises(RootFindingError) as info:
        find_roots(UniPoly([1, 1, 1, 1, 1, 1, 1]), max_sweeps=1)
    assert info.value.residuals


@pytest.mark.parametrize(
    "coeffs, region, outcome",
    [
        ([1, 3, 3, 1], Sector(math.pi), Outcome.NONVANISHING),
        ([1, 2, 2], Sector(math.pi), Outcome.COUNTEREXAMPLE),
        ([1, 0, 1], HALF_PLANE, Outcome.NONVANISHING),
        ([0], HALF_PLANE, Outcome.IDENTICALLY_ZERO),
        ([1, 2, 2], Disc(1), Outcome.COUNTEREXAMPLE),
        ([1, 2, 2], DiscExterior(1), Outcome.NONVANISHING),
    ],
)
def test_region_verdicts(coeffs, region, outcome):
    v = nonvanishing_in(UniPoly(coeffs), region)
    assert v.outcome == outcome
    if outcome == Outcome.COUNTEREXAMPLE:
        assert region.margin(v.witness) > 0


def test_boundary_roots_flagged():
    v = nonvanishing_in(UniPoly([1, 0, 1]), HALF_PLANE)
    assert v.ok and v.boundary


def test_classify_examples():
    c = classify(UniPoly([1, 3, 3, 1]))
    assert c.real_rooted_nonpositive and abs(c.max_real_part + 1) < 1e-12
    assert classify(UniPoly([1, 1])).hurwitz_strict
    c = classify(UniPoly([1, Fraction(3, 4), Fraction(3, 4), 1]))
    assert abs(c.max_modulus - 1) <= 1e-9 and abs(c.min_modulus - 1) <= 1e-9
    assert not classify(UniPoly([1, 0, 1])).hurwitz_strict
    assert classify(UniPoly([1, 0, 1])).hurwitz_quasi


@given(st.lists(st.fractions(min_value=0, max_value=20, max_denominator=9), min_size=1, max_size=10))
def test_real_rooted_products(rs):
    p = UniPoly([1])
    for r in rs:
        p = p * UniPoly([r, 1])  # root at -r
    roots = find_roots(p)
    assert max(roots.residuals, default=0) <= 1e-10
    assert only_nonpositive_real_roots(p)
    got = sorted(z.real for z in roots.all_roots())
    want = sorted(-float(r) for r in rs)
    assert np.allclose(got, want, atol=1e-6 * max(1, max(map(abs, want))))


@given(rational_lists(min_size=2, max_size=9))
def test_real_root_count_agrees_with_sturm(c):
    p = UniPoly(c)
    if p.degree < 1:
        return
    zs = find_roots(p).all_roots()
    assert len(zs) == p.degree
    n_real_sturm = real_root_count(p)
    # every Sturm-counted real root must show up as a (nearly) real computed root
    near_real = sum(1 for z in zs if abs(z.imag) <= 1e-6 * max(1, abs(z)))
    assert near_real >= n_real_sturm


@given(rational_lists(min_size=2, max_size=9))
def test_conjugate_closure(c):
    p = UniPoly(c)
    if p.degree < 1:
        return
    zs = find_roots(p).all_roots()
    for z in zs:
        assert min(abs(z.conjugate() - w) for w in zs) <= 1e-6 * max(1, abs(z))


def test_sturm_small():
    p = UniPoly([-2, 0, 1])  # +-sqrt(2)
    assert distinct_real_roots(p) == 2
    assert distinct_real_roots(p, 0, 10) == 1
    assert real_root_count(UniPoly([1, 3, 3, 1])) == 3
    assert not only_nonpositive_real_roots(UniPoly([1, 2, 2]))
