import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from factorpoly.enumeration import (
    CapExceeded,
    brute_counts,
    dp_counts,
    evaluate_F,
    factor_counts,
    interval_spec,
    min_degree_order,
    sample_nonvanishing,
)
from factorpoly.families import complete, cycle, path
from factorpoly.fugacities import FugacitySpec, preset_spec
from factorpoly.multigraph import DegreeBounds, Multigraph
from factorpoly.polynomials import UniPoly, binomial_row
from factorpoly.roots import HALF_PLANE, Disc, DiscExterior, Outcome, Sector
from tests.strategies import multigraphs, nonneg_fracs

EDGE = Multigraph.from_pairs(2, [(1, 2)])


def _interval(G, f, g):
    return interval_spec(G, DegreeBounds.coerce(G, f, g))


def test_brute_examples():
    assert brute_counts(EDGE, _interval(EDGE, 0, 1)) == [1, 1]
    assert brute_counts(cycle(3), _interval(cycle(3), 0, 1)) == [1, 3, 0, 0]
    assert brute_counts(cycle(3), _interval(cycle(3), 0, 2)) == [1, 3, 3, 1]


def test_dp_examples():
    assert UniPoly(dp_counts(EDGE, _interval(EDGE, 0, 1))) == UniPoly([1, 1])
    assert UniPoly(dp_counts(cycle(3), _interval(cycle(3), 0, 2))) == UniPoly([1, 3, 3, 1])
    assert factor_counts(complete(4), 1, 1) == [0, 0, 3]
    assert factor_counts(cycle(3), 0, 1) == [1, 3]
    assert factor_counts(EDGE, 1, 1) == [0, 1]


def test_matchings_of_paths_are_fibonacci():
    # total matchings of P_n is the (n+1)-th Fibonacci number
    fib = [1, 1]
    for _ in range(12):
        fib.append(fib[-1] + fib[-2])
    for n in range(2, 12):
        assert sum(factor_counts(path(n), 0, 1)) == fib[n]


@given(multigraphs(max_n=4, max_m=7), st.data())
def test_dp_matches_brute_on_random_bounds(G, data):
    f = [data.draw(st.integers(0, 2)) for _ in G.vertices]
    g = [fv + data.draw(st.integers(0, 2)) for fv in f]
    u = _interval(G, f, g)
    assert dp_counts(G, u) == brute_counts(G, u)


@given(multigraphs(max_n=4, max_m=6), st.data())
def test_dp_matches_brute_with_rational_fugacities(G, data):
    from factorpoly.multigraph import degree_vector

    deg = degree_vector(G)
    seqs = {v: tuple(data.draw(st.lists(nonneg_fracs, min_size=deg[v] + 1, max_size=deg[v] + 1)))
            for v in G.vertices}
    u = FugacitySpec(seqs, dict(deg))
    assert dp_counts(G, u) == brute_counts(G, u)


@given(multigraphs(max_n=4, max_m=6))
def test_all_degrees_allowed_gives_binomial_row(G):
    u = _interval(G, 0, max(G.max_degree(), 0))
    assert UniPoly(dp_counts(G, u)) == binomial_row(G.m)


@given(multigraphs(max_n=4, max_m=6), st.permutations(range(1, 5)))
def test_relabeling_invariance(G, perm):
    perm = [p for p in perm if p <= G.n]
    H = G.relabel({v: perm[v - 1] for v in G.vertices})
    assert factor_counts(G, 0, 2) == factor_counts(H, 0, 2)


@given(multigraphs(max_n=4, max_m=6), st.data())
def test_edge_order_irrelevant(G, data):
    u = _interval(G, 0, 1)
    order = data.draw(st.permutations(range(G.m)))
    assert dp_counts(G, u, order=list(order)) == dp_counts(G, u)


def test_weighted_edges():
    G = Multigraph(2, ((1, 2, Fraction(3)), (1, 2, Fraction(1, 2))))
    assert dp_counts(G, _interval(G, 0, 2)) == brute_counts(G, _interval(G, 0, 2)) == [1, Fraction(7, 2), Fraction(3, 2)]


def test_caps_refuse_loudly():
    G = complete(9)
    with pytest.raises(CapExceeded, match="brute"):
        brute_counts(G, _interval(G, 0, 1))
    with pytest.raises(CapExceeded, match="dp_counts|state"):
        dp_counts(G, _interval(G, 0, 8), state_cap=50)


def test_min_degree_order_is_permutation():
    G = complete(5)
    assert sorted(min_degree_order(G)) == list(range(G.m))


def test_evaluate_F():
    assert evaluate_F(EDGE, {1: 1, 2: 1}) == 2
    assert abs(evaluate_F(EDGE, {1: 1j, 2: 1j})) == 0
    assert evaluate_F(cycle(3), {1: 1, 2: 1, 3: 1}) == 8


def test_sampling_examples():
    assert sample_nonvanishing(EDGE, HALF_PLANE, 1000, seed=1).outcome == Outcome.NONVANISHING
    G = cycle(3)
    v = sample_nonvanishing(G, Sector(math.pi / 2), 1000, seed=2, fugacities=_interval(G, 0, 1))
    assert v.outcome == Outcome.NONVANISHING and v.probabilistic
    assert sample_nonvanishing(G, Disc(1), 1000, seed=3).outcome == Outcome.NONVANISHING
    assert sample_nonvanishing(G, DiscExterior(1), 1000, seed=4).outcome == Outcome.NONVANISHING


def test_sampling_finds_planted_zero():
    # 1 + z1 z2 vanishes at z1 = z2 = i, inside S[pi]; the sampler should get close
    v = sample_nonvanishing(EDGE, Sector(math.pi), 20000, seed=0)
    assert v.detail["min_ratio"] < 0.05


def test_sampling_is_seeded():
    G = cycle(4)
    a = sample_nonvanishing(G, HALF_PLANE, 500, seed=9, fugacities=preset_spec(G, "binrec"))
    b = sample_nonvanishing(G, HALF_PLANE, 500, seed=9, fugacities=preset_spec(G, "binrec"))
    assert a.to_json() == b.to_json()
