import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from factorpoly.families import cycle
from factorpoly.fugacities import (
    FugacityError,
    FugacitySpec,
    binomial_reciprocal_fugacities,
    gamma_poly,
    hadamard_a,
    hadamard_b,
    hadamard_c,
    interval_fugacities,
    lemma_gamma,
    preset_spec,
    q_poly,
    recover_fugacities,
    ruelle_fugacities,
    set_fugacities,
    spec_from_config,
    threshold,
    thm26_fugacities,
)
from factorpoly.polynomials import UniPoly
from factorpoly.quadratic import sqrt_rational
from factorpoly.sturm import only_nonpositive_real_roots
from tests.strategies import nonneg_fracs

R3 = sqrt_rational(3)


def P(*c):
    return UniPoly(c)


def test_gamma_examples():
    assert gamma_poly(2, (1, 1, 1)) == P(1, 2, 1)
    assert gamma_poly(1, (1, 1)) == P(1, 1)
    assert gamma_poly(2, (1, 1, 0)) == P(1, 2)


def test_named_sequences():
    assert interval_fugacities(0, 1, 2) == (1, 1, 0)
    assert ruelle_fugacities(2) == (1, 1, 1)
    assert set_fugacities({0, 2}, 2) == (1, 0, 1)
    assert binomial_reciprocal_fugacities(2) == (1, Fraction(1, 2), 1)
    assert binomial_reciprocal_fugacities(3) == (1, Fraction(1, 3), Fraction(1, 3), 1)
    assert gamma_poly(2, binomial_reciprocal_fugacities(2)) == P(1, 1, 1)
    with pytest.raises(FugacityError):
        interval_fugacities(2, 1, 3)


def test_ruelle_irrational():
    u = ruelle_fugacities(3)
    assert u[1] * u[1] == Fraction(4, 3)


def test_hadamard_examples():
    assert hadamard_a(P(1, 2, 1), P(1, 1, 1)) == P(1, 2, 1)
    assert hadamard_b(P(1, 1), P(1, 1)) == P(1, 1)
    assert hadamard_a(P(1, 3, 3, 1), P(1, 1)) == P(1, 3)
    # c-transform of two real-rooted polynomials stays real-rooted
    assert only_nonpositive_real_roots(hadamard_c(P(1, 2, 1), P(2, 3, 1), 2))


def test_thm26_examples():
    assert thm26_fugacities(0, 1, 2) == (1, 1, 0)
    assert thm26_fugacities(1, 1, 2) == (0, 1, 0)
    assert thm26_fugacities(0, 2, 2, "sqrt3") == (1, R3, 1)


def test_lemma_thresholds():
    assert threshold("L21", "c", D=2, k=1) == 1
    assert lemma_gamma("L21", D=2, k=1, beta=1) == P(1, 2, 1)
    assert threshold("L22", "c") == 3
    assert threshold("L23", "c", p=1) == 1
    with pytest.raises(ValueError):
        lemma_gamma("L21", D=2, k=2, beta=1)


@given(st.integers(0, 6).flatmap(lambda D: st.tuples(st.just(D), st.lists(nonneg_fracs, min_size=D + 1, max_size=D + 1))))
def test_gamma_round_trip(data):
    D, u = data
    assert recover_fugacities(D, gamma_poly(D, u)) == tuple(u)


def test_q_poly():
    assert q_poly((1, 1, 2)) == P(1, 1, 1)


def test_config_presets_and_raw():
    G = cycle(3)
    cfg = {"1": {"u": ["1", "sqrt(3)", "1"]}, "default": {"preset": "interval", "f": 0, "g": 1}}
    spec = spec_from_config(G, cfg)
    assert spec.seq(1) == (1, R3, 1)
    assert spec.seq(2) == (1, 1, 0)
    assert FugacitySpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec


def test_config_errors():
    G = cycle(3)
    with pytest.raises(FugacityError):
        spec_from_config(G, {"1": {"u": ["1", "-1", "1"]}, "default": {"preset": "binrec"}})
    with pytest.raises(FugacityError):
        spec_from_config(G, {"1": {"preset": "binrec"}})
    with pytest.raises(FugacityError):
        spec_from_config(G, {"default": {"preset": "nope"}})
    with pytest.raises(FugacityError):
        spec_from_config(G, {"default": {"u": ["1", "1"], "D": 1}})


def test_thm26_preset_clamps_g():
    from factorpoly.multigraph import Multigraph

    G = Multigraph.from_pairs(3, [(1, 2)])  # vertex 3 isolated
    spec = preset_spec(G, "thm26", f=0, g=2)
    assert spec.seq(3) == (1,)
    assert spec.seq(1) == (1, 1)
