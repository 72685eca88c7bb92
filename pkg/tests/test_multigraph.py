from fractions import Fraction

import pytest
from hypothesis import given

from factorpoly.multigraph import (
    DegreeBounds,
    GraphParseError,
    Multigraph,
    degree_vector,
    parse_graph,
    serialize_graph,
)
from tests.strategies import multigraphs


def test_single_edge():
    G = parse_graph("p 2 1\ne 1 2")
    assert G == Multigraph(2, ((1, 2, Fraction(1)),))
    assert degree_vector(G) == {1: 1, 2: 1}


def test_loop_counts_twice():
    G = parse_graph("p 1 1\ne 1 1")
    assert G.edges == ((1, 1, Fraction(1)),)
    assert degree_vector(G) == {1: 2}


def test_triangle_degrees():
    G = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3")
    assert degree_vector(G) == {1: 2, 2: 2, 3: 2}
    assert G.max_degree() == 2


def test_weights_and_comments():
    G = parse_graph("# weighted\np 2 2\n\ne 1 2 3/2\ne 1 2 0.5  \n")
    assert G.weights() == (Fraction(3, 2), Fraction(1, 2))
    assert not G.unit_weights


@pytest.mark.parametrize(
    "text, line",
    [
        ("p 2 1\ne 1 3", 2),
        ("p 2 1\ne 1 2 0", 2),
        ("p 2 1\ne 1 2 -1", 2),
        ("p 2 1\ne 1 x", 2),
        ("e 1 2\np 2 1", 1),
        ("p 2\ne 1 2", 1),
        ("p 2 1\nq 1 2", 2),
        ("p 2 1\np 2 1\ne 1 2", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_edge_count_mismatch():
    with pytest.raises(GraphParseError, match="declares 2"):
        parse_graph("p 2 2\ne 1 2")
    with pytest.raises(GraphParseError, match="header"):
        parse_graph("")


def test_degree_bounds_validation():
    G = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3")
    b = DegreeBounds.coerce(G, 0, [1, 2, 1])
    assert b.g == {1: 1, 2: 2, 3: 1}
    with pytest.raises(ValueError):
        DegreeBounds.constant(G, 2, 1)


@given(multigraphs())
def test_serialize_round_trip(G):
    assert parse_graph(serialize_graph(G)) == G
    assert Multigraph.from_dict(G.to_dict()) == G


@given(multigraphs())
def test_handshake(G):
    assert sum(degree_vector(G).values()) == 2 * G.m
