"""Finite undirected multigraphs with positive edge weights, and degree bounds.

Vertices are the dense indices ``1..n``.  Loops are allowed and add 2 to the
degree of their vertex; repeated edge lines give parallel edges.

Graph file format::

    # comment
    p <n> <m>
    e <u> <v> [lambda]

``lambda`` is a decimal or a rational ``a/b`` and defaults to 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping


class GraphParseError(ValueError):
    """Malformed graph text; ``line`` is the 1-based offending line (0 if global)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int, Fraction], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            lam = Fraction(e[2]) if len(e) > 2 else Fraction(1)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
            if lam <= 0:
                raise ValueError(f"edge ({u}, {v}) has non-positive weight {lam}")
            edges.append((u, v, lam))
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        return cls(n, tuple((u, v, Fraction(1)) for u, v in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def unit_weights(self) -> bool:
        return all(lam == 1 for _, _, lam in self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w, _ in self.edges)

    def max_degree(self) -> int:
        return max(degree_vector(self).values(), default=0)

    def weights(self) -> tuple[Fraction, ...]:
        return tuple(lam for _, _, lam in self.edges)

    def relabel(self, perm: Mapping[int, int]) -> "Multigraph":
        return Multigraph(self.n, tuple((perm[u], perm[v], lam) for u, v, lam in self.edges))

    def edge_multiset(self) -> tuple:
        return tuple(sorted((min(u, v), max(u, v), lam) for u, v, lam in self.edges))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [[u, v, str(lam)] for u, v, lam in self.edges],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Multigraph":
        return cls(int(data["n"]), tuple((e[0], e[1], Fraction(e[2])) for e in data["edges"]))


def degree_vector(G: Multigraph) -> dict[int, int]:
    deg = {v: 0 for v in G.vertices}
    for u, v, _ in G.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


@dataclass(frozen=True)
class DegreeBounds:
    f: Mapping[int, int] = field(default_factory=dict)
    g: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for v in set(self.f) | set(self.g):
            lo, hi = self.f.get(v, 0), self.g.get(v, 0)
            if lo < 0 or hi < 0:
                raise ValueError(f"negative degree bound at vertex {v}")
            if lo > hi:
                raise ValueError(f"f({v}) = {lo} exceeds g({v}) = {hi}")

    @classmethod
    def constant(cls, G: Multigraph, f: int, g: int) -> "DegreeBounds":
        return cls({v: f for v in G.vertices}, {v: g for v in G.vertices})

    @classmethod
    def coerce(cls, G: Multigraph, f, g) -> "DegreeBounds":
        """Accept ints (constant functions), mappings, or sequences indexed from vertex 1."""

        def expand(x):
            if isinstance(x, int):
                return {v: x for v in G.vertices}
            if isinstance(x, Mapping):
                return {int(v): int(x[v]) for v in x}
            return {v: int(val) for v, val in zip(G.vertices, x)}

        return cls(expand(f), expand(g))


def _parse_weight(token: str, lineno: int) -> Fraction:
    try:
        lam = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphParseError(f"bad edge weight {token!r}", lineno) from None
    if lam <= 0:
        raise GraphParseError(f"edge weight must be positive, got {token}", lineno)
    return lam


def parse_graph(text: str) -> Multigraph:
    n = m = None
    edges: list[tuple[int, int, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate header", lineno)
            if len(parts) != 3:
                raise GraphParseError("header must be 'p <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise GraphParseError("header counts must be nonnegative", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before header", lineno)
            if len(parts) not in (3, 4):
                raise GraphParseError("edge line must be 'e <u> <v> [lambda]'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex index out of range 1..{n}", lineno)
            lam = _parse_weight(parts[3], lineno) if len(parts) == 4 else Fraction(1)
            edges.append((u, v, lam))
        else:
            raise GraphParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise GraphParseError(f"header declares {m} edges, found {len(edges)}")
    return Multigraph(n, tuple(edges))


def serialize_graph(G: Multigraph) -> str:
    lines = [f"p {G.n} {G.m}"]
    for u, v, lam in G.edges:
        lines.append(f"e {u} {v}" if lam == 1 else f"e {u} {v} {lam}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
