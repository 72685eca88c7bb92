"""Deterministic graph families for the harness and the conjecture scanner."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Iterator, Optional

from .multigraph import Multigraph, degree_vector


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Multigraph.from_pairs(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Multigraph:
    """Path on n vertices (n - 1 edges)."""
    return Multigraph.from_pairs(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def canonical_key(n: int, pairs) -> tuple:
    """Smallest sorted edge list over all relabelings (exact isomorphism class)."""
    best = None
    for perm in permutations(range(1, n + 1)):
        key = tuple(sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in pairs))
        if best is None or key < best:
            best = key
    return best


def all_multigraphs(max_n: int, max_m: int, min_n: int = 1, canonical_upto: int = 3) -> Iterator[Multigraph]:
    """Every multigraph (loops and parallel edges allowed) with n <= max_n, m <= max_m.

    Isomorphic duplicates are dropped for n <= canonical_upto only.
    """
    for n in range(min_n, max_n + 1):
        types = [(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]
        seen: set = set()
        for m in range(max_m + 1):
            for pairs in combinations_with_replacement(types, m):
                if n <= canonical_upto:
                    key = canonical_key(n, pairs)
                    if key in seen:
                        continue
                    seen.add(key)
                yield Multigraph.from_pairs(n, pairs)


def random_multigraph(n: int, m: int, rng: random.Random, loops: bool = True, simple: bool = False) -> Multigraph:
    if simple:
        pool = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        if m > len(pool):
            raise ValueError(f"a simple graph on {n} vertices has at most {len(pool)} edges")
        return Multigraph.from_pairs(n, rng.sample(pool, m))
    pairs = []
    for _ in range(m):
        u, v = rng.randint(1, n), rng.randint(1, n)
        while u == v and not loops:
            u, v = rng.randint(1, n), rng.randint(1, n)
        pairs.append((min(u, v), max(u, v)))
    return Multigraph.from_pairs(n, pairs)


def random_graphs(
    count: int,
    seed: int,
    n_range: tuple[int, int],
    m_range: tuple[int, int],
    loops: bool = True,
    simple: bool = False,
    max_degree: Optional[tuple[int, int]] = None,
) -> list[Multigraph]:
    """``count`` random graphs; ``max_degree=(lo, hi)`` keeps only graphs with lo <= Delta <= hi."""
    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise RuntimeError("rejection sampling for random graphs is not converging")
        n = rng.randint(*n_range)
        hi = m_range[1]
        if simple:
            hi = min(hi, n * (n - 1) // 2)
        if hi < m_range[0]:
            continue
        m = rng.randint(m_range[0], hi)
        G = random_multigraph(n, m, rng, loops=loops, simple=simple)
        if max_degree is not None and not max_degree[0] <= G.max_degree() <= max_degree[1]:
            continue
        out.append(G)
    return out


def named_graphs(kind: str, max_n: int) -> list[Multigraph]:
    if kind == "cycles":
        return [cycle(n) for n in range(3, max_n + 1)]
    if kind == "paths":
        return [path(n) for n in range(2, max_n + 1)]
    if kind == "complete":
        return [complete(n) for n in range(2, max_n + 1)]
    raise ValueError(f"unknown named family {kind!r}")


# -- degree bounds ----------------------------------------------------------


def all_bound_pairs(G: Multigraph) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every pointwise pair f <= g <= deg(G), as tuples indexed by vertex - 1."""
    deg = degree_vector(G)
    per_vertex = [[(f, g) for f in range(deg[v] + 1) for g in range(f, deg[v] + 1)] for v in G.vertices]
    for combo in product(*per_vertex):
        yield tuple(c[0] for c in combo), tuple(c[1] for c in combo)


def constant_bound_pairs(G: Multigraph, top: Optional[int] = None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    top = G.max_degree() if top is None else top
    for f in range(top + 1):
        for g in range(f, top + 1):
            yield (f,) * G.n, (g,) * G.n


def sampled_bound_pairs(G: Multigraph, count: int, rng: random.Random):
    deg = degree_vector(G)
    for _ in range(count):
        f, g = [], []
        for v in G.vertices:
            a, b = sorted((rng.randint(0, deg[v]), rng.randint(0, deg[v])))
            f.append(a)
            g.append(b)
        yield tuple(f), tuple(g)


@dataclass(frozen=True)
class FamilySpec:
    """Which graphs and which (f, g) pairs a scan visits.

    ``generator``: ``"all"`` (uses max_n, max_m), ``"random"`` (n, m, count, seed)
    or ``"named"`` (named kind up to max_n).  ``bounds``: ``"all"``,
    ``"constant"`` (with optional ``bound_top``) or ``"sampled"`` (``bound_samples``).
    """

    generator: str = "all"
    max_n: int = 3
    max_m: int = 4
    n: int = 5
    m: int = 8
    count: int = 100
    seed: int = 0
    named: str = "cycles"
    bounds: str = "all"
    bound_top: Optional[int] = None
    bound_samples: int = 20
    extra: dict = field(default_factory=dict)

    def graphs(self) -> list[Multigraph]:
        if self.generator == "all":
            return list(all_multigraphs(self.max_n, self.max_m))
        if self.generator == "random":
            rng = random.Random(self.seed)
            return [random_multigraph(self.n, self.m, rng) for _ in range(self.count)]
        if self.generator == "named":
            return named_graphs(self.named, self.max_n)
        raise ValueError(f"unknown generator {self.generator!r}")

    def bound_pairs(self, G: Multigraph, serial: int):
        if self.bounds == "all":
            return all_bound_pairs(G)
        if self.bounds == "constant":
            return constant_bound_pairs(G, self.bound_top)
        if self.bounds == "sampled":
            return sampled_bound_pairs(G, self.bound_samples, random.Random(self.seed * 1_000_003 + serial))
        raise ValueError(f"unknown bound policy {self.bounds!r}")

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if k != "extra"}
