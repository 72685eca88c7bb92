"""Exact fugacity-weighted subgraph counts.

``brute_counts`` walks all ``2**m`` edge subsets (Gray code order) and is the
oracle; ``dp_counts`` is a frontier dynamic program over an edge elimination
order and is the fast path.  Both return the untrimmed list
``[N(0), ..., N(m)]`` where

    N(j) = sum over H with #H = j of  lambda_H * prod_v u^(v)_{deg(H, v)}.
"""

from __future__ import annotations

import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Mapping, Optional, Sequence

import numpy as np

from .fugacities import FugacitySpec, interval_fugacities
from .multigraph import DegreeBounds, Multigraph, degree_vector
from .polynomials import UniPoly
from .roots import Disc, DiscExterior, Outcome, Region, RegionVerdict, Sector

BRUTE_CAP = 30
STATE_CAP = 2_000_000
SAMPLE_EDGE_CAP = 20


class CapExceeded(RuntimeError):
    pass


# -- brute force -----------------------------------------------------------


def _profile_chunk(n, ends, weights, start, stop):
    """Accumulate (degree vector, #H) -> sum of lambda_H over Gray-code indices [start, stop)."""
    m = len(ends)
    deg = [0] * (n + 1)
    lam = Fraction(1) if weights is not None else None
    code = start ^ (start >> 1)
    size = 0
    for i in range(m):
        if code >> i & 1:
            u, v = ends[i]
            deg[u] += 1
            deg[v] += 1
            size += 1
            if lam is not None:
                lam *= weights[i]
    out: dict = defaultdict(int)
    key = tuple(deg[1:])
    out[key, size] += lam if lam is not None else 1
    for idx in range(start + 1, stop):
        # the bit that flips between gray(idx-1) and gray(idx)
        i = (idx & -idx).bit_length() - 1
        u, v = ends[i]
        if code >> i & 1:
            deg[u] -= 1
            deg[v] -= 1
            size -= 1
            if lam is not None:
                lam /= weights[i]
        else:
            deg[u] += 1
            deg[v] += 1
            size += 1
            if lam is not None:
                lam *= weights[i]
        code ^= 1 << i
        out[tuple(deg[1:]), size] += lam if lam is not None else 1
    return dict(out)


def subset_profile(G: Multigraph, brute_cap: int = BRUTE_CAP, workers: int = 1) -> dict:
    """Map (degree vector, #H) -> sum of lambda_H over every edge subset H, by enumeration."""
    if G.m > brute_cap:
        raise CapExceeded(f"brute force needs |E| <= {brute_cap}, graph has {G.m} edges")
    ends = [(u, v) for u, v, _ in G.edges]
    weights = None if G.unit_weights else list(G.weights())
    total = 1 << G.m
    if workers <= 1 or G.m < 16:
        return _profile_chunk(G.n, ends, weights, 0, total)
    bounds = np.linspace(0, total, workers + 1, dtype=np.int64).tolist()
    merged: dict = defaultdict(int)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(_profile_chunk, G.n, ends, weights, a, b) for a, b in zip(bounds, bounds[1:])]
        for fut in futs:
            for key, val in fut.result().items():
                merged[key] += val
    return dict(merged)


def _fold_profile(G: Multigraph, profile: Mapping, u: FugacitySpec) -> list:
    counts: list = [0] * (G.m + 1)
    for (degs, size), lam in profile.items():
        w = lam
        for v, d in enumerate(degs, start=1):
            w = w * u.u(v, d)
            if w == 0:
                break
        if w != 0:
            counts[size] = counts[size] + w
    return counts


def brute_counts(G: Multigraph, u: FugacitySpec, brute_cap: int = BRUTE_CAP, workers: int = 1) -> list:
    u.validate(G)
    return _fold_profile(G, subset_profile(G, brute_cap, workers), u)


# -- frontier dynamic program ----------------------------------------------


def min_degree_order(G: Multigraph) -> list[int]:
    """Edge order from greedy min-degree vertex elimination (ties by vertex index)."""
    remaining = set(range(G.m))
    incident: dict[int, set[int]] = {v: set() for v in G.vertices}
    for i, (u, v, _) in enumerate(G.edges):
        incident[u].add(i)
        incident[v].add(i)
    alive = set(G.vertices)
    order: list[int] = []
    while remaining:
        def nbr_count(v):
            return len({w for i in incident[v] for w in G.edges[i][:2]} - {v})

        best = min((v for v in alive if incident[v]), key=lambda v: (nbr_count(v), v))
        for i in sorted(incident[best]):
            order.append(i)
            remaining.discard(i)
            for w in G.edges[i][:2]:
                incident[w].discard(i)
        alive.discard(best)
    return order


def _frontier_bound(G: Multigraph, order: Sequence[int], caps: Mapping[int, int]) -> int:
    last = {}
    for pos, i in enumerate(order):
        u, v, _ = G.edges[i]
        last[u] = last[v] = pos
    active: set[int] = set()
    worst = 1
    for pos, i in enumerate(order):
        u, v, _ = G.edges[i]
        active.update((u, v))
        worst = max(worst, math.prod(caps[w] + 1 for w in active))
        for w in (u, v):
            if last[w] == pos:
                active.discard(w)
    return worst


def dp_counts(
    G: Multigraph,
    u: FugacitySpec,
    order: Optional[Sequence[int]] = None,
    state_cap: int = STATE_CAP,
) -> list:
    u.validate(G)
    if order is None:
        order = min_degree_order(G)
    else:
        order = list(order)
        if sorted(order) != list(range(G.m)):
            raise ValueError("edge order must be a permutation of 0..m-1")
    deg = degree_vector(G)
    last_nz = {v: u.last_nonzero(v) for v in G.vertices}
    # degrees above the last nonzero fugacity index are dead states
    caps = {v: min(deg[v], max(last_nz[v], 0)) for v in G.vertices}
    bound = _frontier_bound(G, order, caps)
    if bound > state_cap:
        raise CapExceeded(
            f"frontier state bound {bound} exceeds state cap {state_cap}; "
            "use brute force or supply a better edge order"
        )
    # next_nz[v][d] = smallest k >= d with u_k != 0 (or a sentinel)
    next_nz = {}
    for v in G.vertices:
        nxt = [math.inf] * (deg[v] + 2)
        for d in range(deg[v], -1, -1):
            nxt[d] = d if u.u(v, d) != 0 else nxt[d + 1]
        next_nz[v] = nxt
    remaining = dict(deg)

    const = 1
    for v in G.vertices:
        if deg[v] == 0:
            const = const * u.u(v, 0)
    if const == 0:
        return [0] * (G.m + 1)

    active: list[int] = []  # frontier vertices, in key order
    states: dict = {((), 0): const}
    for i in order:
        a, b, lam = G.edges[i]
        for w in (a, b):
            if w not in active:
                active.append(w)
                states = {(key + (0,), j): val for (key, j), val in states.items()}
        ia, ib = active.index(a), active.index(b)
        remaining[a] -= 1
        remaining[b] -= 1
        ra, rb = remaining[a], remaining[b]
        new: dict = defaultdict(int)
        for (key, j), val in states.items():
            # edge not taken
            if next_nz[a][key[ia]] <= key[ia] + ra and next_nz[b][key[ib]] <= key[ib] + rb:
                new[key, j] += val
            # edge taken
            k2 = list(key)
            k2[ia] += 1
            k2[ib] += 1
            if k2[ia] > caps[a] or k2[ib] > caps[b]:
                continue
            if next_nz[a][k2[ia]] <= k2[ia] + ra and next_nz[b][k2[ib]] <= k2[ib] + rb:
                new[tuple(k2), j + 1] += val * lam if lam != 1 else val
        states = new
        # fold vertices whose last incident edge was just processed
        for w in sorted({a, b}, key=active.index, reverse=True):
            if remaining[w] == 0:
                iw = active.index(w)
                active.pop(iw)
                folded: dict = defaultdict(int)
                for (key, j), val in states.items():
                    x = u.u(w, key[iw])
                    if x != 0:
                        folded[key[:iw] + key[iw + 1:], j] += val * x
                states = folded
    counts: list = [0] * (G.m + 1)
    for (key, j), val in states.items():
        counts[j] = counts[j] + val
    return counts


def interval_spec(G: Multigraph, bounds: DegreeBounds) -> FugacitySpec:
    deg = degree_vector(G)
    return FugacitySpec(
        {v: interval_fugacities(bounds.f.get(v, 0), bounds.g.get(v, 0), deg[v]) for v in G.vertices},
        dict(deg),
    )


def factor_counts(G: Multigraph, f, g, state_cap: int = STATE_CAP, order=None) -> list[int]:
    """Number of (f, g)-factors with j edges, trimmed of trailing zeros."""
    bounds = f if isinstance(f, DegreeBounds) else DegreeBounds.coerce(G, f, g)
    counts = dp_counts(G, interval_spec(G, bounds), order=order, state_cap=state_cap)
    return list(UniPoly(counts).coeffs)


def counts_poly(counts: Sequence) -> UniPoly:
    return UniPoly(counts)


# -- multivariate evaluation and sampling ----------------------------------


def evaluate_F(G: Multigraph, z: Mapping[int, complex], lam: Optional[Sequence] = None) -> complex:
    """``prod over edges vw of (1 + lambda_e z_v z_w)`` (a loop gives ``1 + lambda z_v^2``)."""
    lam = G.weights() if lam is None else lam
    out = 1 + 0j
    for (u, v, _), w in zip(G.edges, lam):
        out *= 1 + float(w) * z[u] * z[v]
    return out


def weighted_monomials(G: Multigraph, u: FugacitySpec, brute_cap: int = SAMPLE_EDGE_CAP) -> dict:
    """Coefficients of ``sum_H u_deg(H) z^deg(H)`` keyed by degree vector."""
    profile = subset_profile(G, brute_cap)
    out: dict = defaultdict(int)
    for (degs, _), lam in profile.items():
        w = 1
        for v, d in enumerate(degs, start=1):
            w = w * u.u(v, d)
            if w == 0:
                break
        if w != 0:
            out[degs] += w
    return dict(out)


def evaluate_weighted(G: Multigraph, u: FugacitySpec, z: Mapping[int, complex]) -> complex:
    total = 0j
    for degs, w in weighted_monomials(G, u).items():
        term = complex(float(w))
        for v, d in enumerate(degs, start=1):
            term *= z[v] ** d
        total += term
    return total


SAMPLE_MARGIN = 1e-3
ZERO_THRESHOLD = 1e-12


def sample_region(region: Region, size: tuple, rng: np.random.Generator) -> np.ndarray:
    if isinstance(region, Sector):
        r = np.exp(rng.uniform(math.log(1e-2), math.log(1e2), size))
        lim = region.theta - SAMPLE_MARGIN
        phi = rng.uniform(-lim, lim, size)
        return r * np.exp(1j * phi)
    if isinstance(region, Disc):
        rmax = region.kappa - SAMPLE_MARGIN
        r = np.sqrt(rng.uniform(0, rmax * rmax, size))
        phi = rng.uniform(-math.pi, math.pi, size)
        return r * np.exp(1j * phi)
    if isinstance(region, DiscExterior):
        # log-uniform radius over (kappa + margin, 100 (kappa + margin))
        rmin = region.kappa + SAMPLE_MARGIN
        r = rmin * np.exp(rng.uniform(0, math.log(100.0), size))
        phi = rng.uniform(-math.pi, math.pi, size)
        return r * np.exp(1j * phi)
    raise TypeError(f"cannot sample region {region!r}")


def sample_nonvanishing(
    G: Multigraph,
    region: Region,
    samples: int = 1000,
    seed: int = 0,
    fugacities: Optional[FugacitySpec] = None,
    lam: Optional[Sequence] = None,
) -> RegionVerdict:
    """Draw every z_v from the region and look for a zero of the multivariate polynomial.

    With ``fugacities`` the polynomial is ``sum_H u_deg(H) z^deg(H)``; otherwise
    it is the edge product with weights ``lam`` (the graph's own by default).
    A clean run is only probabilistic evidence and is flagged as such.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    z = sample_region(region, (samples, G.n), rng)  # column v-1 holds z_v
    if fugacities is None:
        # a product vanishes iff one factor does, so score the worst factor
        lam = np.array([float(w) for w in (G.weights() if lam is None else lam)])
        ratio = np.ones(samples)
        for (a, b, _), w in zip(G.edges, lam):
            prod = w * z[:, a - 1] * z[:, b - 1]
            ratio = np.minimum(ratio, np.abs(1 + prod) / (1 + np.abs(prod)))
    else:
        fugacities.validate(G)
        mono = weighted_monomials(G, fugacities)
        if not mono:
            return RegionVerdict(Outcome.IDENTICALLY_ZERO, probabilistic=True)
        val = np.zeros(samples, dtype=complex)
        scale = np.zeros(samples)
        for degs, w in mono.items():
            term = np.full(samples, float(w), dtype=complex)
            for v, d in enumerate(degs):
                if d:
                    term *= z[:, v] ** d
            val += term
            scale += np.abs(term)
        ratio = np.abs(val) / scale
    worst = int(np.argmin(ratio))
    detail = {"samples": samples, "seed": seed, "min_ratio": float(ratio[worst])}
    if ratio[worst] < ZERO_THRESHOLD:
        return RegionVerdict(
            Outcome.COUNTEREXAMPLE, tuple(complex(x) for x in z[worst]), probabilistic=True, detail=detail
        )
    return RegionVerdict(Outcome.NONVANISHING, probabilistic=True, detail=detail)


def scanner_threads() -> int:
    try:
        return max(1, int(os.environ.get("FACTORPOLY_THREADS", "1")))
    except ValueError:
        return 1
