"""Exact real-root counting with Sturm sequences.

Independent of the floating point root finder; used to cross-check
real-rootedness verdicts.
"""

from __future__ import annotations

import math

from .polynomials import UniPoly, squarefree_decomposition
from .quadratic import sign


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [q for q in seq if not q.is_zero()]


def _sign_at(q: UniPoly, x) -> int:
    if x == math.inf:
        return sign(q.lead())
    if x == -math.inf:
        return sign(q.lead()) * (-1) ** q.degree
    return sign(q(x))


def _variations(seq, x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def distinct_real_roots(p: UniPoly, lo=-math.inf, hi=math.inf) -> int:
    """Distinct real roots in ``(lo, hi]``; ``lo`` must not itself be a root."""
    if p.degree < 1:
        return 0
    seq = sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


def real_root_count(p: UniPoly, lo=-math.inf, hi=math.inf) -> int:
    """Real roots in ``(lo, hi]`` counted with multiplicity."""
    return sum(mult * distinct_real_roots(s, lo, hi) for s, mult in squarefree_decomposition(p))


def only_nonpositive_real_roots(p: UniPoly) -> bool:
    if p.is_zero():
        return True
    return real_root_count(p, -math.inf, 0) == p.degree
