"""Exact coefficient inequalities implied by zero locations.

Every check works on exact coefficients (ints, Fractions, QuadSurds) and
returns an :class:`IneqReport` naming the first violated instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Optional, Sequence

from .quadratic import QuadSurd, sign, to_str

DEFAULT_MAX_ORDER = 6


@dataclass
class IneqReport:
    name: str
    holds: bool
    violation: Optional[dict] = None
    max_order: Optional[int] = None
    checked: int = 0

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "holds": self.holds, "violation": None}
        if self.violation is not None:
            v = self.violation
            out["violation"] = {"j": v["j"], "lhs": to_str(v["lhs"]), "rhs": to_str(v["rhs"])}
        if self.max_order is not None:
            out["max_order"] = self.max_order
        return out


def _pad(N: Sequence, length: int) -> list:
    N = list(N)
    return N + [0] * (length - len(N))


def _report(name, checks, strict=False, **kw) -> IneqReport:
    """First (j, lhs, rhs) with lhs < rhs (or lhs <= rhs when strict) wins."""
    count = 0
    for j, lhs, rhs in checks:
        count += 1
        s = sign(lhs - rhs)
        if s < 0 or (strict and s == 0):
            return IneqReport(name, False, {"j": j, "lhs": lhs, "rhs": rhs}, checked=count, **kw)
    return IneqReport(name, True, checked=count, **kw)


def newton_check(N: Sequence, d: Optional[int] = None) -> IneqReport:
    if d is None:
        d = len(N) - 1
    if d < len(N) - 1:
        raise ValueError(f"d = {d} is below the length of the sequence minus one")
    N = _pad(N, d + 1)

    def checks():
        for j in range(1, d):
            a = N[j] / Fraction(comb(d, j))
            lo = N[j - 1] / Fraction(comb(d, j - 1))
            hi = N[j + 1] / Fraction(comb(d, j + 1))
            yield j, a * a, lo * hi

    return _report("newton", checks())


def log_concavity_check(N: Sequence, strict: bool = False) -> IneqReport:
    """``N(j)^2 >= N(j-1) N(j+1)``; the strict form skips indices with ``N(j) = 0``."""
    N = list(N)
    checks = (
        (j, N[j] * N[j], N[j - 1] * N[j + 1])
        for j in range(1, len(N) - 1)
        if not (strict and N[j] == 0)
    )
    return _report("log_concavity_strict" if strict else "log_concavity", checks, strict=strict)


# -- minors ------------------------------------------------------------------


def determinant(M: list[list]) -> Any:
    """Exact Gaussian elimination over the coefficients' field."""
    n = len(M)
    A = [list(row) for row in M]
    det: Any = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        p = A[c][c]
        det = det * p
        inv = p.inverse() if isinstance(p, QuadSurd) else 1 / Fraction(p)
        for r in range(c + 1, n):
            if A[r][c] != 0:
                factor = A[r][c] * inv
                for k in range(c, n):
                    A[r][k] = A[r][k] - factor * A[c][k]
    return det


def toeplitz_matrix(N: Sequence, size: int) -> list[list]:
    N = _pad(N, size)
    return [[N[c - r] if c >= r else 0 for c in range(size)] for r in range(size)]


def hurwitz_matrix(N: Sequence, d: Optional[int] = None) -> list[list]:
    """d x d array with entry (i, j) = N(2j + 1 - i), zero outside 0..d."""
    if d is None:
        d = len(N) - 1
    N = _pad(N, d + 1)

    def at(k):
        return N[k] if 0 <= k <= d else 0

    return [[at(2 * j + 1 - i) for j in range(d)] for i in range(d)]


def _minors(M, max_order, row_starts, skip=None):
    n = len(M)
    for k in range(1, min(max_order, n) + 1):
        for rows in combinations(range(n), k):
            if rows[0] not in row_starts:
                continue
            for cols in combinations(range(n), k):
                if skip is not None and skip(rows, cols):
                    continue
                sub = [[M[r][c] for c in cols] for r in rows]
                yield {"rows": list(rows), "cols": list(cols)}, determinant(sub), 0


def toeplitz_minors_check(N: Sequence, max_order: Optional[int] = None, d: Optional[int] = None) -> IneqReport:
    """All square minors of order <= max_order of the (d+1) x (d+1) upper-triangular Toeplitz array."""
    if d is None:
        d = len(N) - 1
    size = d + 1
    if max_order is None:
        max_order = min(DEFAULT_MAX_ORDER, size)
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    M = toeplitz_matrix(N, size)

    # Shifting all row and column indices by the same amount leaves a minor
    # unchanged as long as it stays inside the array, so rows may start at 0.
    # A minor with cols[i] < rows[i] for some i has a zero block that forces
    # determinant 0 and is skipped.
    def skip(rows, cols):
        return any(c < r for r, c in zip(rows, cols))

    return _report("toeplitz_minors", _minors(M, max_order, {0}, skip), max_order=max_order)


def hurwitz_minors_check(N: Sequence, max_order: Optional[int] = None) -> IneqReport:
    d = len(N) - 1
    if d < 1:
        return IneqReport("hurwitz_minors", True, max_order=max_order or 0)
    if max_order is None:
        max_order = min(DEFAULT_MAX_ORDER, d)
    M = hurwitz_matrix(N, d)
    return _report("hurwitz_minors", _minors(M, max_order, set(range(d))), max_order=max_order)


def prop15_consequences(N: Sequence) -> IneqReport:
    """``N(j)N(j+1) >= N(j-1)N(j+2)`` and ``N(j)^2 >= N(j-2)N(j+2)``."""
    N = list(N)
    d = len(N) - 1

    def checks():
        for j in range(1, d - 1):
            yield j, N[j] * N[j + 1], N[j - 1] * N[j + 2]
        for j in range(2, d - 1):
            yield j, N[j] * N[j], N[j - 2] * N[j + 2]

    return _report("hurwitz_consequences", checks())
