"""Univariate polynomials with exact coefficients.

Coefficients may be ints, Fractions or :class:`~factorpoly.quadratic.QuadSurd`
values; all operations stay exact.  Index ``j`` of ``coeffs`` is the
coefficient of ``t**j``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .quadratic import Exact, QuadSurd, parse_exact, sign, to_str


def _norm(c) -> Exact:
    if isinstance(c, QuadSurd):
        return c
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    # -- basic structure ------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Exact:
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j: int):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self == UniPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly([{', '.join(to_str(c) for c in self.coeffs)}])"

    def trailing_zeros(self) -> int:
        """Multiplicity of 0 as a root (0 for the zero polynomial)."""
        k = 0
        for c in self.coeffs:
            if c != 0:
                return k
            k += 1
        return 0

    def shift_down(self, k: int) -> "UniPoly":
        return UniPoly(self.coeffs[k:])

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self), len(other))
        return UniPoly(self[j] + other[j] for j in range(n))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self), len(other))
        return UniPoly(self[j] - other[j] for j in range(n))

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(j * c for j, c in enumerate(self.coeffs) if j > 0)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return UniPoly(), UniPoly(rem)
        quot = [0] * (len(rem) - dq)
        inv = 1 / Fraction(other.lead()) if not isinstance(other.lead(), QuadSurd) else other.lead().inverse()
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c == 0:
                continue
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - c * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.lead()
        inv = lead.inverse() if isinstance(lead, QuadSurd) else 1 / Fraction(lead)
        return UniPoly(c * inv for c in self.coeffs)

    # -- conversion -----------------------------------------------------
    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def to_json(self) -> list[str]:
        return [to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "UniPoly":
        return cls(parse_exact(s) for s in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor over the coefficient field."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: ``p = lead * prod(s_i ** i)`` with squarefree, coprime ``s_i``.

    Returns the nonconstant factors with their multiplicities.
    """
    if p.degree < 1:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    out = []
    i = 1
    while b.degree >= 1:
        d = c - b.derivative()
        g = poly_gcd(b, d)
        if g.degree >= 1:
            out.append((g, i))
        b = b // g
        c = d // g
        i += 1
    return out


def binomial_row(m: int) -> UniPoly:
    return UniPoly([1, 1]) ** m


def coefficient_signs_nonnegative(p: UniPoly) -> bool:
    return all(sign(c) >= 0 for c in p.coeffs)
