"""Exact numbers in a real quadratic field Q(sqrt(m)).

Fugacities such as sqrt(3) or sqrt(2 - 2/Delta) must stay exact so that the
binomial bookkeeping and the coefficient inequalities can be checked without
rounding.  ``QuadSurd(a, b, m)`` stands for ``a + b*sqrt(m)`` with rational
``a, b`` and a squarefree integer ``m > 1``.  Arithmetic results whose surd
part vanishes collapse back to :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Exact = Union[int, Fraction, "QuadSurd"]


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s**2 * m and m squarefree."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, m = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            m *= p
        p += 1
    return s, m * n


class QuadSurd:
    __slots__ = ("a", "b", "m")

    def __init__(self, a, b, m: int):
        if m <= 1 or _squarefree_split(m)[0] != 1:
            raise ValueError(f"radicand must be squarefree and > 1, got {m}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.m = m

    # -- construction helpers -------------------------------------------
    @staticmethod
    def make(a, b, m: int) -> Exact:
        b = Fraction(b)
        if b == 0:
            return Fraction(a)
        return QuadSurd(a, b, m)

    @staticmethod
    def _raw(a: Fraction, b: Fraction, m: int) -> Exact:
        # internal: a, b already Fractions and m already validated
        if not b:
            return a
        q = object.__new__(QuadSurd)
        q.a, q.b, q.m = a, b, m
        return q

    def _coerce(self, other):
        if isinstance(other, QuadSurd):
            if other.m != self.m:
                raise ValueError(
                    f"cannot mix sqrt({self.m}) and sqrt({other.m}) in one computation"
                )
            return other.a, other.b
        if isinstance(other, int):
            return other, 0
        if isinstance(other, Rational):
            return Fraction(other), 0
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadSurd._raw(Fraction(self.a + c[0]), Fraction(self.b + c[1]), self.m)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadSurd._raw(Fraction(self.a - c[0]), Fraction(self.b - c[1]), self.m)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadSurd._raw(Fraction(c[0] - self.a), Fraction(c[1] - self.b), self.m)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        if not b:
            if not a:
                return Fraction(0)
            return QuadSurd._raw(self.a * a, self.b * a, self.m)
        return QuadSurd._raw(
            self.a * a + self.m * self.b * b, self.a * b + self.b * a, self.m
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        return self.a * self.a - self.m * self.b * self.b

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        if b == 0:
            if a == 0:
                raise ZeroDivisionError("QuadSurd division by zero")
            return QuadSurd.make(self.a / a, self.b / a, self.m)
        return self * QuadSurd(a, b, self.m).inverse()

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self.inverse() * c[0]

    def inverse(self) -> Exact:
        n = self.norm()  # never zero: sqrt(m) is irrational
        return QuadSurd.make(self.a / n, -self.b / n, self.m)

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.m)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result: Exact = Fraction(1)
        base: Exact = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- ordering -------------------------------------------------------
    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        return sa if self.a * self.a > self.m * self.b * self.b else sb

    def _cmp(self, other) -> int:
        d = self - other
        return sign(d)

    def __eq__(self, other):
        c = self._coerce(other) if isinstance(other, (QuadSurd, int, Rational)) else None
        if c is None:
            return NotImplemented
        return self.a == c[0] and self.b == c[1]

    def __hash__(self):
        return hash((self.a, self.b, self.m))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return True  # b != 0 by construction

    # -- conversion -----------------------------------------------------
    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __complex__(self):
        return complex(float(self))

    def __repr__(self):
        return f"QuadSurd({self.a}, {self.b}, {self.m})"

    def __str__(self):
        return to_str(self)


def sign(x: Exact) -> int:
    if isinstance(x, QuadSurd):
        return x.sign()
    return (x > 0) - (x < 0)


def sqrt_rational(r) -> Exact:
    """Exact square root of a nonnegative rational."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("square root of a negative rational")
    if r == 0:
        return Fraction(0)
    s, m = _squarefree_split(r.numerator * r.denominator)
    coef = Fraction(s, r.denominator)
    if m == 1:
        return coef
    return QuadSurd(0, coef, m)


def to_str(x: Exact) -> str:
    """Serialize as ``"a/b"``, ``"a/b+c/d*sqrt(m)"`` and so on."""
    if isinstance(x, QuadSurd):
        surd = f"{x.b}*sqrt({x.m})" if x.b != 1 else f"sqrt({x.m})"
        if x.b == -1:
            surd = f"-sqrt({x.m})"
        if x.a == 0:
            return surd
        return f"{x.a}{'' if surd.startswith('-') else '+'}{surd}"
    return str(Fraction(x))


_NUM = r"[+-]?\d+(?:\.\d*)?(?:/\d+)?"
_SURD_RE = re.compile(
    rf"^\s*(?:(?P<a>{_NUM})(?=\s*[+-]|\s*$))?\s*"
    rf"(?:(?P<b>[+-]?\s*(?:\d+(?:\.\d*)?(?:/\d+)?)?)\s*\*?\s*sqrt\(\s*(?P<m>\d+(?:/\d+)?)\s*\))?\s*$"
)


def parse_exact(text: str) -> Exact:
    """Parse ``"3"``, ``"1/2"``, ``"0.75"``, ``"sqrt(3)"``, ``"1+2*sqrt(2)"``."""
    text = str(text).strip()
    if not text:
        raise ValueError("empty number")
    if "sqrt" not in text:
        return Fraction(text)
    match = _SURD_RE.match(text)
    if match is None:
        raise ValueError(f"cannot parse exact number {text!r}")
    a = Fraction(match.group("a")) if match.group("a") else Fraction(0)
    braw = (match.group("b") or "").replace(" ", "")
    if braw in ("", "+"):
        b = Fraction(1)
    elif braw == "-":
        b = Fraction(-1)
    else:
        b = Fraction(braw)
    root = sqrt_rational(Fraction(match.group("m")))
    return a + b * root
