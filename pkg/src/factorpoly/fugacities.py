"""Fugacity sequences, their binomial generating functions, and the named families.

A fugacity sequence ``u = (u_0, ..., u_D)`` weights a vertex that ends up with
degree ``k`` by ``u_k``.  Its generating function is
``Gamma(D, u, y) = sum_k C(D, k) u_k y^k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Mapping, Sequence

from .multigraph import Multigraph, degree_vector
from .polynomials import UniPoly
from .quadratic import Exact, parse_exact, sign, sqrt_rational, to_str


class FugacityError(ValueError):
    pass


def _check_nonnegative(u: Sequence) -> None:
    for k, x in enumerate(u):
        if sign(x) < 0:
            raise FugacityError(f"fugacity u_{k} = {to_str(x)} is negative")


@dataclass(frozen=True)
class FugacitySpec:
    """Per-vertex fugacity sequences ``u^(v)`` with degree caps ``D(v)``.

    Entries beyond ``D(v)`` (or beyond the stored sequence) are zero.
    """

    seqs: Mapping[int, tuple]
    caps: Mapping[int, int]

    def __post_init__(self):
        for v, u in self.seqs.items():
            _check_nonnegative(u)
            if len(u) > self.caps[v] + 1:
                raise FugacityError(f"vertex {v}: sequence longer than D(v) + 1")

    def u(self, v: int, k: int) -> Exact:
        seq = self.seqs[v]
        return seq[k] if 0 <= k < len(seq) else 0

    def seq(self, v: int) -> tuple:
        return tuple(self.u(v, k) for k in range(self.caps[v] + 1))

    def gamma(self, v: int) -> UniPoly:
        return gamma_poly(self.caps[v], self.seq(v))

    def last_nonzero(self, v: int) -> int:
        seq = self.seqs[v]
        for k in range(len(seq) - 1, -1, -1):
            if seq[k] != 0:
                return k
        return -1

    def validate(self, G: Multigraph) -> None:
        deg = degree_vector(G)
        for v in G.vertices:
            if v not in self.seqs:
                raise FugacityError(f"no fugacities for vertex {v}")
            if self.caps[v] < deg[v]:
                raise FugacityError(
                    f"vertex {v}: D(v) = {self.caps[v]} is below deg(G, v) = {deg[v]}"
                )

    @classmethod
    def per_vertex(
        cls, G: Multigraph, build: Callable[[int, int], Sequence], caps: Mapping[int, int] | None = None
    ) -> "FugacitySpec":
        """``build(v, D)`` returns the sequence for vertex v; D defaults to deg(G, v)."""
        deg = degree_vector(G)
        caps = {v: (caps[v] if caps else deg[v]) for v in G.vertices}
        return cls({v: tuple(build(v, caps[v])) for v in G.vertices}, caps)

    @classmethod
    def uniform(cls, G: Multigraph, u: Sequence, D: int | None = None) -> "FugacitySpec":
        deg = degree_vector(G)
        caps = {v: (D if D is not None else max(deg[v], len(u) - 1)) for v in G.vertices}
        return cls({v: tuple(u[: caps[v] + 1]) for v in G.vertices}, caps)

    def to_json(self) -> dict:
        return {
            str(v): {"D": self.caps[v], "u": [to_str(x) for x in self.seqs[v]]}
            for v in sorted(self.seqs)
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FugacitySpec":
        seqs = {int(v): tuple(parse_exact(x) for x in e["u"]) for v, e in data.items()}
        caps = {int(v): int(e["D"]) for v, e in data.items()}
        return cls(seqs, caps)


# -- generating functions ---------------------------------------------------


def gamma_poly(D: int, u: Sequence) -> UniPoly:
    u = list(u)
    _check_nonnegative(u)
    return UniPoly(comb(D, k) * u[k] for k in range(min(D + 1, len(u))))


def q_poly(u: Sequence) -> UniPoly:
    """``sum_k u_k y^k / k!`` (the exponential-type generating function)."""
    return UniPoly(Fraction(1, factorial(k)) * x for k, x in enumerate(u))


def recover_fugacities(D: int, gamma: UniPoly) -> tuple:
    return tuple(gamma[k] / Fraction(comb(D, k)) for k in range(D + 1))


# -- named fugacity families ------------------------------------------------


def interval_fugacities(f: int, g: int, D: int) -> tuple[int, ...]:
    if not 0 <= f <= g:
        raise FugacityError(f"need 0 <= f <= g, got f={f}, g={g}")
    if D < 0:
        raise FugacityError("D must be nonnegative")
    return tuple(1 if f <= i <= g else 0 for i in range(D + 1))


def set_fugacities(S: Iterable[int], D: int) -> tuple[int, ...]:
    S = set(S)
    if any(k < 0 or k > D for k in S):
        raise FugacityError(f"degree set {sorted(S)} not contained in 0..{D}")
    return tuple(1 if i in S else 0 for i in range(D + 1))


def ruelle_fugacities(delta: int, D: int | None = None) -> tuple:
    """``(1, sqrt(2 - 2/delta), 1, 0, ...)``, padded with zeros up to D."""
    if delta < 1:
        raise FugacityError("maximum degree must be at least 1")
    u1 = sqrt_rational(2 - Fraction(2, delta))
    seq = [Fraction(1), u1, Fraction(1)]
    if D is not None:
        seq = (seq + [0] * (D + 1))[: D + 1]
    return tuple(seq)


def binomial_reciprocal_fugacities(D: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1, comb(D, i)) for i in range(D + 1))


QUADRATICS = {
    "sqrt3": sqrt_rational(3),
    "sqrt2": sqrt_rational(2),
    "2": Fraction(2),
}


def _quad_key(quad) -> str:
    key = str(quad).replace("√", "sqrt").replace(" ", "").lower()
    if key in ("sqrt(3)", "3"):
        key = "sqrt3"
    elif key in ("sqrt(2)",):
        key = "sqrt2"
    if key not in QUADRATICS:
        raise FugacityError(f"unknown quadratic {quad!r}; choose sqrt3, sqrt2 or 2")
    return key


def thm26_q(f: int, g: int, quad="sqrt3") -> UniPoly:
    """``y^f (1+y)^b (1 + c y + y^2)^a`` with ``g - f = 2a + b``, ``b`` in {0, 1}."""
    if not 0 <= f <= g:
        raise FugacityError(f"need 0 <= f <= g, got f={f}, g={g}")
    a, b = divmod(g - f, 2)
    c = QUADRATICS[_quad_key(quad)]
    return UniPoly([0] * f + [1]) * UniPoly([1, 1]) ** b * UniPoly([1, c, 1]) ** a


def thm26_fugacities(f: int, g: int, D: int, quad="sqrt3") -> tuple:
    if g > D:
        raise FugacityError(f"need g <= D, got g={g}, D={D}")
    q = thm26_q(f, g, quad)
    return tuple(q[k] for k in range(D + 1))


# -- Hadamard-type products -------------------------------------------------


def hadamard_a(p: UniPoly, q: UniPoly) -> UniPoly:
    n = min(len(p), len(q))
    return UniPoly(p[k] * q[k] for k in range(n))


def hadamard_b(p: UniPoly, q: UniPoly) -> UniPoly:
    n = min(len(p), len(q))
    return UniPoly(factorial(k) * p[k] * q[k] for k in range(n))


def hadamard_c(p: UniPoly, q: UniPoly, n: int) -> UniPoly:
    if n < max(p.degree, q.degree):
        raise ValueError("n must be at least the larger degree")
    m = min(len(p), len(q))
    return UniPoly(factorial(k) * factorial(n - k) * p[k] * q[k] for k in range(m))


# -- three- and four-term generating functions ------------------------------


def _l21_R(D: int, k: int) -> Fraction:
    return Fraction(k * (D - k), (k + 1) * (D - k + 1))


def lemma_gamma(kind: str, *, D: int | None = None, k: int | None = None,
                beta=None, mu=None, p: int | None = None) -> UniPoly:
    """Gamma polynomials with three or four consecutive nonzero terms.

    ``L21``: C(D,k-1) y^(k-1) + beta C(D,k) y^k + C(D,k+1) y^(k+1)
    ``L22``: C(D,k-1) y^(k-1) + mu C(D,k) y^k + mu C(D,k+1) y^(k+1) + C(D,k+2) y^(k+2)
    ``L23``: the L22 shape with D = 2p+1 and k = p
    """
    kind = kind.upper()
    if kind == "L21":
        if not (D is not None and k is not None and 1 <= k <= D - 1):
            raise ValueError("L21 needs 1 <= k <= D-1")
        if beta is None or sign(beta) < 0:
            raise ValueError("L21 needs beta >= 0")
        c = [0] * (k + 2)
        c[k - 1], c[k], c[k + 1] = comb(D, k - 1), beta * comb(D, k), comb(D, k + 1)
        return UniPoly(c)
    if kind == "L23":
        if p is None or p < 1:
            raise ValueError("L23 needs p >= 1")
        D, k = 2 * p + 1, p
        kind = "L22"
    if kind == "L22":
        if not (D is not None and k is not None and 1 <= k <= D - 2):
            raise ValueError("L22 needs 1 <= k <= D-2")
        if mu is None or sign(mu) < 0:
            raise ValueError("L22 needs mu >= 0")
        c = [0] * (k + 3)
        c[k - 1], c[k], c[k + 1], c[k + 2] = (
            comb(D, k - 1), mu * comb(D, k), mu * comb(D, k + 1), comb(D, k + 2),
        )
        return UniPoly(c)
    raise ValueError(f"unknown lemma kind {kind!r}")


def threshold(kind: str, case: str, *, D: int | None = None, k: int | None = None,
              p: int | None = None) -> Exact:
    """Lower bound on beta (L21) or mu (L22, L23) for sector case a, b or c."""
    kind, case = kind.upper(), case.lower()
    if case not in ("a", "b", "c"):
        raise ValueError("case must be a, b or c")
    if kind == "L21":
        if not (D is not None and k is not None and 1 <= k <= D - 1):
            raise ValueError("L21 needs 1 <= k <= D-1")
        R = _l21_R(D, k)
        return sqrt_rational({"a": 2 * R, "b": 3 * R, "c": 4 * R}[case])
    base = {"a": 1 + sqrt_rational(2), "b": 1 + sqrt_rational(3), "c": Fraction(3)}[case]
    if kind == "L22":
        return base
    if kind == "L23":
        if p is None or p < 1:
            raise ValueError("L23 needs p >= 1")
        return base * Fraction(p, p + 2)
    raise ValueError(f"unknown lemma kind {kind!r}")


# target half-angle of the sector each case guarantees for Gamma
CASE_SECTORS = {"a": (3, 4), "b": (5, 6), "c": (1, 1)}


# -- config files -----------------------------------------------------------


def _entry_sequence(entry: Mapping, v: int, deg: int, delta: int):
    D = int(entry.get("D", deg))
    preset = entry.get("preset")
    if preset is None:
        if "u" not in entry:
            raise FugacityError(f"vertex {v}: entry needs 'preset' or 'u'")
        seq = tuple(parse_exact(x) for x in entry["u"])
        D = int(entry.get("D", max(deg, len(seq) - 1)))
        return seq[: D + 1], D
    if preset == "interval":
        return interval_fugacities(int(entry["f"]), int(entry["g"]), D), D
    if preset == "set":
        return set_fugacities(entry["S"], D), D
    if preset == "ruelle":
        return ruelle_fugacities(int(entry.get("delta", delta)), D), D
    if preset == "thm26":
        # one entry serves every vertex: g is read as min(g, D), and f > D leaves
        # no admissible degree at all
        f, g = int(entry["f"]), min(int(entry["g"]), D)
        if f > D:
            return (0,) * (D + 1), D
        return thm26_fugacities(f, g, D, entry.get("quad", "sqrt3")), D
    if preset == "binrec":
        if "D" in entry and D != deg:
            raise FugacityError(f"vertex {v}: binomial-reciprocal fugacities need D = deg(G, v)")
        return binomial_reciprocal_fugacities(deg), deg
    raise FugacityError(f"unknown preset {preset!r}")


def spec_from_config(G: Multigraph, config: Mapping) -> FugacitySpec:
    """Build a FugacitySpec from the JSON config shape (see README)."""
    deg = degree_vector(G)
    delta = G.max_degree()
    default = config.get("default")
    seqs, caps = {}, {}
    for v in G.vertices:
        entry = config.get(str(v), default)
        if entry is None:
            raise FugacityError(f"no fugacity entry for vertex {v} and no default")
        seqs[v], caps[v] = _entry_sequence(entry, v, deg[v], delta)
    spec = FugacitySpec(seqs, caps)
    spec.validate(G)
    return spec


def load_config(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


PRESET_NAMES = ("interval", "ruelle", "thm26", "binrec")


def preset_spec(G: Multigraph, preset: str, **params) -> FugacitySpec:
    entry = {"preset": preset, **params}
    return spec_from_config(G, {"default": entry})
