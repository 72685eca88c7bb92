"""Root finding and zero-location verdicts for exact univariate polynomials.

Roots at the origin are removed exactly (trailing zero coefficients) and the
rest of the polynomial is split into squarefree factors with exact gcds, so
the floating point Aberth-Ehrlich iteration only ever sees simple roots.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

import numpy as np

from .polynomials import UniPoly, squarefree_decomposition

RESIDUAL_TOL = 1e-10
BOUNDARY_TOL = 1e-8
MAX_SWEEPS = 1000


class RootFindingError(RuntimeError):
    def __init__(self, message: str, residuals=()):
        super().__init__(message)
        self.residuals = list(residuals)


@dataclass(frozen=True)
class RootSet:
    """Nonzero roots (with multiplicity) plus the multiplicity of the root 0.

    ``residuals[i]`` is the backward error ``|s(z)| / sum_k |s_k| |z|^k`` of
    ``roots[i]`` measured on the squarefree factor ``s`` it was computed from.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    zero_multiplicity: int = 0

    def all_roots(self) -> list[complex]:
        return [0j] * self.zero_multiplicity + list(self.roots)

    def to_json(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "residuals": list(self.residuals),
            "zero_multiplicity": self.zero_multiplicity,
        }


# -- Aberth-Ehrlich ---------------------------------------------------------


def _initial_points(c: np.ndarray) -> np.ndarray:
    """Bini's starting points: circles whose radii come from the Newton polygon."""
    n = len(c) - 1
    with np.errstate(divide="ignore"):
        logs = np.where(c != 0, np.log(np.abs(c)), -np.inf)
    pts = [k for k in range(n + 1) if np.isfinite(logs[k])]
    # upper convex hull of (k, log|c_k|)
    hull: list[int] = []
    for k in pts:
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            if (logs[j] - logs[i]) * (k - i) <= (logs[k] - logs[i]) * (j - i):
                hull.pop()
            else:
                break
        hull.append(k)
    z = []
    sigma = 0.7
    for i, j in zip(hull, hull[1:]):
        cnt = j - i
        radius = math.exp((logs[i] - logs[j]) / cnt)
        for q in range(cnt):
            ang = 2 * math.pi * q / cnt + 2 * math.pi * i / n + sigma
            z.append(radius * cmath.exp(1j * ang))
    return np.array(z, dtype=complex)


def _horner(c: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Value, derivative, and absolute-value bound of the polynomial at each z."""
    p = np.full_like(z, c[-1])
    dp = np.zeros_like(z)
    az = np.abs(z)
    bound = np.full(z.shape, abs(c[-1]), dtype=float)
    for a in c[-2::-1]:
        dp = dp * z + p
        p = p * z + a
        bound = bound * az + abs(a)
    return p, dp, bound


def _aberth(c: np.ndarray, tol: float, max_sweeps: int) -> tuple[np.ndarray, np.ndarray]:
    n = len(c) - 1
    if n == 1:
        root = np.array([-c[0] / c[1]], dtype=complex)
        p, _, bound = _horner(c, root)
        return root, np.abs(p) / bound
    z = _initial_points(c)
    eps = np.finfo(float).eps
    active = np.ones(n, dtype=bool)
    for _ in range(max_sweeps):
        p, dp, bound = _horner(c, z)
        small = np.abs(p) <= 4 * n * eps * bound
        active &= ~small
        if not active.any():
            break
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        sums = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            w = ratio / (1.0 - ratio * sums)
        w = np.where(np.isfinite(w), w, 0.0)
        step = np.where(active, w, 0.0)
        z = z - step
        converged = np.abs(step) <= eps * np.abs(z)
        active &= ~converged
        if not active.any():
            break
    # a couple of Newton polishing passes on the now well-separated roots
    for _ in range(2):
        p, dp, _ = _horner(c, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp != 0, p / dp, 0.0)
        cand = z - step
        pc, _, bc = _horner(c, cand)
        p0, _, b0 = _horner(c, z)
        better = np.abs(pc) / bc < np.abs(p0) / b0
        z = np.where(better, cand, z)
    p, _, bound = _horner(c, z)
    return z, np.abs(p) / bound


def find_roots(p: UniPoly, tol: float = RESIDUAL_TOL, max_sweeps: int = MAX_SWEEPS) -> RootSet:
    if p.is_zero():
        raise ValueError("cannot find roots of the zero polynomial")
    k = p.trailing_zeros()
    q = p.shift_down(k)
    roots: list[complex] = []
    residuals: list[float] = []
    for factor, mult in squarefree_decomposition(q):
        c = np.array(factor.to_floats(), dtype=float)
        c = c / np.max(np.abs(c))
        z, res = _aberth(c, tol, max_sweeps)
        if not np.all(res <= tol):
            raise RootFindingError(
                f"root iteration did not reach residual {tol:g} (worst {res.max():.3g})",
                res,
            )
        for zi, ri in zip(z, res):
            roots.extend([complex(zi)] * mult)
            residuals.extend([float(ri)] * mult)
    order = sorted(range(len(roots)), key=lambda i: (roots[i].real, roots[i].imag))
    return RootSet(
        tuple(roots[i] for i in order), tuple(residuals[i] for i in order), k
    )


# -- regions ----------------------------------------------------------------


class Region:
    """Open subsets of C used in zero-location statements."""

    def margin(self, z: complex) -> float:
        """Signed distance to the boundary: positive strictly inside."""
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


def _ray_distance(z: complex, phi: float) -> float:
    w = z * cmath.exp(-1j * phi)
    return abs(w.imag) if w.real > 0 else abs(z)


@dataclass(frozen=True)
class Sector(Region):
    """``{z != 0 : |arg z| < theta}`` with ``arg`` in ``(-pi, pi]``."""

    theta: float

    def __post_init__(self):
        if not 0 < self.theta <= math.pi + 1e-15:
            raise ValueError("sector half-angle must lie in (0, pi]")

    def contains(self, z: complex) -> bool:
        return z != 0 and abs(cmath.phase(z)) < self.theta

    def margin(self, z: complex) -> float:
        if z == 0:
            return 0.0
        d = min(_ray_distance(z, self.theta), _ray_distance(z, -self.theta))
        return d if self.contains(z) else -d

    def to_json(self):
        return {"kind": "sector", "theta": self.theta}


@dataclass(frozen=True)
class Disc(Region):
    kappa: float = 1.0

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError("disc radius must be positive")

    def margin(self, z: complex) -> float:
        return self.kappa - abs(z)

    def to_json(self):
        return {"kind": "disc", "kappa": self.kappa}


@dataclass(frozen=True)
class DiscExterior(Region):
    kappa: float = 1.0

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError("disc radius must be positive")

    def margin(self, z: complex) -> float:
        return abs(z) - self.kappa

    def to_json(self):
        return {"kind": "disc_exterior", "kappa": self.kappa}


HALF_PLANE = Sector(math.pi / 2)


def region_from_json(data: dict) -> Region:
    kind = data["kind"]
    if kind == "sector":
        return Sector(float(data["theta"]))
    if kind == "disc":
        return Disc(float(data["kappa"]))
    if kind == "disc_exterior":
        return DiscExterior(float(data["kappa"]))
    raise ValueError(f"unknown region kind {kind!r}")


class Outcome(str, Enum):
    IDENTICALLY_ZERO = "IdenticallyZero"
    NONVANISHING = "Nonvanishing"
    COUNTEREXAMPLE = "Counterexample"


@dataclass
class RegionVerdict:
    outcome: Outcome
    witness: Optional[Any] = None
    boundary: bool = False
    probabilistic: bool = False
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.outcome is not Outcome.COUNTEREXAMPLE

    def to_json(self) -> dict:
        out: dict = {"outcome": self.outcome.value, "boundary": self.boundary}
        if self.witness is not None:
            w = self.witness
            if isinstance(w, complex):
                out["witness"] = [w.real, w.imag]
            else:
                out["witness"] = [[complex(x).real, complex(x).imag] for x in w]
        if self.probabilistic:
            out["probabilistic"] = True
        out.update(self.detail)
        return out


def _scaled(tol: float, z: complex) -> float:
    return tol * max(1.0, abs(z))


def verdict_from_roots(rs: RootSet, region: Region, tol: float = BOUNDARY_TOL) -> RegionVerdict:
    worst = None
    worst_margin = -math.inf
    boundary = False
    for z in rs.all_roots():
        mg = region.margin(z)
        t = _scaled(tol, z)
        if mg > t and mg > worst_margin:
            worst, worst_margin = z, mg
        elif abs(mg) <= t:
            boundary = True
    if worst is not None:
        return RegionVerdict(Outcome.COUNTEREXAMPLE, worst, boundary, detail={"margin": worst_margin})
    return RegionVerdict(Outcome.NONVANISHING, None, boundary)


def nonvanishing_in(
    p: UniPoly, region: Region, tol: float = BOUNDARY_TOL, residual_tol: float = RESIDUAL_TOL
) -> RegionVerdict:
    if p.is_zero():
        return RegionVerdict(Outcome.IDENTICALLY_ZERO)
    if p.degree == 0:
        return RegionVerdict(Outcome.NONVANISHING)
    return verdict_from_roots(find_roots(p, residual_tol), region, tol)


@dataclass(frozen=True)
class Classification:
    real_rooted_nonpositive: bool
    hurwitz_strict: bool
    hurwitz_quasi: bool
    max_real_part: float
    min_arg_margin: Optional[float]
    max_arg_margin: Optional[float]
    min_modulus: float
    max_modulus: float
    max_abs_imag: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


def classify_roots(rs: RootSet, tol: float = BOUNDARY_TOL) -> Classification:
    allz = rs.all_roots()
    nonzero = list(rs.roots)
    # pi - |arg z|: 0 on the negative axis, pi on the positive axis
    margins = [math.pi - abs(cmath.phase(z)) for z in nonzero]
    return Classification(
        real_rooted_nonpositive=verdict_from_roots(rs, Sector(math.pi), tol).ok,
        hurwitz_strict=all(z.real < -_scaled(tol, z) for z in allz),
        hurwitz_quasi=verdict_from_roots(rs, HALF_PLANE, tol).ok,
        max_real_part=max((z.real for z in allz), default=-math.inf),
        min_arg_margin=min(margins) if margins else None,
        max_arg_margin=max(margins) if margins else None,
        min_modulus=min((abs(z) for z in allz), default=math.inf),
        max_modulus=max((abs(z) for z in allz), default=0.0),
        max_abs_imag=max((abs(z.imag) for z in allz), default=0.0),
    )


def classify(p: UniPoly, tol: float = BOUNDARY_TOL, residual_tol: float = RESIDUAL_TOL) -> Classification:
    if p.is_zero():
        raise ValueError("cannot classify the zero polynomial")
    return classify_roots(find_roots(p, residual_tol), tol)
