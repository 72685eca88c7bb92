from __future__ import annotations

from dataclasses import dataclass

from .enumeration import BRUTE_CAP, STATE_CAP
from .inequalities import DEFAULT_MAX_ORDER
from .roots import BOUNDARY_TOL, RESIDUAL_TOL


@dataclass(frozen=True)
class RunConfig:
    residual_tol: float = RESIDUAL_TOL
    boundary_tol: float = BOUNDARY_TOL
    brute_cap: int = BRUTE_CAP
    state_cap: int = STATE_CAP
    max_minor_order: int = DEFAULT_MAX_ORDER
    seed: int = 0
    fmt: str = "json"
    # widening added to the sector deviation read off computed roots
    alpha_widening: float = 1e-8

    def __post_init__(self):
        if self.residual_tol <= 0 or self.boundary_tol <= 0:
            raise ValueError("tolerances must be positive")
        if min(self.brute_cap, self.state_cap, self.max_minor_order) < 1:
            raise ValueError("caps must be at least 1")
        if self.fmt not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.fmt!r}")


DEFAULT = RunConfig()
