"""Configuration and result records shared by the summation code."""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, replace

from .errors import DomainError

TOL_ENV = "CUBOIDAL_TOL"


class FormulaUsed(str, enum.Enum):
    KMINUS1 = "Kminus1"
    KMINUS_HALF = "KminusHalf"
    SPECIAL_CASE = "SpecialCase"
    ORACLE = "Oracle"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SumConfig:
    """Truncation policy for Bessel double sums and shell oracles."""

    tol: float = 1e-13
    max_bessel_index: int = 400
    oracle_shell_radius: int = 120

    def __post_init__(self):
        if not (math.isfinite(self.tol) and self.tol > 0):
            raise DomainError(f"tol must be positive, got {self.tol!r}")
        if self.max_bessel_index < 1 or self.oracle_shell_radius < 8:
            raise DomainError("index caps must be positive (shell radius >= 8)")

    @classmethod
    def from_env(cls, **overrides) -> "SumConfig":
        cfg = cls()
        raw = os.environ.get(TOL_ENV)
        if raw:
            cfg = replace(cfg, tol=float(raw))
        return replace(cfg, **overrides) if overrides else cfg


DEFAULT = SumConfig()


@dataclass(frozen=True)
class SumPoint:
    A: object  # float, or the string "HCP"
    s: float
    value: float
    formula_used: FormulaUsed
    abs_error_estimate: float = 0.0

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class LaurentData:
    residue: float
    constant: float

    def __post_init__(self):
        if not self.residue > 0:
            raise DomainError("residue must be positive")
