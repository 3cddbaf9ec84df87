"""Regression checks against published constants, plus consistency grids."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .config import DEFAULT, SumConfig
from .continuation import functional_equation_check, laurent_constant, madelung, residue_at_pole
from .geometry import NAMED_A, packing_density
from .hcp import HCP, hcp_formula, hcp_sum
from .oracle import direct_sum_L
from .sums import lattice_sum_L, lattice_sum_formula, lsum_dA, t1_bessel_v1, t1_bessel_v2, t2_bessel_v1, t2_bessel_v2

REFERENCE = {
    "madelung": -1.7475645946331821906,
    "t1_half": -2.8372974794806194766,
    "fcc_half": -3.2419870634108883942,
    "hcp_half": -3.2418586150757328647,
    "t1_one": -8.9136329175851512726,
    "t2_one": -2.5193561520894453133,
    "fcc_one": -11.4329890696745965860,
    "hcp_one": -11.4326530014952856357,
    "c0_fcc": 6.9840525503222479340,
    "d0_hcp": 6.9846237414384166130,
    "c0_minus_d0": -0.0005711911161686790,
}

FOUR_A = (NAMED_A["acc"], NAMED_A["bcc"], NAMED_A["mcc"], NAMED_A["fcc"])
DUAL_S = (-4.5, -0.5, 0.75, 1.25, 2.0, 3.0, 5.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    target: float
    achieved: float
    error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.error <= self.tol


@dataclass(frozen=True)
class Check:
    name: str
    target: float
    compute: Callable[[SumConfig], float]
    tol: float
    relative: bool = False

    def run(self, cfg: SumConfig, tol_override: Optional[float] = None) -> CheckResult:
        got = self.compute(cfg)
        err = abs(got - self.target)
        if self.relative:
            err /= abs(self.target)
        return CheckResult(self.name, self.target, got, err, self.tol if tol_override is None else tol_override)


def quick_checks() -> list:
    R = REFERENCE
    return [
        Check("madelung t2_v1(1,1/2)", R["madelung"], lambda c: t2_bessel_v1(1, 0.5, c).value, 1e-12),
        Check("madelung closed form", R["madelung"], lambda c: madelung(1.0, c), 1e-12),
        Check("T1(1;1/2)", R["t1_half"], lambda c: t1_bessel_v1(1, 0.5, c).value, 1e-12),
        Check("L_FCC(1/2)", R["fcc_half"], lambda c: lattice_sum_L(1, 0.5, c).value, 1e-11),
        Check("L_HCP(1/2)", R["hcp_half"], lambda c: hcp_sum(0.5, c).value, 1e-11),
        Check("T1(1;1)", R["t1_one"], lambda c: t1_bessel_v2(1, 1, c).value, 1e-11),
        Check("T2(1;1)", R["t2_one"], lambda c: t2_bessel_v2(1, 1, c).value, 1e-11),
        Check("L_FCC(1)", R["fcc_one"], lambda c: lattice_sum_L(1, 1, c).value, 1e-10),
        Check("L_HCP(1)", R["hcp_one"], lambda c: hcp_sum(1, c).value, 1e-10),
        Check("c0 at A=1", R["c0_fcc"], lambda c: laurent_constant(1.0, c).constant, 1e-11),
        Check("d0", R["d0_hcp"], lambda c: laurent_constant(HCP, c).constant, 1e-11),
        Check("c0 - d0", R["c0_minus_d0"],
              lambda c: laurent_constant(1.0, c).constant - laurent_constant(HCP, c).constant, 1e-12),
    ]


def _dual_checks() -> list:
    out = []
    for A in FOUR_A:
        for s in DUAL_S:
            out.append(Check(
                f"dual A={A:.6g} s={s:g}", 0.0,
                lambda c, A=A, s=s: lattice_sum_formula(A, s, 1, c).value - lattice_sum_formula(A, s, 2, c).value,
                1e-10,
            ))
    for s in (-2.5, 0.75, 2.0, 3.0):
        out.append(Check(f"hcp dual s={s:g}", 0.0,
                         lambda c, s=s: hcp_formula(s, 1, c).value - hcp_formula(s, 2, c).value, 1e-10))
    return out


class _OracleCheck(Check):
    """Passes when the accelerated value sits inside the oracle's error bar."""

    def run(self, cfg, tol_override=None):
        A, s = self.target
        o = direct_sum_L(A, s, cfg)
        v = lattice_sum_L(A, s, cfg)
        tol = o.abs_error_estimate + v.abs_error_estimate if tol_override is None else tol_override
        return CheckResult(self.name, o.value, v.value, abs(o.value - v.value), tol)


def _oracle_checks() -> list:
    return [_OracleCheck(f"oracle A={A:.6g} s={s:g}", (A, s), None, 0.0)
            for A in FOUR_A for s in (2.0, 3.0, 4.0)]


def _structural_checks() -> list:
    out = []
    for A, exact in ((1.0, 2 * math.sqrt(2) * math.pi), (0.5, 3 * math.sqrt(3) * math.pi / 2)):
        out.append(Check(f"residue A={A:g}", exact, lambda c, A=A: residue_at_pole(A), 1e-13, relative=True))
        out.append(Check(f"residue = 12 density A={A:g}", 12 * packing_density(A),
                         lambda c, A=A: residue_at_pole(A), 1e-13, relative=True))
    out.append(Check("residue HCP", 2 * math.sqrt(2) * math.pi, lambda c: residue_at_pole(HCP), 1e-13, relative=True))
    out.append(Check("pi T1(1;1/2) = T1(1;1)", 0.0,
                     lambda c: math.pi * t1_bessel_v1(1, 0.5, c).value - t1_bessel_v2(1, 1, c).value, 1e-10))
    for s in (0.6, 1.0, 1.3):
        out.append(Check(f"functional equation s={s:g}", 0.0,
                         lambda c, s=s: functional_equation_check(s, c), 1e-10))
    for A in FOUR_A:
        for k in range(0, 6):
            want = -1.0 if k == 0 else 0.0
            out.append(Check(f"special L(A={A:.6g};{-k})", want, lambda c, A=A, k=k: lattice_sum_L(A, -k, c).value, 0.0))
    for k in range(0, 6):
        want = -1.0 if k == 0 else 0.0
        out.append(Check(f"special HCP({-k})", want, lambda c, k=k: hcp_sum(-k, c).value, 0.0))
    for s in (2.0, 3.0, 4.0, 6.0):
        out.append(Check(f"dL/dA at 1/2, s={s:g}", 0.0, lambda c, s=s: lsum_dA(0.5, s, c)[0], 1e-5))
    return out


def full_checks() -> list:
    return quick_checks() + _structural_checks() + _dual_checks() + _oracle_checks()


def run_checks(level: str = "quick", cfg: SumConfig = DEFAULT, tol: Optional[float] = None) -> list:
    checks = quick_checks() if level == "quick" else full_checks()
    return [c.run(cfg, tol) for c in checks]
