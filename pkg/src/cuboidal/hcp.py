"""Hexagonal close packing sum L_HCP(s) = S1(s) + S2(s).

    S1(s) = sum' (i^2 + ij + j^2 + 8k^2/3)^-s
    S2(s) = sum (Q(i+1/3, j+1/3) + 8(k+1/2)^2/3)^-s,  Q(x, y) = x^2 + xy + y^2

Variant 1 of each transforms the hexagonal plane (K_{s-1} terms), variant 2
transforms the k line (K_{s-1/2} terms).
"""
from __future__ import annotations

import math

import numpy as np

from . import bessel_series as bs
from .arithmetic import u2_table
from .config import DEFAULT, FormulaUsed, SumConfig, SumPoint
from .errors import DomainError, PoleAtThreeHalves, PoleGuard, RemovableSingularity
from .special import POLE_GUARD, _l3, _real, _rgamma, _zeta, gamma_zeta_l3
from .sums import (
    ORACLE_ABOVE,
    THREE_HALVES_GUARD,
    V2_WINDOW,
    _point,
    _series,
    special_case_value,
)

HCP = "HCP"
SQRT3 = math.sqrt(3.0)
LOG2 = math.log(2.0)
LOG3 = math.log(3.0)


def _u2(n):
    return u2_table(int(n.max()))[n]


def _u2_cos(n):
    # cos(2 pi N / 3) is 1 on multiples of 3 and -1/2 otherwise
    return np.where(n % 3 == 0, 1.0, -0.5) * u2_table(int(n.max()))[n]


def _u2_3n1(n):
    return u2_table(int(3 * n.max() + 1))[3 * n + 1]


def _guard(s, variant, removable_at_one):
    if variant not in (1, 2):
        raise DomainError(f"variant must be 1 or 2, got {variant!r}")
    if abs(s - 1.5) < POLE_GUARD:
        raise PoleGuard("the HCP sums have a pole at s=3/2")
    if variant == 1 and removable_at_one and abs(s - 1.0) < POLE_GUARD:
        raise RemovableSingularity("K_{s-1} form is singular at s=1; use variant 2")


def _pole_factor(s):
    """(2^(2s-2) - 1) / (s - 1), finite at s = 1."""
    x = s - 1.0
    if x == 0.0:
        return 2 * LOG2
    return math.expm1(2 * x * LOG2) / x


def _shifted_head(w):
    """(3^w - 1) Gamma(w) zeta(w) L_{-3}(w), continued through w = 0."""
    if abs(w) < 0.25:
        ratio = LOG3 if w == 0 else math.expm1(w * LOG3) / w
        return ratio * math.gamma(1.0 + w) * _zeta(w) * _l3(w)
    return math.expm1(w * LOG3) * gamma_zeta_l3(w)


def hcp_s1(s, cfg: SumConfig = DEFAULT, variant: int = 1) -> SumPoint:
    s = _real(s, "s")
    if variant == 2 and abs(s - 0.5) < POLE_GUARD:
        raise PoleGuard("variant 2 of S1 has a pole of zeta(2s) at s=1/2")
    _guard(s, variant, removable_at_one=True)
    rg = _rgamma(s)
    if variant == 1:
        head = [
            6.0 * _zeta(s) * _l3(s),
            4 * math.pi / SQRT3 * (3 / 8) ** (s - 1) * _zeta(2 * s - 2) / (s - 1),
        ]
        # (N / (2k^2))^((s-1)/2) = 2^(-(s-1)/2) k^-(s-1) N^((s-1)/2)
        bseries = bs.BesselSeries(nu=s - 1, c=8 * math.pi * math.sqrt(2) / 3, a=-(s - 1), b=(s - 1) / 2, weight=_u2)
        scale = 8 / SQRT3 * math.pi ** s * rg * 2 ** (-(s - 1) / 2)
        formula = FormulaUsed.KMINUS1
    else:
        head = [
            2 * (3 / 8) ** s * _zeta(2 * s),
            math.sqrt(27 * math.pi / 2) * rg * gamma_zeta_l3(s - 0.5) if rg else 0.0,
        ]
        bseries = bs.BesselSeries(nu=s - 0.5, c=math.pi * math.sqrt(1.5), a=s - 0.5, b=-(2 * s - 1) / 4, weight=_u2)
        scale = 4 * math.pi ** s * rg * (3 / 8) ** ((2 * s + 1) / 4)
        formula = FormulaUsed.KMINUS_HALF
    return _point(HCP, s, head, _series(bseries, scale, cfg), formula)


def hcp_s2(s, cfg: SumConfig = DEFAULT, variant: int = 1) -> SumPoint:
    s = _real(s, "s")
    _guard(s, variant, removable_at_one=True)
    rg = _rgamma(s)
    if variant == 1:
        head = [4 * math.pi / SQRT3 * (3 / 8) ** (s - 1) * _pole_factor(s) * _zeta(2 * s - 2)]
        # (N / (2 (k+1/2)^2))^((s-1)/2), k >= 0
        bseries = bs.BesselSeries(
            nu=s - 1, c=8 * math.pi * math.sqrt(2) / 3, a=-(s - 1), b=(s - 1) / 2,
            weight=_u2_cos, outer_shift=-0.5,
        )
        scale = 8 / SQRT3 * math.pi ** s * rg * 2 ** (-(s - 1) / 2)
        formula = FormulaUsed.KMINUS1
    else:
        head = [math.sqrt(27 * math.pi / 8) * rg * _shifted_head(s - 0.5) if rg else 0.0]
        bseries = bs.BesselSeries(
            nu=s - 0.5, c=math.pi * math.sqrt(1.5), a=s - 0.5, b=-(s - 0.5) / 2,
            weight=_u2_3n1, outer_alternating=True, inner_start=0, inner_shift=1 / 3,
        )
        scale = 2 * math.pi ** s * rg * (3 / 8) ** ((2 * s + 1) / 4)
        formula = FormulaUsed.KMINUS_HALF
    return _point(HCP, s, head, _series(bseries, scale, cfg), formula)


def hcp_formula(s, variant: int, cfg: SumConfig = DEFAULT) -> SumPoint:
    """S1 + S2 from one family of formulas."""
    a = hcp_s1(s, cfg, variant)
    b = hcp_s2(s, cfg, variant)
    return SumPoint(HCP, a.s, a.value + b.value, a.formula_used, a.abs_error_estimate + b.abs_error_estimate)


def hcp_sum(s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """L_HCP(s) for every real s except the pole at 3/2."""
    s = _real(s, "s")
    if abs(s - 1.5) < THREE_HALVES_GUARD:
        raise PoleAtThreeHalves(f"L_HCP(s) has a simple pole at s=3/2 (s={s!r})")
    sc = special_case_value(s)
    if sc is not None:
        return SumPoint(HCP, s, sc, FormulaUsed.SPECIAL_CASE, 0.0)
    if abs(s - 1.0) < V2_WINDOW:
        return hcp_formula(s, 2, cfg)
    if s > ORACLE_ABOVE:
        from .oracle import direct_sum_hcp
        return direct_sum_hcp(s, cfg)
    return hcp_formula(s, 1, cfg)
