"""Bessel-accelerated evaluation of the cuboidal lattice sums.

    T1(A;s) = sum' (A i^2 + j^2 + k^2)^-s
    T2(A;s) = sum' (-1)^(i+j+k) (A i^2 + j^2 + k^2)^-s
    L(A;s)  = (A+1)^s / 2 * (T1 + T2)

Each T has two continuations: the "v1" forms expand in K_{s-1} after
transforming the (j, k) plane, the "v2" forms expand in K_{s-1/2} after
transforming the i line.  Both are valid for every real s away from their
guard points, which is what makes them useful as checks on each other.
"""
from __future__ import annotations

import math

import numpy as np

from . import bessel_series as bs
from .arithmetic import r2_table
from .config import DEFAULT, FormulaUsed, SumConfig, SumPoint
from .errors import (
    DomainError,
    PoleAtThreeHalves,
    PoleGuard,
    RemovableSingularity,
    StepTooSmall,
)
from .geometry import require_region_two
from .special import (
    EPS,
    POLE_GUARD,
    _eta,
    _l4,
    _real,
    _rgamma,
    _zeta,
    gamma_zeta_l4,
)

ORACLE_ABOVE = 8.0
V2_WINDOW = 0.1
THREE_HALVES_GUARD = 1e-9
INTEGER_WIDTH = 1e-12


def _r2(n):
    return r2_table(int(n.max()))[n]


def _r2_4n1(n):
    return r2_table(int(4 * n.max() + 1))[4 * n + 1]


def _r2_alt(n):
    return np.where(n % 2 == 0, 1, -1) * r2_table(int(n.max()))[n]


def _positive_A(A) -> float:
    A = _real(A, "A")
    if A <= 0:
        raise DomainError(f"A must be positive, got {A!r}")
    return A


def _series(bseries, scale, cfg: SumConfig):
    """scale * bseries, skipping the work when the prefactor vanishes."""
    if scale == 0.0:
        return 0.0, 0.0
    target = cfg.tol * 1e-3 / abs(scale)
    v, e = bs.evaluate(bseries, target, cfg.max_bessel_index)
    return scale * v, abs(scale) * e


def _point(A, s, head, series, formula):
    v = math.fsum(head) + series[0]
    err = series[1] + 16 * EPS * (sum(abs(h) for h in head) + abs(series[0]))
    return SumPoint(A, s, v, formula, err)


def t1_bessel_v1(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """T1 through K_{s-1}; removable trouble at s = 1, pole at s = 3/2."""
    A, s = _positive_A(A), _real(s, "s")
    if abs(s - 1.0) < POLE_GUARD:
        raise RemovableSingularity("K_{s-1} form is singular at s=1; use t1_bessel_v2")
    if abs(s - 1.5) < POLE_GUARD:
        raise PoleGuard("T1 has a pole at s=3/2")
    head = [
        4.0 * _zeta(s) * _l4(s),
        2.0 * math.pi * _zeta(2 * s - 2) / ((s - 1.0) * A ** (s - 1.0)),
    ]
    bseries = bs.BesselSeries(nu=s - 1, c=2 * math.pi * math.sqrt(A), a=-(s - 1), b=(s - 1) / 2, weight=_r2)
    scale = 4 * math.pi ** s * _rgamma(s) * A ** ((1 - s) / 2)
    return _point(A, s, head, _series(bseries, scale, cfg), FormulaUsed.KMINUS1)


def t1_bessel_v2(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """T1 through K_{s-1/2}; poles of zeta(2s) at 1/2 and zeta(s-1/2) at 3/2."""
    A, s = _positive_A(A), _real(s, "s")
    if abs(s - 0.5) < POLE_GUARD or abs(s - 1.5) < POLE_GUARD:
        raise PoleGuard(f"K_(s-1/2) form of T1 has a pole at s={s!r}")
    rg = _rgamma(s)
    head = [
        2.0 * A ** (-s) * _zeta(2 * s),
        4.0 * math.sqrt(math.pi / A) * rg * gamma_zeta_l4(s - 0.5) if rg else 0.0,
    ]
    bseries = bs.BesselSeries(nu=s - 0.5, c=2 * math.pi / math.sqrt(A), a=s - 0.5, b=-(s - 0.5) / 2, weight=_r2)
    scale = 4 * math.pi ** s * rg * A ** (-s / 2 - 0.25)
    return _point(A, s, head, _series(bseries, scale, cfg), FormulaUsed.KMINUS_HALF)


def t2_bessel_v1(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """Alternating sum through K_{s-1}; entire in s."""
    A, s = _positive_A(A), _real(s, "s")
    head = [-4.0 * _eta(s) * _l4(s)]
    bseries = bs.BesselSeries(
        nu=s - 1, c=2 * math.pi * math.sqrt(A), a=-(s - 1), b=(s - 1) / 2,
        weight=_r2_4n1, outer_alternating=True, inner_start=0, inner_shift=0.5, inner_scale=2.0,
    )
    scale = 4 * math.pi ** s * _rgamma(s) * A ** ((1 - s) / 2)
    return _point(A, s, head, _series(bseries, scale, cfg), FormulaUsed.KMINUS1)


def t2_bessel_v2(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """Alternating sum through K_{s-1/2}; entire in s.

    eta(2s) stays finite at s = 1/2, so no limit has to be taken there.
    """
    A, s = _positive_A(A), _real(s, "s")
    head = [-2.0 * A ** (-s) * _eta(2 * s)]
    bseries = bs.BesselSeries(
        nu=s - 0.5, c=2 * math.pi / math.sqrt(A), a=s - 0.5, b=-(s - 0.5) / 2,
        weight=_r2_alt, outer_shift=-0.5,
    )
    scale = 4 * math.pi ** s * _rgamma(s) * A ** (-s / 2 - 0.25)
    return _point(A, s, head, _series(bseries, scale, cfg), FormulaUsed.KMINUS_HALF)


def t1(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """T1 with the formula chosen away from its delicate points."""
    s = _real(s, "s")
    if abs(s - 1.0) < V2_WINDOW:
        return t1_bessel_v2(A, s, cfg)
    return t1_bessel_v1(A, s, cfg)


def t2(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    s = _real(s, "s")
    if abs(s - 1.0) < V2_WINDOW:
        return t2_bessel_v2(A, s, cfg)
    return t2_bessel_v1(A, s, cfg)


def _combine(A, s, p1: SumPoint, p2: SumPoint, formula) -> SumPoint:
    f = 0.5 * (A + 1.0) ** s
    v = f * (p1.value + p2.value)
    err = abs(f) * (p1.abs_error_estimate + p2.abs_error_estimate)
    return SumPoint(A, s, v, formula, err)


def lattice_sum_formula(A, s, variant: int, cfg: SumConfig = DEFAULT) -> SumPoint:
    """L(A;s) from one fixed family: 1 = K_{s-1} forms, 2 = K_{s-1/2} forms."""
    A, s = _positive_A(A), _real(s, "s")
    if variant == 1:
        return _combine(A, s, t1_bessel_v1(A, s, cfg), t2_bessel_v1(A, s, cfg), FormulaUsed.KMINUS1)
    if variant == 2:
        return _combine(A, s, t1_bessel_v2(A, s, cfg), t2_bessel_v2(A, s, cfg), FormulaUsed.KMINUS_HALF)
    raise DomainError(f"variant must be 1 or 2, got {variant!r}")


def special_case_value(s: float):
    """-1 at s = 0 and 0 at negative integers; None elsewhere."""
    n = round(s)
    if n <= 0 and abs(s - n) <= INTEGER_WIDTH:
        return -1.0 if n == 0 else 0.0
    return None


def lattice_sum_L(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """L(A;s) for 1/3 <= A <= 1 and every real s except the pole at 3/2."""
    A = require_region_two(A)
    s = _real(s, "s")
    if abs(s - 1.5) < THREE_HALVES_GUARD:
        raise PoleAtThreeHalves(f"L(A;s) has a simple pole at s=3/2 (s={s!r})")
    sc = special_case_value(s)
    if sc is not None:
        return SumPoint(A, s, sc, FormulaUsed.SPECIAL_CASE, 0.0)
    if abs(s - 1.0) < V2_WINDOW:
        return lattice_sum_formula(A, s, 2, cfg)
    if s > ORACLE_ABOVE:
        from .oracle import direct_sum_L
        return direct_sum_L(A, s, cfg)
    return lattice_sum_formula(A, s, 1, cfg)


def lsum_dA(A, s, cfg: SumConfig = DEFAULT, h: float = 1e-4):
    """Central first and second differences of L(A;s) in A."""
    A, s = _real(A, "A"), _real(s, "s")
    if h < 1e-6:
        raise StepTooSmall(f"step h={h!r} is below 1e-6")
    if s <= 1.5:
        raise DomainError("the A-derivative check needs s > 3/2")
    require_region_two(A - h)
    require_region_two(A + h)
    lo = lattice_sum_L(A - h, s, cfg).value
    mid = lattice_sum_L(A, s, cfg).value
    hi = lattice_sum_L(A + h, s, cfg).value
    return (hi - lo) / (2 * h), (hi - 2 * mid + lo) / (h * h)
