"""Pole data, closed-form constants and the functional-equation check."""
from __future__ import annotations

import math

import numpy as np

from .arithmetic import r2_table, u2_table
from .config import DEFAULT, LaurentData, SumConfig
from .errors import DomainError, PoleGuard
from .geometry import require_region_two
from .hcp import HCP
from .special import EULER_GAMMA, POLE_GUARD, _gamma, _l3, _l4, _real, _zeta, sinpi
from .sums import t1

SQRT2 = math.sqrt(2.0)
# e^-z < 1e-18 once z > 42; every exponent below grows like sqrt(N)
_EXP_CUT = 45.0


def _is_hcp(A) -> bool:
    return isinstance(A, str) and A.upper() == HCP


def residue_at_pole(A) -> float:
    """Residue at s = 3/2; twelve times the packing density."""
    if _is_hcp(A):
        return 2 * SQRT2 * math.pi
    A = require_region_two(A)
    return math.pi * (A + 1) ** 1.5 / math.sqrt(A)


def _nmax(rate: float) -> int:
    """Largest N with exp(-rate sqrt(N)) still above the cut."""
    return int((_EXP_CUT / rate) ** 2) + 2


def _c0(A: float) -> float:
    p = (A + 1) ** 1.5
    sa = math.sqrt(A)
    n1 = np.arange(1, _nmax(2 * math.pi * sa) + 1)
    s1 = np.log1p(-np.exp(-2 * math.pi * np.sqrt(A * n1))) * r2_table(n1[-1])[n1]
    n2 = np.arange(0, _nmax(math.pi * math.sqrt(8 * A)) + 1)
    s2 = np.log1p(np.exp(-math.pi * np.sqrt(2 * A * (4 * n2 + 1)))) * r2_table(4 * n2[-1] + 1)[4 * n2 + 1]
    return math.fsum([
        SQRT2 * p * _zeta(1.5) * _l4(1.5),
        math.pi / sa * p * (2 * EULER_GAMMA - 2 + math.log1p(1 / A)),
        -2 * math.pi / sa * p * math.fsum(s1.tolist()),
        -2 * math.pi / sa * p * math.fsum(s2.tolist()),
    ])


def _d0() -> float:
    k = 2 * SQRT2 * math.pi
    n = np.arange(1, _nmax(4 * math.pi * SQRT2 / 3) + 1)
    u = u2_table(n[-1])[n]
    e8 = np.exp(-8 * math.pi * np.sqrt(2 * n) / 3)
    e4 = np.exp(-4 * math.pi * np.sqrt(2 * n) / 3)
    cos = np.where(n % 3 == 0, 1.0, -0.5)
    s1 = u * np.log1p(-e8)
    s2 = cos * u * (np.log1p(e4) - np.log1p(-e4))
    return math.fsum([
        6 * _zeta(1.5) * _l3(1.5),
        k * (2 * EULER_GAMMA - 2 + math.log(1.5)),
        -k * math.fsum(s1.tolist()),
        k * math.fsum(s2.tolist()),
    ])


def laurent_constant(A, cfg: SumConfig = DEFAULT) -> LaurentData:
    """Residue and constant term of the expansion about s = 3/2."""
    if _is_hcp(A):
        return LaurentData(residue_at_pole(HCP), _d0())
    A = require_region_two(A)
    return LaurentData(residue_at_pole(A), _c0(A))


def madelung(A=1.0, cfg: SumConfig = DEFAULT) -> float:
    """Continued value at s = 1/2 of sum' (-1)^(i+j+k) (A i^2 + j^2 + k^2)^-s."""
    A = _real(A, "A")
    if A <= 0:
        raise DomainError(f"A must be positive, got {A!r}")
    head = 4 * (SQRT2 - 1) * _zeta(0.5) * _l4(0.5)
    # exp(-pi sqrt(2A(4N+1))) < 1e-19 once the exponent passes the cut
    nmax = max(0, int(((_EXP_CUT / math.pi) ** 2 / (2 * A) - 1) / 4) + 1)
    n = np.arange(0, nmax + 1)
    m = 4 * n + 1
    r = r2_table(int(m[-1]))[m]
    q = np.exp(-math.pi * np.sqrt(2 * A * m))
    tail = r / np.sqrt(m) * q / (1 + q)
    return head - 2 * SQRT2 * math.fsum(tail.tolist())


def _completed_t1(s: float, cfg: SumConfig) -> float:
    return math.pi ** (-s) * _gamma(s) * t1(1.0, s, cfg).value


def functional_equation_check(s, cfg: SumConfig = DEFAULT) -> float:
    """|Lambda(s) - Lambda(3/2 - s)| for Lambda(s) = pi^-s Gamma(s) T1(1;s)."""
    s = _real(s, "s")
    for x in (s, 1.5 - s):
        if x <= POLE_GUARD and abs(sinpi(x)) < math.pi * POLE_GUARD:
            raise PoleGuard(f"Gamma has a pole at {x!r}")
        if abs(x - 1.5) < POLE_GUARD:
            raise PoleGuard("T1 has a pole at s=3/2")
    return abs(_completed_t1(s, cfg) - _completed_t1(1.5 - s, cfg))
