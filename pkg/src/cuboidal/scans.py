"""Grid evaluations behind the figure data and the sign-pattern scan."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .config import DEFAULT, SumConfig
from .geometry import THIRD, kissing_number, packing_density
from .hcp import hcp_sum
from .sums import lattice_sum_L

FIG2_S = (2.0, 3.0, 4.0, 6.0)
S_GRID_STEP = 0.01
POLE_GAP = 0.02


def ordered_map(fn, items, jobs: int = 1):
    """map() that may fan out to processes but always keeps input order."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def s_grid(step: float = S_GRID_STEP):
    """s in (-10, 10) on a regular grid, leaving out |s - 3/2| < 0.02."""
    n = int(round(10 / step))
    out = []
    for k in range(-n + 1, n):
        s = k * step
        if abs(s - 1.5) < POLE_GAP - 1e-12:
            continue
        out.append(round(s, 12))
    return out


def _fig1_row(A):
    return (A, packing_density(A))


def _fig2_row(A, cfg):
    vals = [lattice_sum_L(A, s, cfg).value for s in FIG2_S]
    return (A, *vals, kissing_number(A))


def _fig3_row(s, cfg):
    return (s, lattice_sum_L(1.0, s, cfg).value)


def _fig4_row(s, cfg):
    return (s, hcp_sum(s, cfg).value - lattice_sum_L(1.0, s, cfg).value)


def figure_rows(which: int, cfg: SumConfig = DEFAULT, step=None, jobs: int = 1):
    """(column names, rows) for one of the four figures."""
    if which == 1:
        h = step or 0.005
        n = int(round((3.0 - 0.05) / h))
        grid = [round(0.05 + k * h, 12) for k in range(n + 1)]
        return ["A", "packing_density"], ordered_map(_fig1_row, grid, jobs)
    if which == 2:
        n = int(round((1 - THIRD) / step)) if step else 400
        grid = [THIRD + k * (1 - THIRD) / n for k in range(n + 1)]
        grid[-1] = 1.0
        cols = ["A"] + [f"L_s{s:g}" for s in FIG2_S] + ["kissing_number"]
        return cols, ordered_map(partial(_fig2_row, cfg=cfg), grid, jobs)
    if which == 3:
        return ["s", "L_fcc"], ordered_map(partial(_fig3_row, cfg=cfg), s_grid(step or S_GRID_STEP), jobs)
    if which == 4:
        return ["s", "L_hcp_minus_fcc"], ordered_map(partial(_fig4_row, cfg=cfg), s_grid(step or S_GRID_STEP), jobs)
    raise ValueError(f"unknown figure {which!r}")


# ---------------------------------------------------------------- sign scan

POSITIVE = "hcp>fcc>0"
NEGATIVE = "hcp<fcc<0"
BELOW_MINUS_ONE = "-1>hcp>fcc"


def expected_pattern(s: float) -> str:
    if s > 1.5:
        return POSITIVE
    if 0 < s < 1.5:
        return BELOW_MINUS_ONE
    n = math.floor(-s)  # s in (-(n+1), -n)
    return POSITIVE if n % 2 == 1 else NEGATIVE


def pattern_holds(pattern: str, fcc: float, hcp: float) -> bool:
    if pattern == POSITIVE:
        return hcp > fcc > 0
    if pattern == NEGATIVE:
        return hcp < fcc < 0
    return -1 > hcp > fcc


def conjecture_grid(step: float, lo: float = -6.5, hi: float = 10.0):
    """Midpoints of a regular grid, skipping integers and the pole."""
    out = []
    k = 0
    while True:
        s = lo + (k + 0.5) * step
        if s >= hi:
            break
        k += 1
        if abs(s - 1.5) < 1e-9 or abs(s - round(s)) < 1e-9:
            continue
        out.append(s)
    return out


def _conjecture_row(s, cfg):
    fcc = lattice_sum_L(1.0, s, cfg).value
    hcp = hcp_sum(s, cfg).value
    pat = expected_pattern(s)
    return (s, fcc, hcp, pat, "PASS" if pattern_holds(pat, fcc, hcp) else "VIOLATION")


def conjecture_scan(step: float = 0.02, cfg: SumConfig = DEFAULT, jobs: int = 1, lo=-6.5, hi=10.0):
    if not 0 < step <= 0.05:
        raise ValueError(f"grid step must be in (0, 0.05], got {step!r}")
    cols = ["s", "L_fcc", "L_hcp", "expected", "status"]
    return cols, ordered_map(partial(_conjecture_row, cfg=cfg), conjecture_grid(step, lo, hi), jobs)
