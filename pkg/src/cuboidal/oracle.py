"""Brute-force lattice sums over growing cubes, used as independent checks.

Points are grouped into cubic shells max(|i|, |j|, |k|) = r.  For a
summand homogeneous of degree -2s the partial sum over the cube of radius R
differs from the full sum by a series in powers (R + 1/2)^(3-2s-m), m >= 0;
a small least-squares-free fit on several radii removes the leading terms.
Alternating sums converge by themselves once consecutive partial sums are
averaged.
"""
from __future__ import annotations

import math

import numpy as np

from .config import DEFAULT, FormulaUsed, SumConfig, SumPoint
from .errors import DomainError, NonConvergent
from .geometry import gram_matrix, require_region_two
from .hcp import HCP

CONVERGENCE_MARGIN = 0.05
LARGE_S = 8.0
_FIT_FRACTIONS = (1.0, 0.85, 0.7, 0.55, 0.4, 0.25)

HEX3 = np.array([[1.0, 0.5, 0.0], [0.5, 1.0, 0.0], [0.0, 0.0, 8.0 / 3.0]])


def shell_sums(Q, s, R, shift=(0.0, 0.0, 0.0), alternating=False, numerator=None):
    """Sum of num(x) q(x)^-s over each cubic shell r = 0..R, x = n + shift.

    q(x) = x^T Q x.  The origin is skipped when the shift is zero.  Index
    ranges are chosen so that a half shift gives symmetric shells.
    """
    Q = np.asarray(Q, dtype=float)
    shift = np.asarray(shift, dtype=float)
    lo = [-R - 1 if abs(c - 0.5) < 1e-15 else -R for c in shift]
    axes = [np.arange(lo[d], R + 1) for d in range(3)]
    # shell index: |n| on plain axes, |n + 1/2| - 1/2 on half-shifted ones
    rank = [np.where(axes[d] < 0, -axes[d] - (1 if lo[d] == -R - 1 else 0), axes[d]) for d in range(3)]
    J, K = np.meshgrid(axes[1] + shift[1], axes[2] + shift[2], indexing="ij")
    RJ, RK = np.meshgrid(rank[1], rank[2], indexing="ij")
    RJK = np.maximum(RJ, RK)
    par_jk = (np.add.outer(axes[1], axes[2]) % 2) if alternating else None
    out = np.zeros(R + 1)
    skip_origin = not np.any(shift)
    for i, ri in zip(axes[0], rank[0]):
        x = i + shift[0]
        q = (Q[0, 0] * x * x + 2 * x * (Q[0, 1] * J + Q[0, 2] * K)
             + Q[1, 1] * J * J + 2 * Q[1, 2] * J * K + Q[2, 2] * K * K)
        if skip_origin and i == 0:
            q = q.copy()
            q[-lo[1], -lo[2]] = 1.0
        v = np.exp(-s * np.log(q))
        if numerator is not None:
            v = v * numerator(x, J, K)
        if skip_origin and i == 0:
            v[-lo[1], -lo[2]] = 0.0
        if alternating:
            v = np.where((par_jk + i) % 2 == 0, v, -v)
        shell = np.maximum(RJK, ri)
        out += np.bincount(shell.ravel(), weights=v.ravel(), minlength=R + 1)
    return out


def _fit_limit(partial, radii, p0, nterms):
    x = np.array([r + 0.5 for r in radii], dtype=float)
    y = np.array([partial[r] for r in radii])
    # columns scaled by their value at the largest radius for conditioning
    cols = [np.ones_like(x)] + [(x / x[0]) ** (p0 - m) for m in range(nterms)]
    M = np.stack(cols, axis=1)
    return float(np.linalg.solve(M, y)[0])


def extrapolate(shells, s_degree, shifted=False):
    """Limit of the cube partial sums and an error estimate."""
    partial = np.cumsum(shells)
    R = partial.size - 1
    if s_degree > LARGE_S:
        # the tail beyond R is below the last shell times a geometric factor
        return float(partial[R]), 4 * abs(shells[R]) + 1e-15 * abs(partial[R])
    radii = sorted({max(2, int(round(f * R))) for f in _FIT_FRACTIONS}, reverse=True)
    p0 = 3 - 2 * s_degree
    best = _fit_limit(partial, radii, p0, len(radii) - 1)
    coarse = _fit_limit(partial, radii[:-1], p0, len(radii) - 2)
    scale = float(np.max(np.abs(partial)))
    return best, abs(best - coarse) + 1e3 * np.finfo(float).eps * scale


def average_alternating(shells):
    partial = np.cumsum(shells)
    R = partial.size - 1
    once = 0.5 * (partial[R] + partial[R - 1])
    twice = 0.25 * (partial[R] + 2 * partial[R - 1] + partial[R - 2])
    scale = float(np.max(np.abs(partial[R - 2:])))
    return float(twice), abs(twice - once) + 64 * np.finfo(float).eps * scale


def _check_s(s):
    s = float(s)
    if not math.isfinite(s):
        raise DomainError("s must be finite")
    if s <= 1.5 + CONVERGENCE_MARGIN:
        raise NonConvergent(f"direct summation needs s > 3/2 + {CONVERGENCE_MARGIN}, got {s!r}")
    return s


def _radius(s, cfg):
    return min(cfg.oracle_shell_radius, 32) if s > LARGE_S else cfg.oracle_shell_radius


def _diag(A):
    A = float(A)
    if not (math.isfinite(A) and A > 0):
        raise DomainError(f"A must be positive, got {A!r}")
    return np.diag([A, 1.0, 1.0])


def direct_sum_T1(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    s = _check_s(s)
    sh = shell_sums(_diag(A), s, _radius(s, cfg))
    v, e = extrapolate(sh, s)
    return SumPoint(float(A), s, v, FormulaUsed.ORACLE, e)


def direct_sum_T2(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    s = _check_s(s)
    sh = shell_sums(_diag(A), s, _radius(s, cfg), alternating=True)
    v, e = average_alternating(sh)
    return SumPoint(float(A), s, v, FormulaUsed.ORACLE, e)


def direct_sum_L(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """L(A;s) summed over the lattice itself, normalised to minimum distance 1."""
    A = require_region_two(A)
    s = _check_s(s)
    Q = gram_matrix(A) / (A + 1)
    v, e = extrapolate(shell_sums(Q, s, _radius(s, cfg)), s)
    return SumPoint(A, s, v, FormulaUsed.ORACLE, e)


def direct_sum_hcp_parts(s, cfg: SumConfig = DEFAULT):
    s = _check_s(s)
    R = _radius(s, cfg)
    p1 = extrapolate(shell_sums(HEX3, s, R), s)
    p2 = extrapolate(shell_sums(HEX3, s, R, shift=(1 / 3, 1 / 3, 0.5)), s, shifted=True)
    return (SumPoint(HCP, s, p1[0], FormulaUsed.ORACLE, p1[1]),
            SumPoint(HCP, s, p2[0], FormulaUsed.ORACLE, p2[1]))


def direct_sum_hcp(s, cfg: SumConfig = DEFAULT) -> SumPoint:
    a, b = direct_sum_hcp_parts(s, cfg)
    return SumPoint(HCP, a.s, a.value + b.value, FormulaUsed.ORACLE,
                    a.abs_error_estimate + b.abs_error_estimate)


def direct_dA(A, s, cfg: SumConfig = DEFAULT) -> SumPoint:
    """dL/dA by differentiating the summand of L in a fixed basis.

    In the basis where the form reads i^2 + j^2 + k^2 - 2(ij + ik) A/(A+1)
    + 2jk (A-1)/(A+1) the derivative of each term is explicit.
    """
    A = require_region_two(A)
    s = _check_s(s)
    a = A / (A + 1)
    b = (A - 1) / (A + 1)
    Q = np.array([[1.0, -a, -a], [-a, 1.0, b], [-a, b, 1.0]])

    def num(x, J, K):
        return x * J + x * K - 2 * J * K

    sh = shell_sums(Q, s + 1, _radius(s, cfg), numerator=num)
    v, e = extrapolate(sh, s)
    f = 2 * s / (A + 1) ** 2
    return SumPoint(A, s, f * v, FormulaUsed.ORACLE, abs(f) * e)
