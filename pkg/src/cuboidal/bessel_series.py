"""Double series of K-Bessel terms with a bound-driven truncation.

Every accelerated formula has a tail of the shape

    sum_{i>=1} sum_{N>=n0} sgn(i) w(N) x_i^a y_N^b K_nu(c x_i sqrt(y_N))

with x_i = i + shift and y_N = scale * N + y_shift.  Terms are ordered by the Bessel
argument z = c x sqrt(y); the cut Z is raised in bands of width 10 until the
bound for the next band drops below the target.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .special import EPS, k_bound, kv

BAND = 10.0


@dataclass(frozen=True)
class BesselSeries:
    nu: float
    c: float
    a: float
    b: float
    weight: Callable  # N array -> weight array (may contain zeros)
    outer_shift: float = 0.0
    outer_alternating: bool = False
    inner_start: int = 1
    inner_shift: float = 0.0
    inner_scale: float = 1.0


def _pairs(bseries: BesselSeries, zmax: float, cap: int):
    x_min = 1 + bseries.outer_shift
    y_min = bseries.inner_scale * bseries.inner_start + bseries.inner_shift
    imax = min(cap, int(zmax / (bseries.c * math.sqrt(y_min)) - bseries.outer_shift) + 1)
    ny = ((zmax / (bseries.c * x_min)) ** 2 - bseries.inner_shift) / bseries.inner_scale
    nmax = min(cap, int(ny) + 1)
    nmax = max(nmax, bseries.inner_start)
    i = np.arange(1, imax + 1)
    n = np.arange(bseries.inner_start, nmax + 1)
    w = np.asarray(bseries.weight(n), dtype=float)
    keep_n = w != 0
    n, w = n[keep_n], w[keep_n]
    x = i + bseries.outer_shift
    y = bseries.inner_scale * n + bseries.inner_shift
    z = bseries.c * np.outer(x, np.sqrt(y))
    return i, x, y, w, z, imax >= cap or nmax >= cap


def evaluate(bseries: BesselSeries, target: float, cap: int = 400):
    """Return (sum, error_estimate) with truncation error below ~target."""
    zmax = 30.0
    while True:
        i, x, y, w, z, capped = _pairs(bseries, zmax + BAND, cap)
        band = (z >= zmax) & (z < zmax + BAND)
        if np.any(band):
            pref = np.abs(np.outer(x ** bseries.a, w * y ** bseries.b))
            tail = float(np.sum(pref[band] * k_bound(bseries.nu, z[band])))
        else:
            tail = 0.0
        if tail <= target or capped or zmax > 4000:
            break
        zmax += BAND
    inside = z < zmax
    if not np.any(inside):
        return 0.0, 2 * tail
    sgn = np.where(i % 2 == 1, -1.0, 1.0) if bseries.outer_alternating else np.ones(i.size)
    pref = np.outer(sgn * x ** bseries.a, w * y ** bseries.b)
    terms = pref[inside] * kv(bseries.nu, z[inside])
    total = math.fsum(terms.tolist())
    err = 2 * tail + 8 * EPS * float(np.sum(np.abs(terms)))
    return total, err
