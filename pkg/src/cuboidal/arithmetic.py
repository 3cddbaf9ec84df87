"""Representation counts r2, u2 and theta-series coefficient tables."""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import CostGuardExceeded, DomainError
from .special import _CHI_TABLE

ENUM_LIMIT = 10 ** 6
TABLE_LIMIT = 1 << 22
BIN_TOL = 1e-9


class RepCount(int):
    """A representation count; behaves as an int and remembers its n."""

    def __new__(cls, n: int, count: int):
        obj = super().__new__(cls, int(count))
        obj.n = int(n)
        return obj

    @property
    def count(self) -> int:
        return int(self)

    def __repr__(self):
        return f"RepCount(n={self.n}, count={int(self)})"


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"expected a nonnegative integer, got {n!r}")
    return int(n)


# Divisor-sum tables are grown by doubling and published as read-only arrays;
# the lock only serialises growth, readers never see a partial table.
_tables: dict = {}
_lock = threading.Lock()
# number of units in Z[i] and Z[omega]
_UNITS = {4: 4, 3: 6}


def _divisor_table(q: int, nmax: int) -> np.ndarray:
    t = _tables.get(q)
    if t is not None and t.size > nmax:
        return t
    with _lock:
        t = _tables.get(q)
        if t is not None and t.size > nmax:
            return t
        size = max(1024, 2 * (nmax + 1))
        chi = _CHI_TABLE[q]
        acc = np.zeros(size, dtype=np.int64)
        for d in range(1, size):
            c = chi[d % q]
            if c:
                acc[d::d] += c
        acc *= _UNITS[q]
        acc[0] = 1
        acc.setflags(write=False)
        _tables[q] = acc
        return acc


def r2_table(nmax: int) -> np.ndarray:
    """r2(0..nmax) as a read-only int64 array."""
    return _divisor_table(4, nmax)[: nmax + 1]


def u2_table(nmax: int) -> np.ndarray:
    """u2(0..nmax) as a read-only int64 array."""
    return _divisor_table(3, nmax)[: nmax + 1]


def _divisor_sum(q: int, n: int) -> int:
    # single large n: pair divisors d <= sqrt(n) with n // d
    chi = _CHI_TABLE[q]
    d = np.arange(1, math.isqrt(n) + 1, dtype=np.int64)
    d = d[n % d == 0]
    e = n // d
    c = np.asarray(chi)
    total = int(c[d % q].sum() + c[e % q].sum())
    if d[-1] * d[-1] == n:
        total -= int(c[d[-1] % q])
    return _UNITS[q] * total


def _count(q: int, n: int) -> int:
    if n == 0:
        return 1
    if n > TABLE_LIMIT:
        return _divisor_sum(q, n)
    return int(_divisor_table(q, n)[n])


def r2(n) -> RepCount:
    """Number of (j, k) with j^2 + k^2 = n, from 4 * sum_{d|n} chi_{-4}(d)."""
    n = _check_n(n)
    return RepCount(n, _count(4, n))


def u2(n) -> RepCount:
    """Number of (j, k) with j^2 + jk + k^2 = n, from 6 * sum_{d|n} chi_{-3}(d)."""
    n = _check_n(n)
    return RepCount(n, _count(3, n))


def _guard(n: int) -> None:
    if n > ENUM_LIMIT:
        raise CostGuardExceeded(f"enumeration limited to n <= {ENUM_LIMIT}, got {n}")


def _is_square(m: np.ndarray) -> np.ndarray:
    ok = m >= 0
    r = np.zeros_like(m)
    r[ok] = np.floor(np.sqrt(m[ok].astype(float))).astype(m.dtype)
    # fix off-by-one from the float sqrt
    r += (r + 1) ** 2 <= m
    r -= (r * r > m) & (r > 0)
    return ok & (r * r == m), r


def r2_enumerate(n) -> RepCount:
    """Brute-force count of lattice points on the circle j^2 + k^2 = n."""
    n = _check_n(n)
    _guard(n)
    if n == 0:
        return RepCount(0, 1)
    j = np.arange(-math.isqrt(n), math.isqrt(n) + 1, dtype=np.int64)
    sq, r = _is_square(n - j * j)
    # each j gives k = +-r, or just k = 0
    count = int(np.sum(np.where(r[sq] == 0, 1, 2)))
    return RepCount(n, count)


def _hex_count(target: int, offset: int, step: int) -> int:
    """Count (a, b) with a, b = offset mod step and a^2 + ab + b^2 = target."""
    if target == 0:
        return 1 if offset % step == 0 else 0
    amax = math.isqrt(4 * target // 3) + 1
    a = np.arange(-amax, amax + 1, dtype=np.int64)
    a = a[(a - offset) % step == 0]
    # b = (-a +- sqrt(4 target - 3 a^2)) / 2
    disc = 4 * target - 3 * a * a
    sq, r = _is_square(disc)
    count = 0
    for sign in (1, -1):
        num = -a[sq] + sign * r[sq]
        even = num % 2 == 0
        b = num[even] // 2
        keep = (b - offset) % step == 0
        if sign == -1:
            # a double root was already counted with the + sign
            keep &= r[sq][even] != 0
        count += int(np.sum(keep))
    return count


def u2_enumerate(n) -> RepCount:
    """Brute-force count of (j, k) with j^2 + jk + k^2 = n."""
    n = _check_n(n)
    _guard(n)
    return RepCount(n, _hex_count(n, 0, 1))


def u2_shifted(n) -> RepCount:
    """Count of (j, k) with (j+1/3)^2 + (j+1/3)(k+1/3) + (k+1/3)^2 = n + 1/3.

    Scaling by 9 turns this into a^2 + ab + b^2 = 9n + 3 with a, b = 1 mod 3,
    which is enumerated directly.
    """
    n = _check_n(n)
    _guard(9 * n + 3)
    return RepCount(n, _hex_count(9 * n + 3, 1, 3))


# ---------------------------------------------------------------- theta series

@dataclass(frozen=True)
class CoefficientTable:
    entries: tuple
    cutoff: float

    def __post_init__(self):
        ex = [e for e, _ in self.entries]
        if any(b <= a for a, b in zip(ex, ex[1:])):
            raise DomainError("exponents must be strictly increasing")
        if any(m <= 0 for _, m in self.entries):
            raise DomainError("multiplicities must be positive")

    @property
    def exponents(self):
        return [e for e, _ in self.entries]

    @property
    def multiplicities(self):
        return [m for _, m in self.entries]

    def multiplicity_at(self, x: float, tol: float = BIN_TOL) -> int:
        for e, m in self.entries:
            if abs(e - x) <= tol:
                return m
        return 0


def theta_coefficients(A: float, cutoff: float) -> CoefficientTable:
    """Coefficients of sum q^{g(A;i,j,k)/d^2} over exponents <= cutoff.

    Uses the bijection (i, j, k) <-> (a, b, c) = (i+j, j+k, i+k) with a+b+c
    even, under which the form is A a^2 + b^2 + c^2.
    """
    from .geometry import norm_divisor

    A = float(A)
    if not A > 0 or not math.isfinite(A):
        raise DomainError(f"A must be positive, got {A!r}")
    if not cutoff >= 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff!r}")
    D = norm_divisor(A)
    bound = cutoff * D * (1 + 1e-12)
    amax = int(math.floor(math.sqrt(bound / A)))
    bmax = int(math.floor(math.sqrt(bound)))
    a = np.arange(-amax, amax + 1)
    b = np.arange(-bmax, bmax + 1)
    aa, bb, cc = np.meshgrid(a, b, b, indexing="ij")
    keep = (aa + bb + cc) % 2 == 0
    vals = (A * aa[keep] ** 2 + bb[keep] ** 2 + cc[keep] ** 2) / D
    vals = np.sort(vals[vals <= cutoff + BIN_TOL])
    entries = []
    start = 0
    for idx in range(1, vals.size + 1):
        if idx == vals.size or vals[idx] - vals[idx - 1] > BIN_TOL:
            entries.append((float(vals[start]), idx - start))
            start = idx
    return CoefficientTable(tuple(entries), float(cutoff))
