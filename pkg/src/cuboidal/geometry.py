"""Geometry of the cuboidal family: bases, Gram matrices, norms, density."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RegionError

THIRD = 1.0 / 3.0
# float(1/3) sits just below the true boundary, so region tests use a margin
BOUNDARY_TOL = 1e-12

U1 = np.array([[1, 0, 0], [-1, 0, 1], [0, -1, 0]])
U2 = np.array([[1, 1, -1], [1, 0, 0], [0, 1, 0]])

NAMED_A = {
    "fcc": 1.0,
    "mcc": 1.0 / math.sqrt(2.0),
    "bcc": 0.5,
    "acc": THIRD,
}


@dataclass(frozen=True)
class LatticeParam:
    A: float
    v: float = 1.0

    def __post_init__(self):
        for name in ("A", "v"):
            x = getattr(self, name)
            if not (math.isfinite(x) and x > 0):
                raise DomainError(f"{name} must be finite and positive, got {x!r}")

    @classmethod
    def from_uv(cls, u: float, v: float) -> "LatticeParam":
        return cls(u * u / (v * v), v)

    @property
    def u(self) -> float:
        return self.v * math.sqrt(self.A)

    @property
    def region(self) -> str:
        return region(self.A)


def _param(p) -> LatticeParam:
    return p if isinstance(p, LatticeParam) else LatticeParam(float(p))


def region(A: float) -> str:
    if A < THIRD - BOUNDARY_TOL:
        return "I"
    if A <= 1.0 + BOUNDARY_TOL:
        return "II"
    return "III"


def in_region_two(A: float) -> bool:
    return THIRD - BOUNDARY_TOL <= A <= 1.0 + BOUNDARY_TOL


def require_region_two(A: float) -> float:
    A = float(A)
    if not math.isfinite(A) or not in_region_two(A):
        raise RegionError(f"A must lie in [1/3, 1], got {A!r}")
    return A


def generator_matrix(p) -> np.ndarray:
    p = _param(p)
    u, v = p.u, p.v
    return np.array([[u, v, 0.0], [u, 0.0, v], [0.0, v, v]])


def gram_matrix(p) -> np.ndarray:
    p = _param(p)
    A = p.A
    return p.v ** 2 * np.array([[1 + A, A, 1.0], [A, 1 + A, 1.0], [1.0, 1.0, 2.0]])


def equivalent_grams(p):
    """The Gram matrices U1 G U1^T and U2 G U2^T of the same lattice."""
    G = gram_matrix(p)
    return U1 @ G @ U1.T, U2 @ G @ U2.T


def quadratic_form(p, i, j, k):
    """v^2 (A (i+j)^2 + (j+k)^2 + (i+k)^2); works elementwise on arrays."""
    p = _param(p)
    return p.v ** 2 * (p.A * (i + j) ** 2 + (j + k) ** 2 + (i + k) ** 2)


def _form_of(G, i, j, k):
    x = np.stack(np.broadcast_arrays(i, j, k), axis=-1).astype(float)
    return np.einsum("...a,ab,...b->...", x, G, x)


def quadratic_form_g1(p, i, j, k):
    return _form_of(equivalent_grams(p)[0], i, j, k)


def quadratic_form_g2(p, i, j, k):
    return _form_of(equivalent_grams(p)[1], i, j, k)


def norm_divisor(A: float) -> float:
    """Squared minimum distance at v = 1."""
    r = region(A)
    if r == "I":
        return 4.0 * A
    if r == "II":
        return A + 1.0
    return 2.0


def normalized_form(p, i, j, k):
    """Quadratic form scaled so that the minimum distance is 1."""
    p = _param(p)
    return quadratic_form(p, i, j, k) / (p.v ** 2 * norm_divisor(p.A))


def min_distance(p) -> float:
    p = _param(p)
    return p.v * math.sqrt(norm_divisor(p.A))


def minimal_vectors(p, box: int = 3) -> list:
    """All integer triples in |i|,|j|,|k| <= box attaining the minimum of g."""
    p = _param(p)
    r = np.arange(-box, box + 1)
    i, j, k = (x.ravel() for x in np.meshgrid(r, r, r, indexing="ij"))
    nz = (i != 0) | (j != 0) | (k != 0)
    i, j, k = i[nz], j[nz], k[nz]
    g = normalized_form(p, i, j, k)
    m = g.min()
    hit = np.abs(g - m) <= 1e-9 * max(m, 1.0)
    return sorted(zip(i[hit].tolist(), j[hit].tolist(), k[hit].tolist()))


def kissing_number(p) -> int:
    A = _param(p).A
    if abs(A - THIRD) <= BOUNDARY_TOL:
        return 10
    if abs(A - 1.0) <= BOUNDARY_TOL:
        return 12
    if A < THIRD:
        return 2
    if A < 1.0:
        return 8
    return 4


def packing_density(p) -> float:
    A = _param(p).A
    r = region(A)
    if r == "I":
        return 2 * math.pi * A / 3
    if r == "II":
        return math.pi / 12 * math.sqrt((A + 1) ** 3 / A)
    return math.pi / 6 * math.sqrt(2 / A)


def center_density(p) -> float:
    return packing_density(p) * 3 / (4 * math.pi)


def packing_density_derivative(p) -> float:
    A = require_region_two(_param(p).A)
    return math.pi / 12 * (A - 0.5) * math.sqrt((A + 1) / A ** 3)
