"""Acceptance gate: one group of tests per numbered criterion.

A line per criterion is printed at the end of the run by conftest.py.
"""
import math

import numpy as np
import pytest

from cuboidal import arithmetic as ar
from cuboidal.continuation import functional_equation_check, laurent_constant, residue_at_pole
from cuboidal.geometry import NAMED_A, kissing_number, packing_density
from cuboidal.hcp import HCP, hcp_formula, hcp_sum
from cuboidal.oracle import direct_sum_L
from cuboidal.scans import conjecture_scan
from cuboidal.sums import (
    lattice_sum_formula,
    lattice_sum_L,
    lsum_dA,
    t1_bessel_v1,
    t1_bessel_v2,
    t2_bessel_v1,
    t2_bessel_v2,
)

crit = pytest.mark.criterion
FOUR_A = (NAMED_A["acc"], NAMED_A["bcc"], NAMED_A["mcc"], NAMED_A["fcc"])


@crit(1)
def test_madelung_constant():
    assert abs(t2_bessel_v1(1, 0.5).value - -1.747564594633182190) <= 1e-12


@crit(2)
def test_t1_at_half():
    assert abs(t1_bessel_v1(1, 0.5).value - -2.837297479480619476) <= 1e-12


@crit(3)
def test_fcc_and_hcp_at_half():
    assert abs(lattice_sum_L(1, 0.5).value - -3.241987063410888394) <= 1e-11
    assert abs(hcp_sum(0.5).value - -3.241858615075732864) <= 1e-11


@crit(4)
def test_values_at_one():
    assert abs(t1_bessel_v2(1, 1).value - -8.913632917585151272) <= 1e-11
    assert abs(t2_bessel_v2(1, 1).value - -2.519356152089445313) <= 1e-11
    assert abs(lattice_sum_L(1, 1).value - -11.432989069674596586) <= 1e-10
    assert abs(hcp_sum(1).value - -11.432653001495285635) <= 1e-10


@crit(5)
def test_laurent_constants():
    c0 = laurent_constant(1.0).constant
    d0 = laurent_constant(HCP).constant
    assert abs(c0 - 6.984052550322247934) <= 1e-11
    assert abs(d0 - 6.984623741438416613) <= 1e-11
    assert abs((c0 - d0) - -0.000571191116168679) <= 1e-12


@crit(6)
@pytest.mark.parametrize("A,exact,density", [
    (1.0, 2 * math.sqrt(2) * math.pi, 1.0),
    (0.5, 3 * math.sqrt(3) * math.pi / 2, 0.5),
    (HCP, 2 * math.sqrt(2) * math.pi, 1.0),
])
def test_residues(A, exact, density):
    r = residue_at_pole(A)
    assert abs(r - exact) <= 1e-13 * exact
    assert abs(r - 12 * packing_density(density)) <= 1e-13 * exact


@crit(7)
def test_pi_identity():
    assert abs(math.pi * t1_bessel_v1(1, 0.5).value - t1_bessel_v2(1, 1).value) < 1e-10


@crit(7)
@pytest.mark.parametrize("s", [0.6, 1.0, 1.3])
def test_functional_equation_defect(s):
    assert functional_equation_check(s) < 1e-10


@crit(8)
@pytest.mark.parametrize("A", FOUR_A + (HCP,))
def test_special_values(A):
    f = hcp_sum if A == HCP else (lambda s: lattice_sum_L(A, s))
    assert f(0).value == -1.0
    for k in range(1, 6):
        assert f(-k).value == 0.0


@crit(9)
@pytest.mark.parametrize("A", FOUR_A)
@pytest.mark.parametrize("s", [-4.5, -0.5, 0.75, 1.25, 2.0, 3.0, 5.0])
def test_dual_grid(A, s):
    assert abs(lattice_sum_formula(A, s, 1).value - lattice_sum_formula(A, s, 2).value) < 1e-10


@crit(9)
@pytest.mark.parametrize("s", [-2.5, 0.75, 2.0, 3.0])
def test_hcp_dual_grid(s):
    assert abs(hcp_formula(s, 1).value - hcp_formula(s, 2).value) < 1e-10


@crit(9)
@pytest.mark.parametrize("A", FOUR_A)
@pytest.mark.parametrize("s", [2.0, 3.0, 4.0])
def test_oracle_grid(A, s):
    o = direct_sum_L(A, s)
    v = lattice_sum_L(A, s)
    assert abs(o.value - v.value) <= o.abs_error_estimate + v.abs_error_estimate


@crit(10)
def test_theta_and_geometry():
    t = ar.theta_coefficients(1.0, 9.5)
    assert t.multiplicities == [1, 12, 6, 24, 12, 24, 8, 48, 6, 36]
    assert [round(e, 12) for e in t.exponents] == list(range(10))
    assert [kissing_number(NAMED_A[n]) for n in ("fcc", "mcc", "bcc", "acc")] == [12, 8, 8, 10]
    want = math.pi * math.sqrt(2) / 6
    assert abs(packing_density(1.0) - want) <= 1e-14 * want
    want = math.pi * math.sqrt(3) / 8
    assert abs(packing_density(0.5) - want) <= 1e-14 * want


@crit(11)
@pytest.mark.parametrize("s", [2.0, 3.0, 4.0, 6.0])
def test_minimum_at_bcc(s):
    d1, d2 = lsum_dA(0.5, s, h=1e-4)
    assert abs(d1) < 1e-5
    assert d2 > 0
    grid = np.linspace(1 / 3, 1, 501)
    vals = np.array([lattice_sum_L(A, s).value for A in grid])
    assert abs(grid[int(np.argmin(vals))] - 0.5) <= grid[1] - grid[0]


@crit(12)
def test_divisor_formulas_match_enumeration():
    r = ar.r2_table(5000)
    u = ar.u2_table(5000)
    for n in range(5001):
        assert r[n] == ar.r2_enumerate(n)
        assert u[n] == ar.u2_enumerate(n)


N = np.arange(-40, 41)
J, K = np.meshgrid(N, N, indexing="ij")
HEX = J * J + J * K + K * K


@crit(12)
@pytest.mark.parametrize("t", [0.37, 0.8, 1.0, 2.3])
def test_theta_transformations(t):
    lhs = np.exp(-math.pi * N ** 2 * t).sum()
    assert abs(lhs - np.exp(-math.pi * N ** 2 / t).sum() / math.sqrt(t)) < 1e-13
    lhs = (np.where(N % 2 == 0, 1.0, -1.0) * np.exp(-math.pi * N ** 2 * t)).sum()
    assert abs(lhs - np.exp(-math.pi * (N + 0.5) ** 2 / t).sum() / math.sqrt(t)) < 1e-13
    # the cubic pair carries 1/(sqrt(3) t)
    dual = np.exp(-2 * math.pi * HEX / (3 * t))
    lhs = np.exp(-2 * math.pi * HEX * t).sum()
    assert abs(lhs - dual.sum() / (math.sqrt(3) * t)) < 1e-13
    x, y = J + 1 / 3, K + 1 / 3
    lhs = np.exp(-2 * math.pi * (x * x + x * y + y * y) * t).sum()
    rhs = (np.exp(2j * math.pi * (J - K) / 3) * dual).sum() / (math.sqrt(3) * t)
    assert abs(lhs - rhs.real) < 1e-13 and abs(rhs.imag) < 1e-13


@crit(12)
def test_limiting_lattices():
    big = ar.theta_coefficients(1e4, 4.5)
    r = ar.r2_table(4)
    assert {round(e, 6): m for e, m in big.entries} == {n: int(r[n]) for n in range(5) if r[n]}
    small = ar.theta_coefficients(1e-4, 4.5)
    assert {round(e, 6): m for e, m in small.entries} == {0: 1, 1: 2, 4: 2}


@crit(12)
def test_sign_pattern_scan():
    _, rows = conjecture_scan(0.02)
    assert len(rows) > 800
    bad = [r for r in rows if r[-1] != "PASS"]
    assert not bad
