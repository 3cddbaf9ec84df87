import itertools

import numpy as np
import pytest

from cuboidal import oracle
from cuboidal.config import FormulaUsed, SumConfig
from cuboidal.errors import DomainError, NonConvergent, RegionError
from cuboidal.sums import lattice_sum_L, t1_bessel_v1, t2_bessel_v1


def _brute_shells(Q, s, R, shift=(0, 0, 0), alternating=False):
    out = np.zeros(R + 1)
    half = [abs(c - 0.5) < 1e-15 for c in shift]
    rng = [range(-R - 1 if h else -R, R + 1) for h in half]
    for i, j, k in itertools.product(*rng):
        if not any(shift) and i == j == k == 0:
            continue
        x = np.array([i, j, k]) + shift
        rank = max(
            (-n - 1 if n < 0 else n) if h else abs(n)
            for n, h in zip((i, j, k), half)
        )
        v = (x @ Q @ x) ** -s
        if alternating and (i + j + k) % 2:
            v = -v
        out[rank] += v
    return out


@pytest.mark.parametrize("alternating", [False, True])
def test_shell_sums_match_brute_force(alternating):
    Q = np.array([[0.7, 0.2, 0.1], [0.2, 1.0, 0.3], [0.1, 0.3, 1.4]])
    got = oracle.shell_sums(Q, 2.3, 4, alternating=alternating)
    assert np.allclose(got, _brute_shells(Q, 2.3, 4, alternating=alternating), rtol=1e-13, atol=0)


def test_shifted_shell_sums_match_brute_force():
    got = oracle.shell_sums(oracle.HEX3, 2.5, 4, shift=(1 / 3, 1 / 3, 0.5))
    want = _brute_shells(oracle.HEX3, 2.5, 4, shift=(1 / 3, 1 / 3, 0.5))
    assert np.allclose(got, want, rtol=1e-13, atol=0)


def test_numerator_is_applied():
    Q = np.eye(3)
    ones = oracle.shell_sums(Q, 2.0, 3)
    with_num = oracle.shell_sums(Q, 2.0, 3, numerator=lambda x, J, K: 2.0 + 0 * J)
    assert np.allclose(with_num, 2 * ones)


@pytest.mark.parametrize("A,s", [(1.0, 2.0), (0.5, 2.5), (0.8, 3.0), (1.0, 1.75)])
def test_extrapolated_t1_matches_accelerated(A, s):
    o = oracle.direct_sum_T1(A, s)
    v = t1_bessel_v1(A, s)
    assert o.formula_used is FormulaUsed.ORACLE
    assert abs(o.value - v.value) <= o.abs_error_estimate + v.abs_error_estimate
    # the raw partial sum is far from the limit, so the fit is doing real work
    raw = float(np.sum(oracle.shell_sums(np.diag([A, 1.0, 1.0]), s, 120)))
    assert abs(raw - v.value) > 100 * o.abs_error_estimate


@pytest.mark.parametrize("A,s", [(1.0, 2.0), (0.4, 3.0), (0.6, 1.8)])
def test_averaged_t2_matches_accelerated(A, s):
    o = oracle.direct_sum_T2(A, s)
    v = t2_bessel_v1(A, s)
    assert abs(o.value - v.value) <= o.abs_error_estimate + v.abs_error_estimate


def test_error_bar_shrinks_with_radius():
    small = oracle.direct_sum_L(0.6, 2.5, SumConfig(oracle_shell_radius=40))
    big = oracle.direct_sum_L(0.6, 2.5, SumConfig(oracle_shell_radius=120))
    ref = lattice_sum_L(0.6, 2.5).value
    assert big.abs_error_estimate < small.abs_error_estimate
    assert abs(small.value - ref) <= small.abs_error_estimate
    assert abs(big.value - ref) <= big.abs_error_estimate


def test_large_s_uses_plain_partial_sum():
    o = oracle.direct_sum_L(1.0, 20.0)
    assert abs(o.value - 12) < 1e-5
    assert o.abs_error_estimate < 1e-12


def test_hcp_parts():
    a, b = oracle.direct_sum_hcp_parts(25.0)
    assert abs(a.value - 6) < 1e-6
    assert abs(b.value - 6) < 1e-6
    both = oracle.direct_sum_hcp(25.0)
    assert both.value == a.value + b.value


def test_oracle_guards():
    for s in (1.5, 1.55, 0.5, -2.0):
        with pytest.raises(NonConvergent):
            oracle.direct_sum_T1(1.0, s)
    with pytest.raises(DomainError):
        oracle.direct_sum_T1(-1.0, 3.0)
    with pytest.raises(DomainError):
        oracle.direct_sum_T1(1.0, float("inf"))
    with pytest.raises(RegionError):
        oracle.direct_sum_L(0.2, 3.0)
