import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuboidal import hcp
from cuboidal.config import FormulaUsed
from cuboidal.errors import DomainError, PoleAtThreeHalves, PoleGuard, RemovableSingularity
from cuboidal.oracle import direct_sum_hcp, direct_sum_hcp_parts
from cuboidal.sums import lattice_sum_L


def test_s1_variants_and_oracle():
    assert abs(hcp.hcp_s1(2, variant=1).value - hcp.hcp_s1(2, variant=2).value) < 1e-10
    o, _ = direct_sum_hcp_parts(3)
    assert abs(hcp.hcp_s1(3).value - o.value) < 1e-8
    assert abs(hcp.hcp_s1(30).value - 6) < 1e-6


def test_s2_variants_and_oracle():
    assert abs(hcp.hcp_s2(2, variant=1).value - hcp.hcp_s2(2, variant=2).value) < 1e-10
    _, o = direct_sum_hcp_parts(3)
    assert abs(hcp.hcp_s2(3).value - o.value) < 1e-8
    # six shifted points at norm 1: three in-plane shifts times k = 0, -1
    assert abs(hcp.hcp_s2(40).value - 6) < 1e-6


def test_s2_is_real_valued():
    for s in (-2.5, 0.3, 1.2, 4.0):
        v = hcp.hcp_s2(s).value
        assert isinstance(v, float) and math.isfinite(v)


def test_hcp_examples():
    assert abs(hcp.hcp_sum(0.5).value + 3.2418586150757328647) < 1e-11
    assert abs(hcp.hcp_sum(1).value + 11.4326530014952856357) < 1e-10
    assert hcp.hcp_sum(0).value == -1.0


def test_hcp_special_values():
    for k in range(6):
        p = hcp.hcp_sum(-k)
        assert p.value == (-1.0 if k == 0 else 0.0)
        assert p.formula_used is FormulaUsed.SPECIAL_CASE


@pytest.mark.parametrize("s", [-2.5, 0.75, 2.0, 3.0])
def test_hcp_assemblies_agree(s):
    assert abs(hcp.hcp_formula(s, 1).value - hcp.hcp_formula(s, 2).value) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.floats(-7, 7).filter(lambda s: min(abs(s - 0.5), abs(s - 1), abs(s - 1.5)) > 0.02))
def test_hcp_assemblies_agree_everywhere(s):
    a = hcp.hcp_formula(s, 1).value
    b = hcp.hcp_formula(s, 2).value
    assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


@pytest.mark.parametrize("s", [2.0, 3.0, 4.0])
def test_hcp_inside_oracle_bar(s):
    o = direct_sum_hcp(s)
    v = hcp.hcp_sum(s)
    assert abs(o.value - v.value) <= o.abs_error_estimate + v.abs_error_estimate


def test_hcp_routing_and_guards():
    assert hcp.hcp_sum(1.05).formula_used is FormulaUsed.KMINUS_HALF
    assert hcp.hcp_sum(0.5).formula_used is FormulaUsed.KMINUS1
    assert hcp.hcp_sum(2.0).formula_used is FormulaUsed.KMINUS1
    assert hcp.hcp_sum(10.0).formula_used is FormulaUsed.ORACLE
    for s in (1.5, 1.5 + 1e-10):
        with pytest.raises(PoleAtThreeHalves):
            hcp.hcp_sum(s)
    for f in (hcp.hcp_s1, hcp.hcp_s2):
        with pytest.raises(RemovableSingularity):
            f(1.0, variant=1)
        with pytest.raises(PoleGuard):
            f(1.5, variant=2)
        with pytest.raises(DomainError):
            f(2.0, variant=3)
    with pytest.raises(PoleGuard):
        hcp.hcp_s1(0.5, variant=2)
    assert math.isfinite(hcp.hcp_s2(0.5, variant=2).value)
    assert math.isfinite(hcp.hcp_s2(1.0, variant=2).value)


def test_hcp_exceeds_fcc_above_pole():
    for s in (1.6, 2.0, 3.0, 6.0):
        assert hcp.hcp_sum(s).value > lattice_sum_L(1.0, s).value > 0


def test_hcp_minus_fcc_near_pole_tends_to_constant_gap():
    # L_HCP - L_FCC -> d0 - c0 = 0.000571... as s -> 3/2
    gap = 0.0005711911161686790
    for eps in (1e-3, -1e-3):
        d = hcp.hcp_sum(1.5 + eps).value - lattice_sum_L(1.0, 1.5 + eps).value
        assert abs(d - gap) < 1e-4
