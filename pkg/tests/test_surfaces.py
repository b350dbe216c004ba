import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qms.exactmath import ContractViolation, InputError
from qms.surfaces import (
    ConstantSolution,
    DegenerateConstant,
    HyperbolaParams,
    HypothesisViolated,
    NonPositive,
    catenoid_asymptotic,
    catenoid_build,
    catenoid_classify,
    catenoid_closed,
    enneper_sigma,
    enneper_sigma_closed,
    helicoid_profile,
    helicoid_residual,
    hyperbola_r,
    hyperbola_residual,
)


# --- catenoid recursion ----------------------------------------------

def test_catenoid_build_small_window_values():
    sol = catenoid_build(1.0, 1.0, 2.0, 0.0, -2, 2)
    # forward: r2 = 2 r1 - r0 + 2 c^2/r1^2 = 4 - 1 + 1/2
    assert sol.r[2] == pytest.approx(3.5)
    # backward from (r0, r1): r_{-1} = 2 r0 - r1 + 2 c^2/r0^2 = 2
    assert sol.r[-1] == pytest.approx(2.0)
    # z1 - z0 = c / r1
    assert sol.z[1] - sol.z[0] == pytest.approx(0.5)


def test_catenoid_build_exact_fractions():
    sol = catenoid_build(F(1), F(1), F(2), F(0), -4, 4, exact=True)
    assert sol.r[2] == F(7, 2)
    for n in range(-3, 4):
        shape, flux = sol.residual(n)
        assert shape == 0 and flux == 0


def test_catenoid_residual_zero_in_double():
    sol = catenoid_build(0.7, 1.1, 1.8, 0.3, -40, 40)
    worst = max(
        max(abs(sol.residual(n)[0]), abs(sol.residual(n)[1]))
        for n in range(-39, 40)
    )
    assert worst < 1e-12


def test_catenoid_rejects_bad_input():
    with pytest.raises(DegenerateConstant):
        catenoid_build(0.0, 1.0, 2.0, 0.0, -2, 2)
    with pytest.raises(HypothesisViolated):
        catenoid_build(1.0, 1.0, 0.5, 0.0, -2, 2)  # r1 < r0
    with pytest.raises(HypothesisViolated):
        catenoid_build(1.0, 1.0, 3.5, 0.0, -2, 2)  # r1 > r0 + 2c^2/r0^2
    with pytest.raises(InputError):
        catenoid_build(1.0, 1.0, 2.0, 0.0, 5, 2)


def test_catenoid_classify_reports_minimum_and_delta():
    sol = catenoid_build(1.0, 1.0, 2.0, 0.0, -8, 8)
    cls = catenoid_classify(sol)
    assert cls.n0 == 0
    # r1 - r0 = 1 = (1 - delta) c^2 / r0^2 exactly
    assert cls.delta == pytest.approx(0.0, abs=1e-12)
    assert cls.c == 1.0


def test_catenoid_classify_constant_solution():
    # r constant requires r1 = r0 and then r2 = r0 + 2c^2/r0^2 > r0,
    # so force the constant case via the flat hypothesis edge
    sol = catenoid_build(1.0, 2.0, 2.0, 0.0, 0, 1)
    with pytest.raises(ConstantSolution):
        catenoid_classify(sol)


@settings(max_examples=200, deadline=None)
@given(
    st.floats(min_value=0.1, max_value=4.0),
    st.floats(min_value=0.2, max_value=5.0),
    st.floats(min_value=0.0, max_value=1.0),
)
def test_catenoid_monotone_wings_property(c, r0, gap_frac):
    r1 = r0 + gap_frac * 2 * c * c / (r0 * r0)
    sol = catenoid_build(c, r0, r1, 0.0, -30, 30)
    rs = [sol.r[n] for n in range(-30, 31)]
    n0 = rs.index(min(rs)) - 30
    for n in range(n0, 30):
        assert sol.r[n + 1] >= sol.r[n] - 1e-12
    for n in range(-30, n0):
        assert sol.r[n] >= sol.r[n + 1] - 1e-12
    assert min(rs) > 0


# --- catenoid closed form --------------------------------------------

def test_catenoid_closed_matches_frozen_point():
    r, z = catenoid_closed(1.0, 0.1, -1)
    assert r == pytest.approx(1.009966908818, abs=1e-9)
    assert z == pytest.approx(0.099669306343, abs=1e-9)


def test_catenoid_closed_symmetry_and_monotonicity():
    a, h = 1.3, 0.05
    for n in (1, 5, 40):
        rp, zp = catenoid_closed(a, h, n)
        rm, zm = catenoid_closed(a, h, -n)
        assert rp == pytest.approx(rm, rel=1e-12)
        assert zp == pytest.approx(-zm, rel=1e-12)
    r0, _ = catenoid_closed(a, h, 0)
    assert r0 == pytest.approx(a * a)


def test_catenoid_asymptotic_gap_saturates():
    # r_n - (2 h n - (a^2/2) ln n) -> 1/2 - (3/2) ln 2
    limit = 0.5 - 1.5 * math.log(2.0)
    r, _ = catenoid_closed(1.0, 1.0, 10 ** 4)
    gap = r - catenoid_asymptotic(1.0, 1.0, 10 ** 4)
    assert gap == pytest.approx(limit, abs=2e-4)


def test_catenoid_asymptotic_rejects_n0():
    with pytest.raises(InputError):
        catenoid_asymptotic(1.0, 1.0, 0)


# --- Enneper ---------------------------------------------------------

def test_enneper_sigma_frozen_prefix():
    seq = enneper_sigma(0.1, 4)
    expect = [0.0, 0.169905807184, 0.300943836,
              0.409813922, 0.504036601]
    for got, want in zip(seq.sigma, expect):
        assert got == pytest.approx(want, abs=1e-8)


def test_enneper_step_equation_holds():
    h = 0.3
    seq = enneper_sigma(h, 50)
    s = seq.sigma
    for n in range(50):
        lhs = (s[n + 1] - s[n]) * (2 + s[n] + s[n + 1]) ** 2
        assert lhs == pytest.approx(8 * h, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=1e-3, max_value=0.8))
def test_enneper_sigma_increasing_property(h):
    seq = enneper_sigma(h, 60)
    diffs = [b - a for a, b in zip(seq.sigma, seq.sigma[1:])]
    assert all(d > 0 for d in diffs)
    # the small-h slope of the first step is 2h
    if h <= 0.05:
        assert abs(seq.sigma[1] / (2 * h) - 1) <= 3 * h


def test_enneper_closed_form_value():
    got = enneper_sigma_closed(0.1, 0.0, 1)
    assert got == pytest.approx(0.159042, abs=1e-5)


# --- helicoid --------------------------------------------------------

def test_helicoid_profile_frozen_point():
    assert helicoid_profile(1.0) == pytest.approx(0.892667771035,
                                                  abs=1e-9)
    assert helicoid_profile(0.0) == 0.0
    assert helicoid_profile(-1.0) == pytest.approx(-0.892667771035,
                                                   abs=1e-9)


def test_helicoid_residual_fourth_order():
    res = [abs(helicoid_residual(1.0, h)) for h in (0.2, 0.1, 0.05)]
    assert res[0] == pytest.approx(1.92e-4, rel=1e-2)
    assert res[0] / res[1] == pytest.approx(16.0, rel=1e-2)
    assert res[1] / res[2] == pytest.approx(16.0, rel=1e-2)


# --- hyperbola -------------------------------------------------------

def test_hyperbola_frozen_values():
    p = HyperbolaParams(eps=1.0, delta=0.0, c_abs=1.0)
    assert hyperbola_r(p, 0) == pytest.approx(1.0)
    assert hyperbola_r(p, 1) == pytest.approx((math.sqrt(5) - 1) / 2)


def test_hyperbola_negative_branch_rejected():
    p = HyperbolaParams(eps=1.0, delta=0.0, c_abs=1.0, sign=-1)
    with pytest.raises(NonPositive):
        hyperbola_r(p, 0)


def test_hyperbola_residual_tiny_at_large_index():
    # naive +/- sqrt evaluation loses ~7 digits out here; the
    # rationalized form must stay at rounding level
    p = HyperbolaParams(eps=0.05, delta=-1.0, c_abs=1.0)
    worst = max(abs(hyperbola_residual(p, n))
                for n in range(-500, 501))
    assert worst < 1e-12


@settings(max_examples=80, deadline=None)
@given(
    st.floats(min_value=0.01, max_value=2.0),
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=0.2, max_value=3.0),
    st.integers(min_value=-300, max_value=300),
)
def test_hyperbola_residual_property(eps, delta, c, n):
    p = HyperbolaParams(eps=eps, delta=delta, c_abs=c)
    assert hyperbola_r(p, n) > 0
    assert abs(hyperbola_residual(p, n)) < 1e-11


def test_hyperbola_params_validation():
    with pytest.raises(InputError):
        HyperbolaParams(eps=-1.0, delta=0.0, c_abs=1.0)
    with pytest.raises(InputError):
        HyperbolaParams(eps=1.0, delta=0.0, c_abs=0.0)
    with pytest.raises(InputError):
        HyperbolaParams(eps=1.0, delta=0.0, c_abs=1.0, sign=2)
