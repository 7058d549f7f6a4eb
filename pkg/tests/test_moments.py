import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhverify.errors import (
    HolderExponentError,
    MomentParameterError,
    NonIntegrableSingularityError,
)
from hhverify.moments import (
    MOMENT_CASES,
    MomentSpec,
    holder_weight_integral,
    kernel_mass,
    moment_case,
    moment_general,
    moment_harmonic,
    moment_oracle,
)
from hhverify.quadrature import integrate

TWO_LN2_MINUS_1 = 2.0 * math.log(2.0) - 1.0


def test_general_spot_values():
    assert math.isclose(moment_general(MomentSpec(1, 1, 0, 1)), 1.0 / 6.0, rel_tol=1e-14)
    assert math.isclose(moment_general(MomentSpec(0, 1, 0, 0)), 0.5, rel_tol=1e-14)
    assert math.isclose(moment_general(MomentSpec(0.5, 1, 1, 1)), 0.375, rel_tol=1e-14)


def test_case_spot_values():
    assert math.isclose(moment_case((1, 0), 1.0, 1.0), 1.0 / 6.0, rel_tol=1e-14)
    assert math.isclose(moment_case((-1, 1), 0.0, 1.0), 1.0 / 6.0, rel_tol=1e-14)
    assert math.isclose(moment_case((1, 1), 0.5, 1.0), 0.375, rel_tol=1e-14)


def test_harmonic_spot_values():
    assert math.isclose(moment_harmonic(1, 1, 1), TWO_LN2_MINUS_1, rel_tol=1e-14)
    assert math.isclose(moment_harmonic(0, 1, 0), 1.0, rel_tol=1e-14)
    assert math.isclose(moment_harmonic(0, -1, 2), TWO_LN2_MINUS_1, rel_tol=1e-14)


def test_holder_spot_values():
    assert math.isclose(holder_weight_integral(0.0, 2.0), 1.0 / 3.0, rel_tol=1e-14)
    assert math.isclose(holder_weight_integral(0.5, 2.0), 1.0 / 12.0, rel_tol=1e-13)
    assert math.isclose(holder_weight_integral(1.0, 2.0), 1.0 / 3.0, rel_tol=1e-14)


def test_holder_extreme_exponent_underflows_cleanly():
    q = 1.0 + 1e-8
    val = holder_weight_integral(0.5, q)
    assert 0.0 <= val < 1e-9


def test_oracle_equivalence_seeded():
    rng = np.random.default_rng(7)
    for _ in range(200):
        xi = rng.uniform()
        s = rng.uniform(-0.9, 1.0)
        om = rng.uniform(0.25, 2.0) * (1.0 if rng.uniform() < 0.5 else -1.0)
        if rng.uniform() < 0.15:
            eta = 0.0 if om > 0 else -om
        else:
            eta = rng.uniform(max(0.0, -om), max(0.0, -om) + 2.0)
        closed = moment_general(MomentSpec(xi, om, eta, s))
        orc = moment_oracle(xi, om, eta, s)
        assert abs(closed - orc) <= 1e-9 * (1.0 + abs(orc))


def test_transcription_equivalence_grids():
    for case in MOMENT_CASES:
        for xi in np.linspace(0.0, 1.0, 50):
            for s in np.linspace(-0.9, 1.0, 50):
                shown = moment_case(case, float(xi), float(s))
                general = moment_general(MomentSpec(float(xi), case[0], case[1], float(s)))
                assert abs(shown - general) <= 1e-12 * (1.0 + abs(general))


def test_kernel_mass_is_unit_weight_moment():
    for xi in np.linspace(0.0, 1.0, 21):
        assert math.isclose(moment_case((1, 0), float(xi), 0.0), kernel_mass(float(xi)), rel_tol=1e-13)


def test_s_zero_collapses_to_kernel_mass_for_any_weight():
    # (ωt + η)^0 = 1, so the general closed form must cancel ω and η exactly.
    for om, eta in [(1.0, 0.0), (2.0, 0.5), (-1.0, 1.0), (-0.7, 2.3), (0.3, 0.0)]:
        for xi in np.linspace(0.0, 1.0, 11):
            value = moment_general(MomentSpec(float(xi), om, eta, 0.0))
            assert math.isclose(value, kernel_mass(float(xi)), rel_tol=1e-12)


@pytest.mark.parametrize("q", [1.5, 2.0, 3.0, 10.0])
@pytest.mark.parametrize("xi", [0.0, 0.25, 0.5, 1.0])
def test_holder_against_oracle(q, xi):
    r = q / (q - 1.0)
    res = integrate(lambda t: abs(xi - t) ** r, 0.0, 1.0, breakpoints=[xi])
    assert abs(holder_weight_integral(xi, q) - res.value) <= 1e-9 * (1.0 + abs(res.value))


def test_verbatim_case_deviates():
    corrected = moment_case((-1, 2), 0.3, 0.5)
    verbatim = moment_case((-1, 2), 0.3, 0.5, verbatim=True)
    assert abs(verbatim - corrected) > 1e-3
    # the flag changes nothing on the other three cases
    for case in MOMENT_CASES[:3]:
        assert moment_case(case, 0.3, 0.5, verbatim=True) == moment_case(case, 0.3, 0.5)


def test_parameter_errors():
    with pytest.raises(MomentParameterError):
        MomentSpec(1.5, 1, 0, 1)
    with pytest.raises(MomentParameterError):
        MomentSpec(0.5, 0, 0, 1)
    with pytest.raises(MomentParameterError):
        MomentSpec(0.5, 1, -0.5, 1)
    with pytest.raises(MomentParameterError):
        MomentSpec(0.5, -2, 1, 1)  # omega + eta < 0
    with pytest.raises(MomentParameterError):
        moment_general(MomentSpec(0.5, 1, 1, -1.0))
    with pytest.raises(HolderExponentError):
        holder_weight_integral(0.5, 1.0)


def test_harmonic_divergence_detected():
    with pytest.raises(NonIntegrableSingularityError):
        moment_harmonic(0.5, 1, 0)  # weight vanishes at t=0, kernel zero at 0.5
    with pytest.raises(NonIntegrableSingularityError):
        moment_harmonic(0.3, -1, 1)  # weight vanishes at t=1


@settings(max_examples=200, deadline=None)
@given(
    xi=st.floats(0.0, 1.0),
    s=st.floats(-0.9, 1.0),
    om=st.floats(0.25, 2.0),
    eta=st.floats(0.0, 2.0),
)
def test_moment_nonnegative_and_bounded(xi, s, om, eta):
    value = moment_general(MomentSpec(xi, om, eta, s))
    assert value >= 0.0
    # |ξ-t| <= 1, so the moment is at most the full weight integral
    full = ((om + eta) ** (s + 1.0) - eta ** (s + 1.0)) / (om * (s + 1.0))
    assert value <= full * (1.0 + 1e-12) + 1e-12
