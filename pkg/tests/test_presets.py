import math

import numpy as np
import pytest

from hhverify.bounds import case_bound_from_values
from hhverify.errors import PresetMismatchError
from hhverify.functions import make_power
from hhverify.identity import BoundParams
from hhverify.presets import PRESETS, VERBATIM_DISPLAYS, check_specialization, eval_preset

SYNTH = [(0.7, 2.3, 1.1), (0.0, 2.0, 1.0), (3.0, 0.5, 1.75), (1.0, 1.0, 1.0), (0.2, 5.0, 2.4)]
LAMS = [0.0, 0.2, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.8, 1.0]
SVALS = [-0.9, -0.5, 0.3, 0.7, 1.0]


def _grid(spec):
    out = []
    ss = [spec.pin_s] if spec.pin_s is not None else [
        s for s in SVALS if spec.s_range[0] <= s <= spec.s_range[1]
    ]
    qq = [1.0] if spec.pin_q == "1" else ([1.3, 2.0, 5.0] if spec.pin_q == ">1" else [1.0, 2.0])
    ll = [spec.pin_lam] if spec.pin_lam is not None else LAMS
    for s in ss:
        for q in qq:
            for lam in ll:
                if spec.pin_mu == "lam":
                    mus = [lam]
                elif spec.pin_mu is not None:
                    mus = [spec.pin_mu]
                else:
                    mus = [0.0, 0.4, 1.0]
                for mu in mus:
                    out.append((lam, mu, s, q))
    return out


@pytest.mark.parametrize("pid", sorted(PRESETS), ids=str)
def test_preset_against_parent(pid):
    spec = PRESETS[pid]
    for a, b in [(0.0, 1.0), (1.0, 3.5)]:
        for lam, mu, s, q in _grid(spec):
            for qa, qb, qm in SYNTH:
                shown = spec.display(a, b, lam, mu, s, q, qa, qb, qm)
                derived, _ = case_bound_from_values(spec.parent, a, b, lam, mu, s, q, qa, qb, qm)
                if spec.kind == "specialization":
                    assert abs(shown - derived) <= 1e-12 * (1.0 + abs(derived)), (lam, mu, s, q)
                else:
                    assert shown >= derived - 1e-12 * (1.0 + abs(derived)), (lam, mu, s, q)


def test_preset_spot_values():
    x2 = make_power(2, 0, 1)
    r = eval_preset("C33_s1_q1_lambda_mu", x2, BoundParams(0, 1, 1, 1, 1, 1))
    assert math.isclose(r.bound, 0.25, rel_tol=1e-13)
    r = eval_preset("C35_half", x2, BoundParams(0, 1, 0.5, 0.5, 1, 1))
    assert math.isclose(r.bound, 0.125, rel_tol=1e-13)
    f = make_power(2, 1, 2)
    r = eval_preset("C31_s_minus1_q1", f, BoundParams(1, 2, 0, 0, -1, 1))
    assert math.isclose(r.bound, math.log(2.0) * (2.0 + 4.0), rel_tol=1e-13)


def test_preset_pin_mismatch():
    x2 = make_power(2, 0, 1)
    with pytest.raises(PresetMismatchError):
        eval_preset("C35_half", x2, BoundParams(0, 1, 0.4, 0.4, 1, 1))
    with pytest.raises(PresetMismatchError):
        eval_preset("C33_s1_q1", x2, BoundParams(0, 1, 1, 1, 0.5, 1))
    with pytest.raises(PresetMismatchError):
        eval_preset("C33x_lambda_mu_qgt1", x2, BoundParams(0, 1, 1, 1, 1, 1))
    with pytest.raises(PresetMismatchError):
        eval_preset("E112", x2, BoundParams(0, 1, 1.0 / 3.0, 1.0 / 3.0, -0.5, 1))


def test_check_specialization_examples():
    grid = [BoundParams(0, 1, 1, 1, 1, 1), BoundParams(0.5, 2.5, 1, 1, 1, 1)]
    assert check_specialization("E15", grid) <= 1e-12
    grid = [
        BoundParams(0, 1, 1.0 / 3.0, 1.0 / 3.0, s, 1)
        for s in np.linspace(0.05, 1.0, 20)
    ]
    assert check_specialization("E112", grid) <= 1e-12


def test_check_specialization_with_function_family():
    family = [make_power(2, 0.5, 3.0), make_power(1.5, 0.5, 3.0)]
    grid = [BoundParams(0.5, 3.0, lam, lam, 1.0, 1.0) for lam in (0.0, 0.5, 1.0)]
    assert check_specialization("C32_q1", grid, family) <= 1e-12


def test_e19_equals_trapezoid_preset():
    e19 = PRESETS["E19"].display
    trap = PRESETS["C32_trapezoid"].display
    for s in np.linspace(0.05, 1.0, 20):
        for q in (1.0, 1.7, 4.0):
            for qa, qb, qm in SYNTH:
                v1 = e19(0, 1, 1.0, 1.0, float(s), q, qa, qb, qm)
                v2 = trap(0, 1, 1.0, 1.0, float(s), q, qa, qb, qm)
                assert math.isclose(v1, v2, rel_tol=1e-12, abs_tol=1e-13)


def test_c35_displays_pin_to_lambda_values():
    # The three numeric endpoint-weight displays are the general lambda=mu
    # family at lambda = 1/2, 2/3, 1/3 and s = 1.
    general = PRESETS["C32_lambda_eq_mu"].display
    for pid, lam in [("C35_half", 0.5), ("C35_third", 2.0 / 3.0), ("C35_simpson", 1.0 / 3.0)]:
        display = PRESETS[pid].display
        for q in (1.0, 2.0, 3.0):
            for qa, qb, qm in SYNTH:
                v1 = display(0, 1, lam, lam, 1.0, q, qa, qb, qm)
                v2 = general(0, 1, lam, lam, 1.0, q, qa, qb, qm)
                assert math.isclose(v1, v2, rel_tol=1e-12, abs_tol=1e-13)


def test_verbatim_variants_deviate():
    for pid, display in VERBATIM_DISPLAYS.items():
        spec = PRESETS[pid]
        s = spec.pin_s if spec.pin_s is not None else 0.5
        q = 1.0 if spec.pin_q == "1" else 2.0
        lam = 0.3
        mu = lam if spec.pin_mu == "lam" else 0.8
        worst = 0.0
        for qa, qb, qm in SYNTH:
            shown = display(0, 1, lam, mu, s, q, qa, qb, qm)
            shipped = spec.display(0, 1, lam, mu, s, q, qa, qb, qm)
            worst = max(worst, abs(shown - shipped))
        assert worst > 1e-6, pid


def test_preset_result_carries_preset_id():
    x2 = make_power(2, 0, 1)
    r = eval_preset("E15", x2, BoundParams(0, 1, 1, 1, 1, 1))
    assert r.preset == "E15" and r.case == "T31_general"
    assert math.isclose(r.bound, 0.25, rel_tol=1e-13)
    assert math.isclose(r.lhs, 1.0 / 6.0, rel_tol=1e-12)
