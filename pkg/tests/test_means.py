import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhverify.errors import FunctionDomainError, WrongBranchError
from hhverify.functions import from_id
from hhverify.identity import BoundParams
from hhverify.means import (
    MEAN_THEOREMS,
    MeanParams,
    arithmetic_mean,
    eval_mean_bound,
    generalized_log_mean,
    mean_bound_from_values,
    mean_lhs,
)
from hhverify.presets import eval_preset


def test_arithmetic_mean():
    assert arithmetic_mean(2, 4) == 3.0
    assert arithmetic_mean(1.3, 1.3) == 1.3
    assert arithmetic_mean(1, 9) == 5.0


def test_log_mean_branches():
    assert math.isclose(generalized_log_mean(2, 4, 1.0), 3.0, rel_tol=1e-14)
    assert math.isclose(generalized_log_mean(1, math.e, -1.0), math.e - 1.0, rel_tol=1e-14)
    assert math.isclose(
        generalized_log_mean(1, math.e, 0.0), math.exp(1.0 / (math.e - 1.0)), rel_tol=1e-14
    )
    assert generalized_log_mean(2.5, 2.5, 0.7) == 2.5
    with pytest.raises(FunctionDomainError):
        generalized_log_mean(0.0, 1.0, 1.0)


def test_log_mean_branch_continuity():
    for a, b in [(0.5, 1.5), (1.0, 10.0), (0.01, 0.3), (3.0, 3.2)]:
        l0 = generalized_log_mean(a, b, 0.0)
        lm1 = generalized_log_mean(a, b, -1.0)
        assert abs(generalized_log_mean(a, b, 1e-6) - l0) <= 1e-4 * l0
        assert abs(generalized_log_mean(a, b, -1e-6) - l0) <= 1e-4 * l0
        assert abs(generalized_log_mean(a, b, -1.0 + 1e-6) - lm1) <= 1e-4 * lm1
        assert abs(generalized_log_mean(a, b, -1.0 - 1e-6) - lm1) <= 1e-4 * lm1


@settings(max_examples=150, deadline=None)
@given(
    a=st.floats(0.01, 50.0),
    b=st.floats(0.01, 50.0),
    s=st.floats(-2.0, 2.0),
)
def test_log_mean_ordering_and_symmetry(a, b, s):
    value = generalized_log_mean(a, b, s)
    assert min(a, b) * (1.0 - 1e-12) <= value <= max(a, b) * (1.0 + 1e-12)
    swapped = generalized_log_mean(b, a, s)
    assert math.isclose(value, swapped, rel_tol=1e-12)


def test_mean_lhs_examples():
    assert mean_lhs(MeanParams(1.3, 2.9, 1.0, 1, 0.37)) == pytest.approx(0.0, abs=1e-14)
    assert math.isclose(mean_lhs(MeanParams(1, 2, 2.0, 1, 1.0)), 1.0 / 6.0, rel_tol=1e-12)
    assert mean_lhs(MeanParams(1.7, 1.7, 1.4, 1, 0.6)) == pytest.approx(0.0, abs=1e-14)


def test_theorem_spot_values():
    r = eval_mean_bound("T43_q1", MeanParams(1, 2, 2.0, 1.0, 1.0))
    assert math.isclose(r.lhs, 1.0 / 6.0, rel_tol=1e-12)
    assert math.isclose(r.bound, 0.5, rel_tol=1e-13)
    r = eval_mean_bound("T41", MeanParams(1, 2, 2.0, 1.0, 1.0))
    assert math.isclose(r.bound, 0.75, rel_tol=1e-13)


def test_degenerate_s1_lhs_below_every_bound():
    for theorem in MEAN_THEOREMS:
        q = 2.0 if "qgt1" in theorem else 1.0
        r = eval_mean_bound(theorem, MeanParams(0.7, 2.4, 1.0, q, 0.35))
        assert r.lhs == pytest.approx(0.0, abs=1e-13)
        assert r.bound >= 0.0


def test_t41_matches_endpoint_pair_preset_on_power_functions():
    # The endpoint-pair mean bound is the lambda=mu catalog display applied
    # to f = x^s with convexity order s-1; the two code paths must agree.
    for s in (0.5, 1.0, 1.5, 2.0):
        for q in (1.0, 2.0):
            if not -1.0 < (s - 1.0) * q <= 1.0:
                continue
            for a, b in [(0.5, 1.0), (1.0, 2.0), (0.25, 3.0)]:
                for lam in (0.0, 0.3, 0.7, 1.0):
                    bound, _ = mean_bound_from_values("T41", a, b, s, q, lam)
                    f = from_id(f"pow:{s}", a, b)
                    p = BoundParams(a, b, lam, lam, s - 1.0, q)
                    preset = eval_preset("C32_lambda_eq_mu", f, p)
                    assert abs(bound - preset.bound) <= 1e-12 * (1.0 + abs(preset.bound))


def test_validity_sound_theorems_mini_sweep():
    rng = np.random.default_rng(77)
    for _ in range(120):
        s = float(rng.uniform(0.05, 2.0))
        q = float(rng.choice([1.0, 1.5, 3.0]))
        if not -1.0 < (s - 1.0) * q <= 1.0:
            q = 1.0
        a = float(rng.uniform(0.01, 2.0))
        b = a + float(rng.uniform(0.05, 3.0))
        lam = float(rng.uniform())
        mp = MeanParams(a, b, s, q, lam)
        lhs = mean_lhs(mp)
        theorems = ["T41", "T42"] + (["T43_qgt1", "T44_qgt1"] if q > 1 else [])
        for theorem in theorems:
            bound, _ = mean_bound_from_values(theorem, a, b, s, q, lam)
            assert bound - lhs >= -1e-10 * (1.0 + abs(bound)), (theorem, s, q, a, b, lam)


def test_q1_product_displays_admit_certified_violation():
    # Documented defect of the printed q = 1 displays: at s = 2 with a << b
    # and lambda near 0.85 the deviation exceeds both bounds.
    mp = MeanParams(0.05, 4.0, 2.0, 1.0, 0.85)
    lhs = mean_lhs(mp)
    for theorem in ("T43_q1", "T44_q1"):
        bound, _ = mean_bound_from_values(theorem, mp.a, mp.b, mp.s, mp.q, mp.lam)
        assert lhs > bound


def test_branch_and_constraint_errors():
    with pytest.raises(WrongBranchError):
        mean_bound_from_values("T43_qgt1", 1, 2, 1.0, 1.0, 0.5)
    with pytest.raises(WrongBranchError):
        mean_bound_from_values("T43_q1", 1, 2, 1.0, 2.0, 0.5)
    with pytest.raises(WrongBranchError):
        mean_bound_from_values("T41", 1, 2, 2.0, 3.0, 0.5)  # (s-1)q = 3
    with pytest.raises(WrongBranchError):
        mean_bound_from_values("T41", 1, 2, 2.5, 1.0, 0.5)  # s > 2
    with pytest.raises(FunctionDomainError):
        MeanParams(-1.0, 2.0, 1.0, 1.0, 0.5)
    with pytest.raises(WrongBranchError):
        MeanParams(1.0, 2.0, 1.0, 1.0, 1.5)


def test_mean_result_serialization():
    r = eval_mean_bound("T41", MeanParams(1, 2, 2.0, 1.0, 1.0))
    doc = r.to_json_dict()
    assert list(doc["params"]) == ["a", "b", "s", "q", "lambda"]
    assert doc["case"] == "T41"
