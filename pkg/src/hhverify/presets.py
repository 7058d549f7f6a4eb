"""Catalog of corollary presets: pinned-parameter displays of the bound cases.

Each preset carries two evaluation paths: its printed display (transcription)
and its parent case at the pinned parameters (derivation).  For most entries
the two agree to roundoff; `kind="weakening"` marks displays that the source
derives through an extra power-sum collapse, so they sit above the parent
value by design and only validity, not equality, can be checked.

Displays shipped here are corrected where the printed version demonstrably
contradicts its own derivation (a sign slip, one wrong exponent, and the
q = 1 prefactor family); every corrected entry keeps the verbatim printing
in VERBATIM_DISPLAYS so the erratum scan can quantify the discrepancy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .bounds import (
    BoundCase,
    BoundResult,
    Q_BRANCH_EPS,
    case_bound_from_values,
    derivative_values,
    params_dict,
)
from .errors import PresetMismatchError
from .functions import ConvexityCertificate, FunctionSpec
from .identity import BoundParams, hh_lhs
from .moments import holder_weight_integral, kernel_mass
from .quadrature import DEFAULT_TOL

__all__ = [
    "PresetSpec",
    "PRESETS",
    "VERBATIM_DISPLAYS",
    "preset_bound_from_values",
    "eval_preset",
    "check_specialization",
]

LN2 = math.log(2.0)

# Display helpers ----------------------------------------------------------


def _s2(s: float) -> float:
    return (s + 1.0) * (s + 2.0)


def _p_outer(lam: float, s: float) -> float:
    """Coefficient 2(2-λ)^(s+2) + ((s+2)λ-2)2^(s+1) + (s+2)λ - s - 3."""
    return (
        2.0 * (2.0 - lam) ** (s + 2.0)
        + ((s + 2.0) * lam - 2.0) * 2.0 ** (s + 1.0)
        + (s + 2.0) * lam
        - s
        - 3.0
    )


def _p_inner(lam: float, s: float) -> float:
    """Coefficient 2λ^(s+2) - (s+2)λ + s + 1."""
    return 2.0 * lam ** (s + 2.0) - (s + 2.0) * lam + s + 1.0


def _c_near(lam: float, s: float) -> float:
    """Coefficient 2(1-λ)^(s+2) + (s+2)λ - 1 (midpoint-pair family)."""
    return 2.0 * (1.0 - lam) ** (s + 2.0) + (s + 2.0) * lam - 1.0


def _poly_outer_s1(lam: float) -> float:
    return 4.0 - 9.0 * lam + 12.0 * lam * lam - 2.0 * lam**3


def _poly_inner_s1(lam: float) -> float:
    return 2.0 - 3.0 * lam + 2.0 * lam**3


def _lampow(lam: float, q: float) -> float:
    """λ^r + (1-λ)^r with r = (2q-1)/(q-1), via the guarded closed form."""
    return holder_weight_integral(lam, q) * (2.0 * q - 1.0) / (q - 1.0)


def _rho(q: float) -> float:
    return 1.0 - 1.0 / q


# Transcription displays ----------------------------------------------------
# Signature: (a, b, lam, mu, s, q, qa, qb, qm) -> bound


def _d_c31_q1(a, b, lam, mu, s, q, qa, qb, qm):
    coef_a = (
        2.0 * (2.0 - lam) ** (s + 2.0)
        + 2.0 * mu ** (s + 2.0)
        + ((s + 2.0) * lam - 2.0) * 2.0 ** (s + 1.0)
        + (s + 2.0) * (lam - mu)
        - 2.0
    )
    coef_b = (
        2.0 * lam ** (s + 2.0)
        + 2.0 * (2.0 - mu) ** (s + 2.0)
        + ((s + 2.0) * mu - 2.0) * 2.0 ** (s + 1.0)
        + (s + 2.0) * (mu - lam)
        - 2.0
    )
    return (b - a) / (2.0 ** (s + 2.0) * _s2(s)) * (coef_a * qa + coef_b * qb)


def _d_c31_sm1_q1(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) * LN2 * (qa + qb)


def _d_c32_lambda_eq_mu(a, b, lam, mu, s, q, qa, qb, qm):
    pa, pb = _p_outer(lam, s), _p_inner(lam, s)
    m = kernel_mass(lam) ** _rho(q)
    return (
        (b - a)
        / 2.0 ** (s / q + 2.0)
        * (1.0 / _s2(s)) ** (1.0 / q)
        * m
        * ((pa * qa + pb * qb) ** (1.0 / q) + (pb * qa + pa * qb) ** (1.0 / q))
    )


def _d_c32_q1(a, b, lam, mu, s, q, qa, qb, qm):
    brace = (
        (2.0 - lam) ** (s + 2.0)
        + lam ** (s + 2.0)
        + ((s + 2.0) * lam - 2.0) * 2.0**s
        - 1.0
    )
    return (b - a) * brace * (qa + qb) / (_s2(s) * 2.0 ** (s + 1.0))


def _d_c32_trapezoid(a, b, lam, mu, s, q, qa, qb, qm):
    return (
        (b - a)
        / 4.0
        * ((4.0 + 2.0 ** (1.0 - s)) / _s2(s)) ** (1.0 / q)
        * (qa + qb) ** (1.0 / q)
    )


def _d_c33_s1(a, b, lam, mu, s, q, qa, qb, qm):
    p1l, p2l = _poly_outer_s1(lam), _poly_inner_s1(lam)
    p1m, p2m = _poly_outer_s1(mu), _poly_inner_s1(mu)
    r = _rho(q)
    return (
        (b - a)
        / 2.0 ** (1.0 / q + 2.0)
        * (1.0 / 6.0) ** (1.0 / q)
        * (
            kernel_mass(lam) ** r * (p1l * qa + p2l * qb) ** (1.0 / q)
            + kernel_mass(mu) ** r * (p2m * qa + p1m * qb) ** (1.0 / q)
        )
    )


def _d_c33_s1_q1(a, b, lam, mu, s, q, qa, qb, qm):
    coef_a = 6.0 - 9.0 * lam + 12.0 * lam**2 - 2.0 * lam**3 - 3.0 * mu + 2.0 * mu**3
    coef_b = 6.0 - 3.0 * lam + 2.0 * lam**3 - 9.0 * mu + 12.0 * mu**2 - 2.0 * mu**3
    return (b - a) / 48.0 * (coef_a * qa + coef_b * qb)


def _d_c33_s1_q1_verbatim(a, b, lam, mu, s, q, qa, qb, qm):
    # As printed: "+3λ" in the qb coefficient where the derivation gives -3λ.
    coef_a = 6.0 - 9.0 * lam + 12.0 * lam**2 - 2.0 * lam**3 - 3.0 * mu + 2.0 * mu**3
    coef_b = 6.0 + 3.0 * lam + 2.0 * lam**3 - 9.0 * mu + 12.0 * mu**2 - 2.0 * mu**3
    return (b - a) / 48.0 * (coef_a * qa + coef_b * qb)


def _d_c33_s1_lambda_mu(a, b, lam, mu, s, q, qa, qb, qm):
    p1, p2 = _poly_outer_s1(lam), _poly_inner_s1(lam)
    return (
        (b - a)
        / 4.0
        * (1.0 / 12.0) ** (1.0 / q)
        * kernel_mass(lam) ** _rho(q)
        * ((p1 * qa + p2 * qb) ** (1.0 / q) + (p2 * qa + p1 * qb) ** (1.0 / q))
    )


def _d_c33_s1_q1_lambda_mu(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) / 8.0 * (1.0 - 2.0 * lam + 2.0 * lam * lam) * (qa + qb)


def _d_c35(w_hi: float, w_lo: float, denom: float, scale_num: float, scale_den: float):
    def display(a, b, lam, mu, s, q, qa, qb, qm):
        return (
            scale_num
            * (b - a)
            / scale_den
            * (
                ((w_hi * qa + w_lo * qb) / denom) ** (1.0 / q)
                + ((w_lo * qa + w_hi * qb) / denom) ** (1.0 / q)
            )
        )

    return display


def _d_e15(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) * (qa + qb) / 8.0


def _d_e19(a, b, lam, mu, s, q, qa, qb, qm):
    return (
        (b - a)
        / 2.0
        * 0.5 ** (1.0 - 1.0 / q)
        * ((2.0 + 0.5**s) / _s2(s)) ** (1.0 / q)
        * (qa + qb) ** (1.0 / q)
    )


def _d_e112(a, b, lam, mu, s, q, qa, qb, qm):
    coef = (
        (s - 4.0) * 6.0 ** (s + 1.0)
        + 2.0 * 5.0 ** (s + 2.0)
        - 2.0 * 3.0 ** (s + 2.0)
        + 2.0
    ) / (6.0 ** (s + 2.0) * _s2(s))
    return coef * (b - a) * (qa + qb)


def _d_c32x_q1_tier1(a, b, lam, mu, s, q, qa, qb, qm):
    mid = (
        2.0 * lam ** (s + 2.0)
        + 2.0 * mu ** (s + 2.0)
        + (s + 2.0) * (1.0 - lam - mu)
        + s
    )
    return (
        (b - a)
        / (4.0 * _s2(s))
        * (_c_near(lam, s) * qa + mid * qm + _c_near(mu, s) * qb)
    )


def _c32x_tier2_coef(lam: float, mu: float, s: float) -> float:
    return (
        (1.0 - lam) ** (s + 2.0) * 2.0 ** (s + 1.0)
        + 2.0 * lam ** (s + 2.0)
        + 2.0 * mu ** (s + 2.0)
        + ((s + 2.0) * lam - 1.0) * 2.0**s
        + (s + 2.0) * (1.0 - lam - mu)
        + s
    )


def _d_c32x_q1_tier2(a, b, lam, mu, s, q, qa, qb, qm):
    return (
        (b - a)
        / (2.0 ** (s + 2.0) * _s2(s))
        * (_c32x_tier2_coef(lam, mu, s) * qa + _c32x_tier2_coef(mu, lam, s) * qb)
    )


def _d_c32x_lambda_mu_tier1(a, b, lam, mu, s, q, qa, qb, qm):
    ca, da = _c_near(lam, s), _p_inner(lam, s)
    return (
        (b - a)
        / 4.0
        * (1.0 / _s2(s)) ** (1.0 / q)
        * kernel_mass(lam) ** _rho(q)
        * ((ca * qa + da * qm) ** (1.0 / q) + (da * qm + ca * qb) ** (1.0 / q))
    )


def _c32x_lm_tier2_coef(lam: float, s: float, verbatim: bool = False) -> float:
    # Verbatim printing has 2λ^(s+1) once; symmetry and the mechanical
    # midpoint substitution both give 2λ^(s+2).
    power = s + 1.0 if verbatim else s + 2.0
    return (
        2.0 ** (s + 1.0) * (1.0 - lam) ** (s + 2.0)
        + 2.0 * lam**power
        + ((s + 2.0) * lam - 1.0) * 2.0**s
        - (s + 2.0) * lam
        + s
        + 1.0
    )


def _d_c32x_lambda_mu_tier2(a, b, lam, mu, s, q, qa, qb, qm):
    ea = _c32x_lm_tier2_coef(lam, s)
    da = _p_inner(lam, s)
    return (
        (b - a)
        / 2.0 ** (s / q + 2.0)
        * (1.0 / _s2(s)) ** (1.0 / q)
        * kernel_mass(lam) ** _rho(q)
        * ((ea * qa + da * qb) ** (1.0 / q) + (da * qa + ea * qb) ** (1.0 / q))
    )


def _d_c32x_lambda_mu_tier2_verbatim(a, b, lam, mu, s, q, qa, qb, qm):
    ea = _c32x_lm_tier2_coef(lam, s, verbatim=True)
    da = _p_inner(lam, s)
    return (
        (b - a)
        / 2.0 ** (s / q + 2.0)
        * (1.0 / _s2(s)) ** (1.0 / q)
        * kernel_mass(lam) ** _rho(q)
        * ((ea * qa + da * qb) ** (1.0 / q) + (da * qa + ea * qb) ** (1.0 / q))
    )


def _poly_c1_s1(lam: float) -> float:
    return 1.0 - 3.0 * lam + 6.0 * lam * lam - 2.0 * lam**3


def _poly_d1_s1(lam: float) -> float:
    return 2.0 * lam**3 - 3.0 * lam + 2.0


def _d_c32x_s1_tier1(a, b, lam, mu, s, q, qa, qb, qm):
    r = _rho(q)
    return (
        (b - a)
        / 4.0
        * (1.0 / 6.0) ** (1.0 / q)
        * (
            kernel_mass(lam) ** r
            * (_poly_c1_s1(lam) * qa + _poly_d1_s1(lam) * qm) ** (1.0 / q)
            + kernel_mass(mu) ** r
            * (_poly_d1_s1(mu) * qm + _poly_c1_s1(mu) * qb) ** (1.0 / q)
        )
    )


def _d_c32x_s1_tier1_verbatim(a, b, lam, mu, s, q, qa, qb, qm):
    # As printed, the λ-block midpoint coefficient reads 2λ³ - 3λ + 3.
    r = _rho(q)
    return (
        (b - a)
        / 4.0
        * (1.0 / 6.0) ** (1.0 / q)
        * (
            kernel_mass(lam) ** r
            * (_poly_c1_s1(lam) * qa + (_poly_d1_s1(lam) + 1.0) * qm) ** (1.0 / q)
            + kernel_mass(mu) ** r
            * (_poly_d1_s1(mu) * qm + _poly_c1_s1(mu) * qb) ** (1.0 / q)
        )
    )


def _d_c32x_s1_tier2(a, b, lam, mu, s, q, qa, qb, qm):
    r = _rho(q)
    return (
        (b - a)
        / 2.0 ** (1.0 / q + 2.0)
        * (1.0 / 6.0) ** (1.0 / q)
        * (
            kernel_mass(lam) ** r
            * (_poly_outer_s1(lam) * qa + _poly_d1_s1(lam) * qb) ** (1.0 / q)
            + kernel_mass(mu) ** r
            * (_poly_d1_s1(mu) * qa + _poly_outer_s1(mu) * qb) ** (1.0 / q)
        )
    )


def _d_c33x_lambda_mu_qgt1(a, b, lam, mu, s, q, qa, qb, qm):
    w = 2.0 ** (s + 1.0) - 1.0
    r = _rho(q)
    return (
        (b - a)
        / 2.0 ** (s / q + 2.0)
        * ((q - 1.0) / (2.0 * q - 1.0)) ** r
        * (1.0 / (s + 1.0)) ** (1.0 / q)
        * _lampow(lam, q) ** r
        * ((w * qa + qb) ** (1.0 / q) + (qa + w * qb) ** (1.0 / q))
    )


def _d_c33x_boundary_qgt1(a, b, lam, mu, s, q, qa, qb, qm):
    w = 2.0 ** (s + 1.0) - 1.0
    return (
        (b - a)
        / 2.0 ** (s / q + 2.0)
        * ((q - 1.0) / (2.0 * q - 1.0)) ** _rho(q)
        * (1.0 / (s + 1.0)) ** (1.0 / q)
        * ((w * qa + qb) ** (1.0 / q) + (qa + w * qb) ** (1.0 / q))
    )


def _d_c33x_s1_q1(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) / 8.0 * (
        kernel_mass(lam) * (3.0 * qa + qb) + kernel_mass(mu) * (qa + 3.0 * qb)
    )


def _d_c33x_s1_q1_verbatim(a, b, lam, mu, s, q, qa, qb, qm):
    # As printed: prefactor 1/16 and brackets swapped between the blocks.
    return (b - a) / 16.0 * (
        kernel_mass(lam) * (qa + 3.0 * qb) + kernel_mass(mu) * (3.0 * qa + qb)
    )


def _d_c33x_s1_qgt1(a, b, lam, mu, s, q, qa, qb, qm):
    r = _rho(q)
    return (
        (b - a)
        / 2.0 ** (2.0 / q + 2.0)
        * ((q - 1.0) / (2.0 * q - 1.0)) ** r
        * (
            _lampow(lam, q) ** r * (3.0 * qa + qb) ** (1.0 / q)
            + _lampow(mu, q) ** r * (qa + 3.0 * qb) ** (1.0 / q)
        )
    )


def _d_c33x_s1_q1_lambda_mu(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) / 4.0 * (1.0 - 2.0 * lam + 2.0 * lam * lam) * (qa + qb)


def _d_c33x_s1_qgt1_lambda_mu(a, b, lam, mu, s, q, qa, qb, qm):
    r = _rho(q)
    return (
        ((q - 1.0) / (2.0 * q - 1.0)) ** r
        * (b - a)
        / 2.0 ** (2.0 / q)
        * _lampow(lam, q) ** r
        * (qa + qb) ** (1.0 / q)
    )


def _d_c34x_q1_lambda_mu_tier1(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) / (4.0 * (s + 1.0)) * kernel_mass(lam) * (qa + 2.0 * qm + qb)


def _d_c34x_q1_lambda_mu_tier2(a, b, lam, mu, s, q, qa, qb, qm):
    return (
        (b - a)
        / (2.0 ** (s + 1.0) * (s + 1.0))
        * kernel_mass(lam)
        * (2.0 ** (s - 1.0) + 1.0)
        * (qa + qb)
    )


def _d_c34x_qgt1_lambda_mu_tier1(a, b, lam, mu, s, q, qa, qb, qm):
    r = _rho(q)
    return (
        (b - a)
        / 4.0
        * ((q - 1.0) / (2.0 * q - 1.0)) ** r
        * (1.0 / (s + 1.0)) ** (1.0 / q)
        * _lampow(lam, q) ** r
        * ((qa + qm) ** (1.0 / q) + (qm + qb) ** (1.0 / q))
    )


def _d_c34x_qgt1_lambda_mu_tier2(a, b, lam, mu, s, q, qa, qb, qm):
    w = 2.0**s + 1.0
    r = _rho(q)
    return (
        (b - a)
        / 2.0 ** (s / q + 2.0)
        * ((q - 1.0) / (2.0 * q - 1.0)) ** r
        * (1.0 / (s + 1.0)) ** (1.0 / q)
        * _lampow(lam, q) ** r
        * ((w * qa + qb) ** (1.0 / q) + (qa + w * qb) ** (1.0 / q))
    )


def _d_c34x_q1_s1_tier1(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) / 8.0 * (
        kernel_mass(lam) * (qa + qm) + kernel_mass(mu) * (qm + qb)
    )


def _d_c34x_q1_s1_tier2(a, b, lam, mu, s, q, qa, qb, qm):
    return (b - a) / 16.0 * (
        kernel_mass(lam) * (3.0 * qa + qb) + kernel_mass(mu) * (qa + 3.0 * qb)
    )


def _d_c34x_qgt1_s1_tier1(a, b, lam, mu, s, q, qa, qb, qm):
    r = _rho(q)
    return (
        (b - a)
        / 2.0 ** (1.0 / q + 2.0)
        * ((q - 1.0) / (2.0 * q - 1.0)) ** r
        * (
            _lampow(lam, q) ** r * (qm + qa) ** (1.0 / q)
            + _lampow(mu, q) ** r * (qm + qb) ** (1.0 / q)
        )
    )


def _d_c34x_qgt1_s1_tier2(a, b, lam, mu, s, q, qa, qb, qm):
    r = _rho(q)
    return (
        (b - a)
        / 2.0 ** (2.0 / q + 2.0)
        * ((q - 1.0) / (2.0 * q - 1.0)) ** r
        * (
            _lampow(lam, q) ** r * (3.0 * qa + qb) ** (1.0 / q)
            + _lampow(mu, q) ** r * (qa + 3.0 * qb) ** (1.0 / q)
        )
    )


# Catalog -------------------------------------------------------------------

Display = Callable[..., float]


@dataclass(frozen=True)
class PresetSpec:
    pid: str
    parent: BoundCase
    display: Display
    kind: str = "specialization"  # or "weakening"
    pin_lam: Optional[float] = None
    pin_mu: Optional[float | str] = None  # float, or "lam" for mu == lambda
    pin_s: Optional[float] = None
    pin_q: Optional[str] = None  # "1", ">1", or None
    s_range: tuple[float, float] = (-1.0 + 1e-6, 1.0)
    note: str = ""

    def validate(self, p: BoundParams) -> None:
        if self.pin_lam is not None and abs(p.lam - self.pin_lam) > 1e-12:
            raise PresetMismatchError(f"{self.pid} pins lambda = {self.pin_lam}")
        if self.pin_mu == "lam":
            if abs(p.mu - p.lam) > 1e-12:
                raise PresetMismatchError(f"{self.pid} pins mu = lambda")
        elif self.pin_mu is not None and abs(p.mu - self.pin_mu) > 1e-12:
            raise PresetMismatchError(f"{self.pid} pins mu = {self.pin_mu}")
        if self.pin_s is not None:
            if abs(p.s - self.pin_s) > 1e-12:
                raise PresetMismatchError(f"{self.pid} pins s = {self.pin_s}")
        elif not self.s_range[0] <= p.s <= self.s_range[1]:
            raise PresetMismatchError(
                f"{self.pid} needs s in [{self.s_range[0]:g}, {self.s_range[1]:g}]"
            )
        if self.pin_q == "1" and p.q >= 1.0 + Q_BRANCH_EPS:
            raise PresetMismatchError(f"{self.pid} pins q = 1")
        if self.pin_q == ">1" and p.q < 1.0 + Q_BRANCH_EPS:
            raise PresetMismatchError(f"{self.pid} needs q > 1")


_P = PresetSpec
_T31 = BoundCase.T31_general

PRESETS: dict[str, PresetSpec] = {
    p.pid: p
    for p in [
        _P("C31_q1", _T31, _d_c31_q1, pin_q="1"),
        _P(
            "C31_s_minus1_q1",
            BoundCase.T31_s_minus1,
            _d_c31_sm1_q1,
            pin_q="1",
            pin_s=-1.0,
            note="midpoint deviation vs log-2 endpoint bound",
        ),
        _P("C32_lambda_eq_mu", _T31, _d_c32_lambda_eq_mu, pin_mu="lam"),
        _P("C32_q1", _T31, _d_c32_q1, pin_mu="lam", pin_q="1"),
        _P(
            "C32_trapezoid",
            _T31,
            _d_c32_trapezoid,
            kind="weakening",
            pin_lam=1.0,
            pin_mu=1.0,
            note="collapsed endpoint display; equals the E19 bound",
        ),
        _P("C33_s1", _T31, _d_c33_s1, pin_s=1.0),
        _P(
            "C33_s1_q1",
            _T31,
            _d_c33_s1_q1,
            pin_s=1.0,
            pin_q="1",
            note="shipped with the -3λ sign the derivation gives",
        ),
        _P("C33_s1_lambda_mu", _T31, _d_c33_s1_lambda_mu, pin_s=1.0, pin_mu="lam"),
        _P("C33_s1_q1_lambda_mu", _T31, _d_c33_s1_q1_lambda_mu, pin_s=1.0, pin_q="1", pin_mu="lam"),
        _P("C35_half", _T31, _d_c35(3.0, 1.0, 4.0, 1.0, 16.0), pin_s=1.0, pin_lam=0.5, pin_mu=0.5),
        _P("C35_third", _T31, _d_c35(37.0, 8.0, 45.0, 5.0, 72.0), pin_s=1.0, pin_lam=2.0 / 3.0, pin_mu=2.0 / 3.0),
        _P("C35_simpson", _T31, _d_c35(61.0, 29.0, 90.0, 5.0, 72.0), pin_s=1.0, pin_lam=1.0 / 3.0, pin_mu=1.0 / 3.0),
        _P("E15", _T31, _d_e15, pin_s=1.0, pin_q="1", pin_lam=1.0, pin_mu=1.0,
           note="classical trapezoid deviation bound for convex |f'|"),
        _P("E19", _T31, _d_e19, kind="weakening", pin_lam=1.0, pin_mu=1.0, s_range=(1e-12, 1.0)),
        _P("E112", _T31, _d_e112, pin_lam=1.0 / 3.0, pin_mu=1.0 / 3.0, pin_q="1", s_range=(1e-12, 1.0),
           note="three-point quadrature deviation bound"),
        _P("C32x_q1_tier1", BoundCase.T32_tier1, _d_c32x_q1_tier1, pin_q="1"),
        _P("C32x_q1_tier2", BoundCase.T32_tier2, _d_c32x_q1_tier2, pin_q="1"),
        _P("C32x_lambda_mu_tier1", BoundCase.T32_tier1, _d_c32x_lambda_mu_tier1, pin_mu="lam"),
        _P("C32x_lambda_mu_tier2", BoundCase.T32_tier2, _d_c32x_lambda_mu_tier2, pin_mu="lam",
           note="shipped with 2λ^(s+2); the verbatim 2λ^(s+1) is scan-only"),
        _P("C32x_s1_tier1", BoundCase.T32_tier1, _d_c32x_s1_tier1, pin_s=1.0,
           note="shipped with midpoint coefficient 2λ³-3λ+2"),
        _P("C32x_s1_tier2", BoundCase.T32_tier2, _d_c32x_s1_tier2, pin_s=1.0),
        _P("C33x_lambda_mu_qgt1", BoundCase.T33_qgt1, _d_c33x_lambda_mu_qgt1, pin_mu="lam", pin_q=">1"),
        _P("C33x_midpoint_qgt1", BoundCase.T33_qgt1, _d_c33x_boundary_qgt1, pin_lam=0.0, pin_mu=0.0, pin_q=">1"),
        _P("C33x_trapezoid_qgt1", BoundCase.T33_qgt1, _d_c33x_boundary_qgt1, pin_lam=1.0, pin_mu=1.0, pin_q=">1"),
        _P("C33x_s1_q1", BoundCase.T33_q1, _d_c33x_s1_q1, pin_s=1.0, pin_q="1",
           note="shipped with the corrected 1/8 prefactor"),
        _P("C33x_s1_qgt1", BoundCase.T33_qgt1, _d_c33x_s1_qgt1, pin_s=1.0, pin_q=">1"),
        _P("C33x_s1_q1_lambda_mu", BoundCase.T33_q1, _d_c33x_s1_q1_lambda_mu, pin_s=1.0, pin_q="1", pin_mu="lam"),
        _P("C33x_s1_qgt1_lambda_mu", BoundCase.T33_qgt1, _d_c33x_s1_qgt1_lambda_mu, kind="weakening",
           pin_s=1.0, pin_q=">1", pin_mu="lam",
           note="power-sum collapse of the two bracket terms"),
        _P("C34x_q1_lambda_mu_tier1", BoundCase.T34_q1_tier1, _d_c34x_q1_lambda_mu_tier1, pin_q="1", pin_mu="lam"),
        _P("C34x_q1_lambda_mu_tier2", BoundCase.T34_q1_tier2, _d_c34x_q1_lambda_mu_tier2, pin_q="1", pin_mu="lam"),
        _P("C34x_qgt1_lambda_mu_tier1", BoundCase.T34_qgt1_tier1, _d_c34x_qgt1_lambda_mu_tier1, pin_q=">1", pin_mu="lam"),
        _P("C34x_qgt1_lambda_mu_tier2", BoundCase.T34_qgt1_tier2, _d_c34x_qgt1_lambda_mu_tier2, pin_q=">1", pin_mu="lam"),
        _P("C34x_q1_s1_tier1", BoundCase.T34_q1_tier1, _d_c34x_q1_s1_tier1, pin_q="1", pin_s=1.0),
        _P("C34x_q1_s1_tier2", BoundCase.T34_q1_tier2, _d_c34x_q1_s1_tier2, pin_q="1", pin_s=1.0),
        _P("C34x_qgt1_s1_tier1", BoundCase.T34_qgt1_tier1, _d_c34x_qgt1_s1_tier1, pin_q=">1", pin_s=1.0),
        _P("C34x_qgt1_s1_tier2", BoundCase.T34_qgt1_tier2, _d_c34x_qgt1_s1_tier2, pin_q=">1", pin_s=1.0),
    ]
}

# As-printed variants of displays whose shipped form is corrected, plus the
# two flagged theorem-level displays handled in bounds/moments.  Scan items.
VERBATIM_DISPLAYS: dict[str, Display] = {
    "C33_s1_q1": _d_c33_s1_q1_verbatim,
    "C32x_lambda_mu_tier2": _d_c32x_lambda_mu_tier2_verbatim,
    "C32x_s1_tier1": _d_c32x_s1_tier1_verbatim,
    "C33x_s1_q1": _d_c33x_s1_q1_verbatim,
}


def preset_bound_from_values(
    pid: str, a, b, lam, mu, s, q, qa, qb, qm, verbatim: bool = False
) -> float:
    """Transcription-path bound value for a preset display."""
    if verbatim:
        display = VERBATIM_DISPLAYS.get(pid)
        if display is None:
            raise PresetMismatchError(f"{pid} has no verbatim variant")
    else:
        display = PRESETS[pid].display
    return display(a, b, lam, mu, s, q, qa, qb, qm)


def eval_preset(
    pid: str,
    f: FunctionSpec,
    p: BoundParams,
    tol: float = DEFAULT_TOL,
    certificate: ConvexityCertificate | None = None,
) -> BoundResult:
    """Evaluate a preset: lhs as for the parent case, bound via its display."""
    if pid not in PRESETS:
        raise PresetMismatchError(f"unknown preset {pid!r}")
    spec = PRESETS[pid]
    spec.validate(p)
    if spec.parent is BoundCase.T31_s_minus1:
        lhs = abs(hh_lhs(f, BoundParams(p.a, p.b, 0.0, 0.0, p.s, p.q), tol))
    else:
        lhs = abs(hh_lhs(f, p, tol))
    qa, qb, qm = derivative_values(f, p)
    bound = spec.display(p.a, p.b, p.lam, p.mu, p.s, p.q, qa, qb, qm)
    return BoundResult(
        lhs=lhs,
        bound=bound,
        slack=bound - lhs,
        case=spec.parent.value,
        params=params_dict(p),
        certificate=certificate.status if certificate else "unchecked",
        branch_notes=spec.note or f"{spec.kind} of {spec.parent.value}",
        preset=pid,
    )


def check_specialization(
    pid: str,
    grid: list[BoundParams],
    f_family: Optional[list[FunctionSpec]] = None,
) -> float:
    """Max normalized gap |preset display - parent case| over the grid.

    For specialization presets the contract is <= 1e-12.  The comparison is
    formula-level: derivative-envelope samples come either from f_family or
    from synthetic positive triples, and the result is
    max |Δ| / (1 + |bound|).
    """
    spec = PRESETS[pid]
    worst = 0.0
    synth = [(0.7, 2.3, 1.1), (0.0, 2.0, 1.0), (3.0, 0.5, 1.75), (1.0, 1.0, 1.0)]
    for p in grid:
        spec.validate(p)
        if f_family:
            triples = [derivative_values(f, p) for f in f_family]
        else:
            triples = synth
        for qa, qb, qm in triples:
            pb = spec.display(p.a, p.b, p.lam, p.mu, p.s, p.q, qa, qb, qm)
            cb, _ = case_bound_from_values(
                spec.parent, p.a, p.b, p.lam, p.mu, p.s, p.q, qa, qb, qm
            )
            worst = max(worst, abs(pb - cb) / (1.0 + abs(cb)))
    return worst
