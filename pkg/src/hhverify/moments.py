"""Closed forms for the kernel moments  ∫₀¹ |ξ - t| (ωt + η)^s dt.

These weights are what every bound in the catalog reduces to, so each closed
form here is paired with an independent quadrature oracle (`moment_oracle`)
in the test suite.  The four named special cases mirror the published
displays; the (ω, η) = (-1, 2) display is shipped in corrected form — its
final bracket must read (s+2)ξ, which follows from substituting into the
general formula — and the verbatim transcription stays available behind a
flag so the erratum scan can measure the discrepancy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    HolderExponentError,
    MomentParameterError,
    NonIntegrableSingularityError,
)
from .quadrature import DEFAULT_TOL, integrate

__all__ = [
    "MomentSpec",
    "MOMENT_CASES",
    "kernel_mass",
    "moment_general",
    "moment_case",
    "moment_harmonic",
    "moment_oracle",
    "holder_weight_integral",
]

# s may not approach the harmonic pole; exact s = -1 goes to moment_harmonic.
S_MIN = -1.0 + 1e-6

MOMENT_CASES = ((1.0, 0.0), (1.0, 1.0), (-1.0, 1.0), (-1.0, 2.0))


@dataclass(frozen=True)
class MomentSpec:
    xi: float
    omega: float
    eta: float
    s: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.xi <= 1.0:
            raise MomentParameterError(f"xi must lie in [0, 1], got {self.xi!r}")
        if self.omega == 0.0 or not math.isfinite(self.omega):
            raise MomentParameterError("omega must be nonzero and finite")
        if self.eta < 0.0:
            raise MomentParameterError(f"eta must be >= 0, got {self.eta!r}")
        if self.omega + self.eta < 0.0:
            raise MomentParameterError("need omega + eta >= 0 so the weight is nonnegative")
        if self.s < -1.0:
            raise MomentParameterError(f"s must be >= -1, got {self.s!r}")


def kernel_mass(xi: float) -> float:
    """∫₀¹ |ξ - t| dt, the unweighted kernel mass ξ² - ξ + 1/2."""
    return xi * xi - xi + 0.5


def moment_general(m: MomentSpec) -> float:
    """Closed form of ∫₀¹ |ξ - t| (ωt + η)^s dt for s > -1.

    Terms 0^(s+1) with s+1 > 0 evaluate to 0 (eta = 0 or omega + eta = 0).
    """
    if m.s < S_MIN:
        raise MomentParameterError(
            f"s={m.s!r} is within 1e-6 of the harmonic pole; use moment_harmonic for s = -1"
        )
    xi, om, eta, s = m.xi, m.omega, m.eta, m.s
    t1 = 2.0 * (om * xi + eta) ** (s + 2.0)
    t2 = (eta + (s + 2.0) * om * xi) * eta ** (s + 1.0)
    t3 = (2.0 * om * xi + eta + s * om * (xi - 1.0) - om) * (om + eta) ** (s + 1.0)
    return (t1 - t2 - t3) / (om * om * (s + 1.0) * (s + 2.0))


def moment_case(case: tuple[float, float], xi: float, s: float, verbatim: bool = False) -> float:
    """Special-case displays of `moment_general` for the four named (ω, η).

    With ``verbatim=True`` the (-1, 2) case reproduces the published bracket
    "(s+2)η" instead of the corrected "(s+2)ξ"; every other case is identical
    either way.  Must agree with `moment_general` (verbatim=False).
    """
    if not 0.0 <= xi <= 1.0:
        raise MomentParameterError(f"xi must lie in [0, 1], got {xi!r}")
    if s < S_MIN:
        raise MomentParameterError(f"s={s!r} too close to -1; use moment_harmonic")
    s2 = (s + 1.0) * (s + 2.0)
    key = (float(case[0]), float(case[1]))
    if key == (1.0, 0.0):
        return (2.0 * xi ** (s + 2.0) - (s + 2.0) * xi + s + 1.0) / s2
    if key == (1.0, 1.0):
        return (
            2.0 * (xi + 1.0) ** (s + 2.0)
            - ((s + 2.0) * xi - s) * 2.0 ** (s + 1.0)
            - (s + 2.0) * xi
            - 1.0
        ) / s2
    if key == (-1.0, 1.0):
        return (2.0 * (1.0 - xi) ** (s + 2.0) + (s + 2.0) * xi - 1.0) / s2
    if key == (-1.0, 2.0):
        # Corrected bracket is (s+2)ξ; the verbatim display prints (s+2)η with η = 2.
        last = (s + 2.0) * (2.0 if verbatim else xi)
        return (
            2.0 * (2.0 - xi) ** (s + 2.0)
            + ((s + 2.0) * xi - 2.0) * 2.0 ** (s + 1.0)
            + last
            - s
            - 3.0
        ) / s2
    raise MomentParameterError(f"unknown moment case {case!r}")


def moment_harmonic(xi: float, omega: float, eta: float) -> float:
    """Exact piecewise-log value of ∫₀¹ |ξ - t| (ωt + η)^(-1) dt.

    Integrable only when the weight is positive on (0, 1) or its zero sits
    exactly at the kernel zero t = ξ (matching first-order zeros cancel).
    """
    if not 0.0 <= xi <= 1.0:
        raise MomentParameterError(f"xi must lie in [0, 1], got {xi!r}")
    if omega == 0.0:
        raise MomentParameterError("omega must be nonzero")
    w0 = eta
    w1 = omega + eta
    if w0 < 0.0 or w1 < 0.0:
        raise MomentParameterError("weight must be nonnegative on [0, 1]")
    c = omega * xi + eta
    if (w0 == 0.0 or w1 == 0.0) and c != 0.0:
        raise NonIntegrableSingularityError(
            "weight vanishes on [0, 1] away from the kernel zero; integral diverges"
        )

    def g(lo: float, hi: float) -> float:
        # ∫ (ξ - t)/(ωt + η) dt over [lo, hi]
        lin = -(hi - lo) / omega
        if c == 0.0:
            return lin
        return (c / (omega * omega)) * (
            math.log(omega * hi + eta) - math.log(omega * lo + eta)
        ) + lin

    return g(0.0, xi) - g(xi, 1.0)


def moment_oracle(
    xi: float, omega: float, eta: float, s: float, tol: float = DEFAULT_TOL
) -> float:
    """Adaptive-quadrature evaluation of ∫₀¹ |ξ - t| (ωt + η)^s dt.

    Independent cross-check for the closed forms.  A weight vanishing at
    t = 1 is reflected (u = 1 - t) so the singular point lands at 0, where
    float resolution is effectively unbounded.
    """
    if omega + eta == 0.0:
        # |ξ - (1-u)| ((ω+η) - ωu)^s = |(1-ξ) - u| (-ω u)^s exactly.
        return moment_oracle(1.0 - xi, -omega, 0.0, s, tol)

    def f(t: float) -> float:
        return abs(xi - t) * (omega * t + eta) ** s

    return integrate(f, 0.0, 1.0, tol, breakpoints=(xi,)).value


def holder_weight_integral(xi: float, q: float) -> float:
    """Closed form of ∫₀¹ |ξ - t|^(q/(q-1)) dt for q > 1.

    Powers of bases in [0, 1] with the large exponent (2q-1)/(q-1) are taken
    through exp/log so they underflow to zero instead of overflowing.
    """
    if not 0.0 <= xi <= 1.0:
        raise MomentParameterError(f"xi must lie in [0, 1], got {xi!r}")
    if q < 1.0 + 1e-9:
        raise HolderExponentError(
            f"q={q!r} too close to 1 for the conjugate exponent; use a q = 1 branch"
        )
    r = (2.0 * q - 1.0) / (q - 1.0)

    def pw(base: float) -> float:
        if base <= 0.0:
            return 0.0
        if base >= 1.0:
            return 1.0
        return math.exp(r * math.log(base))

    return (q - 1.0) / (2.0 * q - 1.0) * (pw(xi) + pw(1.0 - xi))
