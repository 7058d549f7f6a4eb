"""Scalar functions with exact derivatives, plus extended s-convexity checks.

A function g is extended s-convex on an interval, for s in [-1, 1], when

    g(λx + (1-λ)y) <= λ^s g(x) + (1-λ)^s g(y)    for all x, y, λ in (0, 1).

s = 1 is ordinary convexity, s = 0 allows the P-convex doubling bound, and
s = -1 is the Godunova-Levin class.  Certification is analytic only for the
power family (see `certify_power_extended_s`); everything else can merely be
sampled, so a sampling check reports not-falsified, never certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import FunctionDomainError

__all__ = [
    "FunctionSpec",
    "ConvexityCertificate",
    "make_power",
    "make_exp",
    "make_const",
    "from_id",
    "derivative_q_envelope",
    "certify_power_extended_s",
    "check_extended_s_convex",
    "derivative_consistency",
]

# λ is kept away from {0, 1}: the defining inequality quantifies over the
# open interval and λ^s blows up at 0 for s < 0.
LAMBDA_CLAMP = 1e-6


@dataclass(frozen=True)
class FunctionSpec:
    """A scalar function on [lo, hi] with an exact first derivative."""

    fid: str
    lo: float
    hi: float
    eval: Callable[[float], float]
    deriv: Optional[Callable[[float], float]]

    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)


@dataclass(frozen=True)
class ConvexityCertificate:
    """Claim about extended s-convexity of a target function.

    status is one of:
      - "certified-analytic": backed by the power-family rule;
      - "not-falsified": sampling found no violation (not a proof);
      - "falsified": `witness` is a triple (x, y, lam) violating the
        defining inequality by more than tolerance.
    """

    s: Optional[float]
    q: float
    target: str
    status: str
    witness: Optional[tuple[float, float, float]] = None
    note: str = ""


def make_power(p: float, lo: float, hi: float) -> FunctionSpec:
    """x ↦ x^p on [lo, hi] with derivative p·x^(p-1)."""
    if lo >= hi:
        raise FunctionDomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    if p < 1.0 and lo <= 0.0:
        raise FunctionDomainError(f"power p={p!r} < 1 needs lo > 0, got lo={lo!r}")
    if p != int(p) and lo < 0.0:
        raise FunctionDomainError(f"non-integer power p={p!r} needs lo >= 0")

    def f(x: float) -> float:
        return x**p

    def df(x: float) -> float:
        if p == 1.0:
            return 1.0
        return p * x ** (p - 1.0)

    return FunctionSpec(f"pow:{p:g}", float(lo), float(hi), f, df)


def make_exp(lo: float, hi: float) -> FunctionSpec:
    if lo >= hi:
        raise FunctionDomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    return FunctionSpec("exp", float(lo), float(hi), math.exp, math.exp)


def make_const(c: float, lo: float, hi: float) -> FunctionSpec:
    if lo >= hi:
        raise FunctionDomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    return FunctionSpec(f"const:{c:g}", float(lo), float(hi), lambda x: c, lambda x: 0.0)


def from_id(fid: str, lo: float, hi: float) -> FunctionSpec:
    """Resolve a family id ("pow:<p>", "exp", "const:<c>") on [lo, hi]."""
    if fid == "exp":
        return make_exp(lo, hi)
    if fid.startswith("pow:"):
        return make_power(float(fid[4:]), lo, hi)
    if fid.startswith("const:"):
        return make_const(float(fid[6:]), lo, hi)
    raise FunctionDomainError(f"unknown function id {fid!r}")


def derivative_q_envelope(f: FunctionSpec, q: float) -> FunctionSpec:
    """|f'|^q as a FunctionSpec; its own derivative is left absent."""
    if q < 1.0:
        raise FunctionDomainError(f"need q >= 1, got {q!r}")
    if f.deriv is None:
        raise FunctionDomainError(f"{f.fid} carries no derivative")
    df = f.deriv

    def g(x: float) -> float:
        return abs(df(x)) ** q

    return FunctionSpec(f"|{f.fid}'|^{q:g}", f.lo, f.hi, g, None)


def certify_power_extended_s(p: float, q: float) -> ConvexityCertificate:
    """Analytic certificate for |f'|^q of f = x^p on positive intervals.

    |f'(x)|^q = p^q x^((p-1)q) is extended (p-1)-convex exactly when the
    power rule applies: -1 < (p-1)q <= 1 (which for q >= 1 also forces
    -1 < p-1 <= 1).  Outside that range nothing is claimed.
    """
    if p <= 0.0:
        raise FunctionDomainError(f"need p > 0, got {p!r}")
    if q < 1.0:
        raise FunctionDomainError(f"need q >= 1, got {q!r}")
    gamma = (p - 1.0) * q
    if -1.0 < gamma <= 1.0 and -1.0 < p - 1.0 <= 1.0:
        return ConvexityCertificate(
            s=p - 1.0,
            q=q,
            target=f"|d(pow:{p:g})|^{q:g}",
            status="certified-analytic",
            note="power rule",
        )
    return ConvexityCertificate(
        s=None,
        q=q,
        target=f"|d(pow:{p:g})|^{q:g}",
        status="not-falsified",
        note=f"power rule inapplicable: (p-1)q={gamma:g} outside (-1, 1]",
    )


def _halton(index: int, base: int) -> float:
    f = 1.0
    r = 0.0
    i = index
    while i > 0:
        f /= base
        r += f * (i % base)
        i //= base
    return r


def check_extended_s_convex(
    g: FunctionSpec,
    lo: float,
    hi: float,
    s: float,
    samples: int = 200,
    seed: int = 0,
) -> ConvexityCertificate:
    """Sampling check of the defining inequality on [lo, hi].

    Evaluates a Halton set plus seeded random triples (x, y, λ) with λ
    clamped to [1e-6, 1 - 1e-6].  Returns falsified with the first witness
    whose violation exceeds 1e-12·(1 + scale); otherwise not-falsified.
    Deterministic for fixed (seed, samples).
    """
    if samples < 1:
        raise FunctionDomainError(f"need samples >= 1, got {samples!r}")
    if not (g.lo <= lo < hi <= g.hi):
        raise FunctionDomainError(
            f"[{lo!r}, {hi!r}] is not inside the domain of {g.fid}"
        )
    if not -1.0 <= s <= 1.0:
        raise FunctionDomainError(f"need s in [-1, 1], got {s!r}")

    def value(x: float) -> float:
        try:
            v = g.eval(x)
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise FunctionDomainError(f"{g.fid} not evaluable at {x!r}: {exc}") from exc
        if not math.isfinite(v):
            raise FunctionDomainError(f"{g.fid} not finite at {x!r}")
        if v < 0.0:
            raise FunctionDomainError(
                f"{g.fid} is negative at {x!r}; extended s-convexity needs g >= 0"
            )
        return v

    def triple(u1: float, u2: float, u3: float) -> Optional[tuple[float, float, float]]:
        x = lo + u1 * (hi - lo)
        y = lo + u2 * (hi - lo)
        lam = min(1.0 - LAMBDA_CLAMP, max(LAMBDA_CLAMP, u3))
        lhs = value(lam * x + (1.0 - lam) * y)
        rhs = lam**s * value(x) + (1.0 - lam) ** s * value(y)
        if lhs - rhs > 1e-12 * (1.0 + abs(rhs)):
            return (x, y, lam)
        return None

    target = f"{g.fid} (s={s:g})"
    for k in range(1, samples + 1):
        w = triple(_halton(k, 2), _halton(k, 3), _halton(k, 5))
        if w is not None:
            return ConvexityCertificate(s, 1.0, target, "falsified", w, "halton witness")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        u = rng.uniform(size=3)
        w = triple(u[0], u[1], u[2])
        if w is not None:
            return ConvexityCertificate(s, 1.0, target, "falsified", w, "random witness")
    return ConvexityCertificate(s, 1.0, target, "not-falsified", None, f"{2 * samples} triples")


def derivative_consistency(f: FunctionSpec, points: int = 100) -> float:
    """Worst relative gap between f.deriv and a central difference of f.eval.

    Interior sample points only; step h = max(1e-6, 1e-6·|x|).
    """
    if f.deriv is None:
        raise FunctionDomainError(f"{f.fid} carries no derivative")
    worst = 0.0
    span = f.hi - f.lo
    for i in range(1, points + 1):
        x = f.lo + span * i / (points + 1.0)
        h = max(1e-6, 1e-6 * abs(x))
        h = min(h, 0.49 * min(x - f.lo, f.hi - x))
        fd = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h)
        d = f.deriv(x)
        worst = max(worst, abs(fd - d) / (1.0 + abs(d)))
    return worst
