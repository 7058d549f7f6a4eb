"""Adaptive 1-D quadrature oracle.

Panel rule is an embedded Gauss(7)/Kronrod(15) pair; the per-panel error
estimate is the plain difference of the two rules, and the global estimate is
the sum over panels.  The worst panel is bisected until the summed estimate
meets the requested tolerance or the panel budget runs out, in which case the
result is returned with ``converged=False`` rather than silently trusted.

Integrable endpoint singularities (power weights with exponent in (-1, 0))
are handled by geometrically grading the initial partition toward the
offending endpoint with ratio 0.25 per level; the rule never samples panel
endpoints, so the integrand is only ever evaluated at interior points.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import (
    DegenerateIntervalError,
    InvalidToleranceError,
    NonFiniteIntegrandError,
)

__all__ = ["QuadResult", "integrate", "mean_integral"]

# Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit on
# the odd-index abscissae.  Standard 20-digit values.
_XGK = (
    0.99145537112081263921,
    0.94910791234275852453,
    0.86486442335976907279,
    0.74153118559939443986,
    0.58608723546769113029,
    0.40584515137739716691,
    0.20778495500789846760,
    0.0,
)
_WGK = (
    0.02293532201052922496,
    0.06309209262997855329,
    0.10479001032225018384,
    0.14065325971552591875,
    0.16900472663926790283,
    0.19035057806478540991,
    0.20443294007529889241,
    0.20948214108472782801,
)
_WG = (
    0.12948496616886969327,
    0.27970539148927666790,
    0.38183005050511894495,
    0.41795918367346938776,
)

DEFAULT_TOL = 1e-12
ABS_FLOOR = 1e-14
DEFAULT_PANEL_BUDGET = 1 << 20

# Singular-endpoint grading: ratio 0.25 per level, stopping once the panel
# adjacent to the singularity has shrunk by this factor.
_GRADE_RATIO = 0.25
_GRADE_FLOOR = 1e-250


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    evaluations: int
    converged: bool


def _sample(f: Callable[[float], float], x: float) -> float:
    try:
        v = f(x)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise NonFiniteIntegrandError(f"integrand failed at {x!r}: {exc}") from exc
    if not math.isfinite(v):
        raise NonFiniteIntegrandError(f"integrand not finite at {x!r}")
    return v


def _gk15(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    """One Gauss7/Kronrod15 application on [lo, hi] -> (K15 value, |K15-G7|)."""
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    kron = 0.0
    gauss = 0.0
    for i, x in enumerate(_XGK):
        if x == 0.0:
            v = _sample(f, c)
            kron += _WGK[i] * v
            gauss += _WG[3] * v
            continue
        s = _sample(f, c - h * x) + _sample(f, c + h * x)
        kron += _WGK[i] * s
        if i % 2 == 1:
            gauss += _WG[i // 2] * s
    return h * kron, abs(h * (kron - gauss))


def _splittable(lo: float, hi: float) -> bool:
    """A panel may be bisected only while its children's quadrature nodes
    remain representable floats distinct from the panel edges."""
    return (hi - lo) > 1024.0 * math.ulp(max(abs(lo), abs(hi)))


def _probe_finite(f: Callable[[float], float], x: float) -> bool:
    try:
        v = f(x)
    except (ValueError, ZeroDivisionError, OverflowError):
        return False
    return math.isfinite(v)


def _graded_points(lo: float, hi: float, toward_lo: bool) -> list[float]:
    """Interior cut points clustering geometrically toward one endpoint.

    Grading stops at the relative floor or where panel nodes would no longer
    be representable as floats distinct from the endpoint (an endpoint at 0
    benefits from denormals, so grading can go far deeper there).
    """
    width = hi - lo
    endpoint = lo if toward_lo else hi
    resolution = 1e-12 * max(abs(endpoint), 1e-300)
    floor = max(width * _GRADE_FLOOR, resolution)
    points = []
    w = width * _GRADE_RATIO
    while w > floor:
        points.append(lo + w if toward_lo else hi - w)
        w *= _GRADE_RATIO
    return points


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    breakpoints: Sequence[float] | Iterable[float] = (),
    max_panels: int = DEFAULT_PANEL_BUDGET,
) -> QuadResult:
    """Integrate f over [a, b] to relative tolerance ``tol``.

    ``breakpoints`` pre-split the initial partition (kinks, branch points).
    The target is ``max(ABS_FLOOR, tol * |integral|)``; when the panel budget
    is exhausted first, the best estimate is returned with converged=False.
    """
    if not (math.isfinite(tol) and tol > 0.0):
        raise InvalidToleranceError(f"tolerance must be positive, got {tol!r}")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidToleranceError("integration endpoints must be finite")
    if a > b:
        raise InvalidToleranceError(f"need a <= b, got a={a!r} b={b!r}")
    if a == b:
        return QuadResult(0.0, 0.0, 0, True)

    cuts = {float(a), float(b)}
    for p in breakpoints:
        p = float(p)
        if a < p < b:
            cuts.add(p)
    edges = sorted(cuts)

    # Grade the outermost panels toward an endpoint where the integrand is
    # singular (non-finite or raising when probed).
    if not _probe_finite(f, a):
        edges = sorted(set(edges) | set(_graded_points(edges[0], edges[1], True)))
    if not _probe_finite(f, b):
        edges = sorted(set(edges) | set(_graded_points(edges[-2], edges[-1], False)))

    evaluations = 0
    heap: list[tuple[float, float, float, float]] = []  # (-err, lo, hi, value)
    done: list[tuple[float, float, float, float]] = []  # unsplittable panels
    total_value = 0.0
    live_err = 0.0
    done_err = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e = _gk15(f, lo, hi)
        evaluations += 15
        total_value += v
        live_err += e
        heapq.heappush(heap, (-e, lo, hi, v))

    while True:
        target = max(ABS_FLOOR, tol * abs(total_value))
        if live_err + done_err <= target:
            converged = True
            break
        if not heap or done_err > target or len(heap) + len(done) >= max_panels:
            converged = False
            break
        neg_e, lo, hi, v = heapq.heappop(heap)
        live_err += neg_e
        mid = 0.5 * (lo + hi)
        if not _splittable(lo, hi) or mid <= lo or mid >= hi:
            # Panel is at float resolution and cannot be refined further.
            done.append((neg_e, lo, hi, v))
            done_err += -neg_e
            continue
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        evaluations += 30
        total_value += (v1 + v2) - v
        live_err += e1 + e2
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))

    # Re-sum panels in position order for a deterministic, drift-free value.
    panels = sorted(heap + done, key=lambda p: p[1])
    value = math.fsum(p[3] for p in panels)
    err = math.fsum(-p[0] for p in panels)
    return QuadResult(value, err, evaluations, converged)


def mean_integral(f, a: float, b: float, tol: float = DEFAULT_TOL) -> float:
    """Average value of f over [a, b]: integral divided by the length."""
    if a == b:
        raise DegenerateIntervalError("mean integral undefined for a == b")
    if a > b:
        raise DegenerateIntervalError(f"need a < b, got a={a!r} b={b!r}")
    eval_fn = f.eval if hasattr(f, "eval") else f
    res = integrate(eval_fn, a, b, tol)
    return res.value / (b - a)
