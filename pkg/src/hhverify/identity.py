"""Both sides of the weighted trapezoid-midpoint integral identity.

For differentiable f on [a, b] and weights λ, μ:

    λf(a)/2 + μf(b)/2 + (2-λ-μ)/2 · f(m) - (1/(b-a))∫f
        = (b-a)/4 · ∫₀¹ [(1-λ-t) f'(ta + (1-t)m) + (μ-t) f'(tm + (1-t)b)] dt

with m = (a+b)/2.  The left side (`hh_lhs`) is the quantity every bound in
the catalog controls; it is kept signed here, callers take absolute values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WrongBranchError
from .functions import FunctionSpec
from .quadrature import DEFAULT_TOL, integrate, mean_integral

__all__ = ["BoundParams", "hh_lhs", "identity_rhs", "check_identity"]


@dataclass(frozen=True)
class BoundParams:
    a: float
    b: float
    lam: float
    mu: float
    s: float
    q: float

    def __post_init__(self) -> None:
        if not self.a <= self.b:
            raise WrongBranchError(f"need a <= b, got a={self.a!r} b={self.b!r}")
        if not 0.0 <= self.lam <= 1.0:
            raise WrongBranchError(f"need lambda in [0, 1], got {self.lam!r}")
        if not 0.0 <= self.mu <= 1.0:
            raise WrongBranchError(f"need mu in [0, 1], got {self.mu!r}")
        if not -1.0 <= self.s <= 1.0:
            raise WrongBranchError(f"need s in [-1, 1], got {self.s!r}")
        if not self.q >= 1.0:
            raise WrongBranchError(f"need q >= 1, got {self.q!r}")

    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)


def hh_lhs(f: FunctionSpec, p: BoundParams, tol: float = DEFAULT_TOL) -> float:
    """Signed left-hand quantity; zero for a = b by continuous extension."""
    if p.a == p.b:
        return 0.0
    m = p.midpoint()
    weighted = (
        0.5 * p.lam * f.eval(p.a)
        + 0.5 * p.mu * f.eval(p.b)
        + 0.5 * (2.0 - p.lam - p.mu) * f.eval(m)
    )
    return weighted - mean_integral(f, p.a, p.b, tol)


def identity_rhs(f: FunctionSpec, p: BoundParams, tol: float = DEFAULT_TOL) -> float:
    """Kernel-weighted integral of f' that the identity equates to `hh_lhs`."""
    if p.a == p.b:
        return 0.0
    if f.deriv is None:
        raise WrongBranchError(f"{f.fid} carries no derivative")
    a, b = p.a, p.b
    m = p.midpoint()
    df = f.deriv

    def integrand(t: float) -> float:
        left = (1.0 - p.lam - t) * df(t * a + (1.0 - t) * m)
        right = (p.mu - t) * df(t * m + (1.0 - t) * b)
        return left + right

    res = integrate(integrand, 0.0, 1.0, tol, breakpoints=(1.0 - p.lam, p.mu))
    return 0.25 * (b - a) * res.value


def check_identity(f: FunctionSpec, p: BoundParams, tol: float = DEFAULT_TOL) -> float:
    """|lhs - rhs|; at most ~10·tol for f with continuous f' on [a, b]."""
    return abs(hh_lhs(f, p, tol) - identity_rhs(f, p, tol))
