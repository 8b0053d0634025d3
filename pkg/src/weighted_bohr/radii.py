"""Radii as minimal positive roots of scalar equations G(x) = 0.

Each equation is phrased so that G(0) > 0; the radius is the first point
where G stops being positive.  ``solve`` scans x = j*h and bisects the first
bracket.  Closed forms, where they exist, are kept on the problem for
cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, NoRadiusError, PreconditionError
from .weights import (WeightSequence, check_decreasing, even_tail_sum, tail_sum,
                      weight_at)

DEFAULT_TOL = 1e-12
DEFAULT_STEP = 1.0 / 1024.0
X_MAX = 1.0 - 1e-6

# (n, p, R_n(p)) as printed; the n=5, p=1 entry is printed "0. 334263"
PRINTED_TABLE1 = (
    (2, 1, 0.366025), (3, 1, 0.342508), (4, 1, 0.336197), (5, 1, 0.334263),
    (6, 1, 0.33364), (7, 1, 0.333435), (8, 1, 0.333367), (9, 1, 0.333345),
    (10, 1, 0.333337), (15, 1, 0.333333), (20, 1, 0.333333), (25, 1, 0.333333),
    (30, 1, 0.333333), (35, 1, 0.333333),
    (2, 2, 0.618034), (3, 2, 0.543689), (4, 2, 0.51879), (5, 2, 0.50866),
    (6, 2, 0.504138), (7, 2, 0.502017), (8, 2, 0.500994), (9, 2, 0.500493),
    (10, 2, 0.500245), (15, 2, 0.500008), (20, 2, 0.5), (25, 2, 0.5),
    (30, 2, 0.5), (35, 2, 0.5),
)


@dataclass(frozen=True)
class RadiusProblem:
    name: str
    residual: Callable[[float], float] = field(compare=False)
    params: dict = field(default_factory=dict, compare=False)
    closed_form: float | None = None

    def __call__(self, x: float) -> float:
        return self.residual(x)


@dataclass(frozen=True)
class RadiusResult:
    root: float
    residual: float
    crossing: bool
    bracket: tuple[float, float]


def _check_p(p: float, upper: float = 2.0) -> float:
    p = float(p)
    if not (0.0 < p <= upper):
        raise DomainError(f"p must lie in (0, {upper:g}], got {p!r}")
    return p


def solve_detailed(problem: RadiusProblem, tol: float = DEFAULT_TOL,
                   step: float = DEFAULT_STEP) -> RadiusResult:
    if tol <= 0 or step <= 0:
        raise DomainError("tol and step must be positive")
    G = problem.residual
    if not G(0.0) > 0:
        raise NoRadiusError(f"{problem.name}: G(0) <= 0, the condition fails at the origin")
    lo, hi = 0.0, None
    j = 1
    while True:
        x = min(j * step, X_MAX)
        gx = G(x)
        if gx <= 0:
            hi = x
            break
        lo = x
        if x >= X_MAX:
            raise NoRadiusError(f"{problem.name}: no sign change on (0, 1 - 1e-6)",
                                holds_everywhere=True)
        j += 1
    if G(hi) == 0.0:
        lo = hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if G(mid) > 0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    probe = min(hi + max(tol, 1e-9), X_MAX)
    return RadiusResult(root, abs(G(root)), G(probe) < 0, (lo, hi))


def solve(problem: RadiusProblem, tol: float = DEFAULT_TOL, step: float = DEFAULT_STEP) -> float:
    """Minimal positive root of ``problem``; raises NoRadiusError if none."""
    return solve_detailed(problem, tol, step).root


# equations --------------------------------------------------------------

def general_problem(w: WeightSequence, p: float) -> RadiusProblem:
    """p phi_0(x) = 2 Phi_1(x)."""
    p = _check_p(p)

    def G(x):
        return p * weight_at(w, 0, x) - 2.0 * tail_sum(w, 1, x).value

    closed = None
    if w.kind == "geometric" or (w.kind == "power" and w.alpha == 0.0):
        closed = p / (2.0 + p)
    elif w.kind == "power" and w.alpha in (1.0, 2.0):
        closed = _power_closed(w.alpha, p)
    elif w.kind == "truncated_geometric" and w.n <= 2:
        closed = _corollary_closed(w.n, p)
    return RadiusProblem("general", G, {"weights": w.to_dict(), "p": p}, closed)


def _corollary_closed(n: int, p: float) -> float | None:
    if n == 1:
        return p / 2.0
    if n == 2:
        return (-1.0 + math.sqrt(1.0 + 2.0 * p)) / 2.0
    return None


def corollary_problem(n: int, p: float) -> RadiusProblem:
    """p(1 - x) - 2x(1 - x^n) = 0."""
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    n = int(n)
    p = _check_p(p)

    def G(x):
        return p * (1.0 - x) - 2.0 * x * (1.0 - x ** n)

    return RadiusProblem("corollary_n", G, {"n": n, "p": p}, _corollary_closed(n, p))


def _power_closed(alpha: float, p: float) -> float | None:
    if alpha == 0.0:
        return p / (2.0 + p)
    if alpha == 1.0:
        return 1.0 - math.sqrt(2.0 / (2.0 + p))
    if alpha == 2.0:
        # (1+r)/(1-r)^3 = (p+2)/2; with s = 1 - r this is s^3 + s/c - 2/c = 0
        c = (p + 2.0) / 2.0
        P, Q = 1.0 / c, -2.0 / c
        d = math.sqrt(Q * Q / 4.0 + P ** 3 / 27.0)
        s = float(np.cbrt(-Q / 2.0 + d) + np.cbrt(-Q / 2.0 - d))
        return 1.0 - s
    return None


def printed_power2_radius(p: float) -> float:
    """The printed value (p+3-sqrt(4p+9))/(p+2) for alpha = 2.

    It is the root of (1+r)/(1-r)^2 = (p+2)/2, not of the alpha = 2 equation
    (1+r)/(1-r)^3 = (p+2)/2; kept only so reports can show the discrepancy.
    """
    return (p + 3.0 - math.sqrt(4.0 * p + 9.0)) / (p + 2.0)


def power_problem(alpha: float, p: float) -> RadiusProblem:
    """Phi_1(x) = p/2 for phi_k = (k+1)^alpha x^k."""
    p = _check_p(p)
    w = WeightSequence.power(alpha)

    def G(x):
        return p / 2.0 - tail_sum(w, 1, x).value

    return RadiusProblem("power_alpha", G, {"alpha": float(alpha), "p": p},
                         _power_closed(float(alpha), p))


def harmonic_problem(w: WeightSequence, p: float, k: float) -> RadiusProblem:
    """1 = (2/p)(1 + k) Phi_1(x)."""
    p = _check_p(p, 1.0)
    k = float(k)
    if not 0.0 <= k <= 1.0:
        raise DomainError("k must lie in [0, 1]")

    def G(x):
        return 1.0 - 2.0 / p * (1.0 + k) * tail_sum(w, 1, x).value

    closed = p / (p + 2.0 * (1.0 + k)) if w.kind == "geometric" else None
    return RadiusProblem("harmonic", G, {"weights": w.to_dict(), "p": p, "k": k}, closed)


def schwarz_derivative_problem(w: WeightSequence) -> RadiusProblem:
    """phi_0(x) = 2 sum_{n>=1} (n+1) phi_n(x)."""
    dw = w.derivative_weights()

    def G(x):
        return weight_at(w, 0, x) - 2.0 * tail_sum(dw, 1, x).value

    closed = 1.0 - math.sqrt(2.0 / 3.0) if w.kind == "geometric" else None
    return RadiusProblem("schwarz_derivative", G, {"weights": w.to_dict()}, closed)


def odd_problem(w: WeightSequence) -> RadiusProblem:
    """1 = 2 sum_{n>=1} phi_{2n}(x)."""

    def G(x):
        return 1.0 - 2.0 * even_tail_sum(w, x).value

    closed = math.sqrt(1.0 / 3.0) if w.kind == "geometric" else None
    return RadiusProblem("odd", G, {"weights": w.to_dict()}, closed)


# convenience wrappers ----------------------------------------------------

def radius_general(w: WeightSequence, p: float, tol: float = DEFAULT_TOL) -> float:
    return solve(general_problem(w, p), tol)


def radius_corollary(n: int, p: float, tol: float = DEFAULT_TOL) -> float:
    return solve(corollary_problem(n, p), tol)


def radius_power(alpha: float, p: float, tol: float = DEFAULT_TOL) -> float:
    return solve(power_problem(alpha, p), tol)


def radius_harmonic(w: WeightSequence, p: float, k: float, tol: float = DEFAULT_TOL) -> float:
    R = solve(harmonic_problem(w, p, k), tol)
    grid = np.linspace(0.0, R, 64)
    if not check_decreasing(w, grid, 64):
        raise PreconditionError(f"{w.label} is not decreasing from index 1 on [0, {R:.6g}]")
    return R


def radius_schwarz_derivative(w: WeightSequence, tol: float = DEFAULT_TOL) -> float:
    return solve(schwarz_derivative_problem(w), tol)


def radius_odd(w: WeightSequence, tol: float = DEFAULT_TOL) -> float:
    return solve(odd_problem(w), tol)


def k_from_K(K: float) -> float:
    """k = (K - 1)/(K + 1) for a K-quasiconformal map."""
    if not K >= 1:
        raise DomainError("K must be >= 1")
    return (K - 1.0) / (K + 1.0)


def min_radius(values: Sequence[float]) -> float:
    values = list(values)
    if not values:
        raise PreconditionError("min_radius needs at least one value")
    return min(values)


def table1(p: float, ns: Sequence[int], tol: float = DEFAULT_TOL) -> list[tuple[int, float]]:
    return [(n, radius_corollary(n, p, tol)) for n in ns]
