"""Majorant-type functionals of truncated power series.

Every functional returns a :class:`FunctionalValue`: the value computed from
the known coefficient prefix plus a rigorous bound on what the unknown
coefficients could add.  ``r`` may be a float or a 1-d array of radii; the
fields of the result follow that shape.

Tail bounds use what the series tags guarantee:

* ``polynomial``: nothing is unknown, the tail is 0;
* ``bounded-by-one``: |a_n| <= 1 and sum |a_n|^2 <= 1 (Parseval);
* anything else raises :class:`CapabilityError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

import numpy as np

from .errors import CapabilityError, DomainError, PreconditionError
from .series import PowerSeries
from .weights import WeightSequence, tail_sum, tails_array, weights_array

Radius = Union[float, np.ndarray]


class FunctionalValue(NamedTuple):
    value: Radius
    tail_bound: Radius

    @property
    def upper(self) -> Radius:
        return self.value + self.tail_bound


def _grid(r) -> tuple[np.ndarray, bool]:
    arr = np.atleast_1d(np.asarray(r, dtype=float))
    if arr.ndim != 1:
        raise DomainError("r must be a scalar or a 1-d array")
    if np.any(arr < 0) or np.any(arr >= 1) or not np.all(np.isfinite(arr)):
        raise DomainError("r must lie in [0, 1)")
    return arr, np.ndim(r) == 0


def _out(value: np.ndarray, tail: np.ndarray, scalar: bool) -> FunctionalValue:
    if scalar:
        return FunctionalValue(float(value[0]), float(tail[0]))
    return FunctionalValue(value, tail)


@lru_cache(maxsize=128)
def _phi_table(w: WeightSequence, rs: tuple, count: int) -> np.ndarray:
    t = np.vstack([weights_array(w, r, count) for r in rs])
    t.setflags(write=False)
    return t


@lru_cache(maxsize=128)
def _tail_table(w: WeightSequence, rs: tuple, count: int) -> np.ndarray:
    """Rows Phi_0(r)..Phi_count(r)."""
    t = np.vstack([tails_array(w, r, count) for r in rs])
    t.setflags(write=False)
    return t


@lru_cache(maxsize=128)
def _tail_at(w: WeightSequence, rs: tuple, N: int) -> np.ndarray:
    """Phi_N(r) plus its error bound, so the bound stays one-sided."""
    return np.array([sum(tail_sum(w, N, r)) for r in rs])


def coefficient_bound(f: PowerSeries) -> float:
    """Bound on |a_n| past the known prefix (0 for polynomials)."""
    if f.polynomial:
        return 0.0
    if f.bounded:
        return 1.0
    raise CapabilityError("series is neither polynomial nor bounded-by-one; no tail bound")


def majorant(f: PowerSeries, w: WeightSequence, N: int, r: Radius) -> FunctionalValue:
    """B_N(f, phi, r) = sum_{n >= N} |a_n| phi_n(r)."""
    rs, scalar = _grid(r)
    if N < 0:
        raise DomainError("N must be >= 0")
    M = f.order
    bound = coefficient_bound(f)
    if N > M:
        value = np.zeros_like(rs)
        tail = bound * _tail_at(w, tuple(rs), N) if bound else np.zeros_like(rs)
        return _out(value, tail, scalar)
    phi = _phi_table(w, tuple(rs), M + 1)
    value = phi[:, N:] @ np.abs(f.coeffs[N:])
    tail = bound * _tail_at(w, tuple(rs), M + 1) if bound else np.zeros_like(rs)
    return _out(value, tail, scalar)


def refined_remainder(f: PowerSeries, w: WeightSequence, r: Radius) -> FunctionalValue:
    """A(f_0, phi, r) = sum_{n>=1} |a_n|^2 (phi_{2n}/(1+|a_0|) + Phi_{2n+1}).

    For n past the prefix each bracket is at most Phi_{2n} <= Phi_{2M+2}, and
    the unknown |a_n|^2 sum to at most 1, so the tail is Phi_{2M+2}(r).
    """
    rs, scalar = _grid(r)
    M = f.order
    bound = coefficient_bound(f)
    a2 = np.abs(f.coeffs) ** 2
    a0 = abs(f.coeffs[0])
    if M == 0:
        value = np.zeros_like(rs)
    else:
        n = np.arange(1, M + 1)
        phi = _phi_table(w, tuple(rs), 2 * M + 1)
        big = _tail_table(w, tuple(rs), 2 * M + 2)
        bracket = phi[:, 2 * n] / (1.0 + a0) + big[:, 2 * n + 1]
        value = bracket @ a2[1:]
    tail = bound * _tail_at(w, tuple(rs), 2 * M + 2) if bound else np.zeros_like(rs)
    return _out(value, tail, scalar)


def norm_sq(f: PowerSeries, r: Radius) -> FunctionalValue:
    """||f_0||_r^2 = sum_{n>=1} |a_n|^2 r^{2n}."""
    rs, scalar = _grid(r)
    M = f.order
    bound = coefficient_bound(f)
    n = np.arange(1, M + 1)
    value = (rs[:, None] ** (2 * n)) @ (np.abs(f.coeffs[1:]) ** 2)
    tail = bound * rs ** (2 * (M + 1)) / (1.0 - rs * rs)
    return _out(np.atleast_1d(value), tail, scalar)


def _check_p(p: float, upper: float = 2.0) -> float:
    p = float(p)
    if not (0.0 < p <= upper):
        raise DomainError(f"p must lie in (0, {upper:g}], got {p!r}")
    return p


def _a0_power(a0: float, p: float) -> float:
    # 0**p = 0 for every p > 0; the functional is continuous in |a_0|
    return 0.0 if a0 == 0.0 else a0 ** p


def bohr_functional(f: PowerSeries, w: WeightSequence, p: float, r: Radius) -> FunctionalValue:
    """|a_0|^p phi_0(r) + B_1(f, phi, r)."""
    p = _check_p(p)
    rs, scalar = _grid(r)
    head = _a0_power(abs(f.coeffs[0]), p) * _phi_table(w, tuple(rs), 1)[:, 0]
    rest = majorant(f, w, 1, rs)
    return _out(head + rest.value, rest.tail_bound, scalar)


def refined_functional(f: PowerSeries, w: WeightSequence, p: float, r: Radius) -> FunctionalValue:
    """|a_0|^p phi_0(r) + B_1(f, phi, r) + A(f_0, phi, r)."""
    rs, scalar = _grid(r)
    b = bohr_functional(f, w, p, rs)
    a = refined_remainder(f, w, rs)
    return _out(b.value + a.value, b.tail_bound + a.tail_bound, scalar)


def derivative_majorant(f: PowerSeries, w: WeightSequence, r: Radius) -> FunctionalValue:
    """B_{f'}(phi, r) = sum_{n>=0} (n+1) |a_{n+1}| phi_n(r) for a Schwarz function f."""
    if f.coeffs[0] != 0:
        raise PreconditionError("derivative_majorant needs f(0) == 0")
    return derivative_majorant_unchecked(f, w, r, coefficient_bound(f))


def derivative_majorant_unchecked(f: PowerSeries, w: WeightSequence, r: Radius,
                                  bound: float) -> FunctionalValue:
    """Same sum for any f whose unknown |a_n| (n >= 1) are at most ``bound``."""
    rs, scalar = _grid(r)
    M = f.order
    if M == 0:
        value = np.zeros_like(rs)
    else:
        phi = _phi_table(w, tuple(rs), M)
        value = phi @ (np.arange(1, M + 1) * np.abs(f.coeffs[1:]))
    if bound:
        dw = w.derivative_weights()
        tail = bound * _tail_at(dw, tuple(rs), M)
    else:
        tail = np.zeros_like(rs)
    return _out(value, tail, scalar)


@dataclass(frozen=True)
class QuadraticWeight:
    """psi_k(r) for k >= 1, decreasing in k on [0, r_psi).

    ``geometric``: r^{2k};  ``linear``: k r^{2k};  ``quadratic``: k^2 r^{2(k-1)}.
    """

    kind: str = "geometric"

    def __post_init__(self):
        if self.kind not in ("geometric", "linear", "quadratic"):
            raise DomainError(f"unknown quadratic weight {self.kind!r}")

    @property
    def r_psi(self) -> float:
        return {"geometric": 1.0, "linear": 1.0 / math.sqrt(2.0), "quadratic": 0.5}[self.kind]

    def values(self, rs: np.ndarray, count: int) -> np.ndarray:
        """Matrix of psi_1..psi_count at each r."""
        k = np.arange(1, count + 1, dtype=float)
        rs = np.asarray(rs, dtype=float)[:, None]
        if self.kind == "geometric":
            return rs ** (2 * k)
        if self.kind == "linear":
            return k * rs ** (2 * k)
        return k * k * rs ** (2 * (k - 1))


def quadratic_weighted_sum(f: PowerSeries, psi: QuadraticWeight, r: Radius) -> FunctionalValue:
    """sum_{k>=1} |a_k|^2 psi_k(r); the tail is psi_{M+1}(r) by monotonicity and Parseval."""
    rs, scalar = _grid(r)
    if np.any(rs >= psi.r_psi):
        raise DomainError(f"r must be below r_psi = {psi.r_psi:g}")
    M = f.order
    bound = coefficient_bound(f)
    vals = psi.values(rs, M + 1)
    value = vals[:, :M] @ (np.abs(f.coeffs[1:]) ** 2) if M else np.zeros_like(rs)
    tail = vals[:, M] if bound else np.zeros_like(rs)
    return _out(np.atleast_1d(value), tail, scalar)


def harmonic_functional(h: PowerSeries, g: PowerSeries, w: WeightSequence, p: float,
                        r: Radius, k: float = 1.0) -> FunctionalValue:
    """a_0^p + sum_{n>=1} |a_n| phi_n(r) + sum_{n>=1} |b_n| phi_n(r).

    Assumes Re h <= 1, h(0) = a_0 > 0 and |g'| <= k |h'|.  Unknown a_n obey
    |a_n| <= 2(1 - a_0).  Unknown b_n come from the Cauchy estimate on
    |z| = rho = (1 + r)/2:  |b_n| <= 2k(1 - a_0) / (n (1 - rho)^2 rho^(n-1)),
    which turns the b-tail into a weight tail at the radius r/rho < 1.
    """
    p = _check_p(p, 1.0)
    a0c = complex(h.coeffs[0])
    if a0c.imag != 0.0 or not a0c.real > 0.0:
        raise PreconditionError("harmonic_functional needs h(0) real and positive")
    a0 = a0c.real
    if not 0.0 <= k <= 1.0:
        raise DomainError("k must lie in [0, 1]")
    rs, scalar = _grid(r)
    phi_h = _phi_table(w, tuple(rs), h.order + 1)
    phi_g = _phi_table(w, tuple(rs), g.order + 1)
    value = _a0_power(a0, p) + phi_h[:, 1:] @ np.abs(h.coeffs[1:]) + phi_g[:, 1:] @ np.abs(g.coeffs[1:])
    c = 2.0 * max(1.0 - a0, 0.0)
    tail = np.zeros_like(rs)
    if not h.polynomial:
        tail = tail + c * _tail_at(w, tuple(rs), h.order + 1)
    if not g.polynomial:
        rho = (1.0 + rs) / 2.0
        shrunk = tuple(rs / rho)
        tail = tail + c * k * rho / (1.0 - rho) ** 2 * _tail_at(w, shrunk, g.order + 1)
    return _out(np.atleast_1d(value), tail, scalar)


class CarlsonResiduals(NamedTuple):
    odd: np.ndarray   # n = 0..n_max: (1 - sum_{k<=n}|a_k|^2) - |a_{2n+1}|
    even: np.ndarray  # n = 1..n_max: (1 - sum_{k<n}|a_k|^2 - |a_n|^2/(1+|a_0|)) - |a_{2n}|

    def minimum(self) -> float:
        return float(min(self.odd.min(initial=np.inf), self.even.min(initial=np.inf)))


def carlson_residuals(f: PowerSeries, n_max: int) -> CarlsonResiduals:
    if 2 * n_max + 1 > f.order:
        if not f.polynomial:
            raise CapabilityError(f"order {f.order} too small for n_max = {n_max}")
        f = f.padded(2 * n_max + 1)
    a = np.abs(f.coeffs)
    a2 = a ** 2
    csum = np.cumsum(a2[: n_max + 1])
    n = np.arange(0, n_max + 1)
    odd = (1.0 - csum) - a[2 * n + 1]
    m = np.arange(1, n_max + 1)
    even = (1.0 - csum[m - 1] - a2[m] / (1.0 + a[0])) - a[2 * m]
    return CarlsonResiduals(odd, even)


def bombieri_bound(r: float) -> float:
    """(3 - sqrt(8(1-r^2)))/r on [1/3, 1/sqrt 2], 1/sqrt(1-r^2) beyond.

    The first branch is evaluated in the cancellation-free form
    (1 + 8r^2) / (r (3 + sqrt(8(1-r)(1+r)))).
    """
    r = float(r)
    if not (1.0 / 3.0 <= r < 1.0):
        raise DomainError("bombieri_bound is defined for r in [1/3, 1)")
    s = (1.0 - r) * (1.0 + r)
    if r <= 1.0 / math.sqrt(2.0):
        return (1.0 + 8.0 * r * r) / (r * (3.0 + math.sqrt(8.0 * s)))
    return 1.0 / math.sqrt(s)


def partial_sum_sup(f: PowerSeries, n: int, r: float, samples: int = 256) -> float:
    """max over ``samples`` equispaced points of |z| = r of |sum_{k<=n} a_k z^k|."""
    if n > f.order:
        raise DomainError("n exceeds the series order")
    z = r * np.exp(2j * np.pi * np.arange(samples) / samples)
    return float(np.max(np.abs(np.polyval(f.coeffs[: n + 1][::-1], z))))
