"""Truncated power series on the unit disk.

A :class:`PowerSeries` stores the coefficients a_0..a_N of an analytic
function.  Coefficients past N are unknown unless the series carries the
``polynomial`` tag.  Tags record what the construction guarantees:

``bounded-by-one``  the function lies in the closed unit ball of H^infinity
``schwarz``         bounded-by-one and a_0 = 0
``polynomial``      all coefficients past the order are exactly zero
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.signal import lfilter

from .errors import DomainError, PreconditionError

DEFAULT_ORDER = 256
BOUNDED = "bounded-by-one"
SCHWARZ = "schwarz"
POLYNOMIAL = "polynomial"
KNOWN_TAGS = frozenset({BOUNDED, SCHWARZ, POLYNOMIAL})


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: np.ndarray
    tags: frozenset = frozenset()

    def __init__(self, coeffs: Iterable[complex], tags: Iterable[str] = ()):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=complex).ravel()
        if c.size == 0:
            raise DomainError("a power series needs at least one coefficient")
        c.setflags(write=False)
        tags = frozenset(tags)
        unknown = tags - KNOWN_TAGS
        if unknown:
            raise DomainError(f"unknown tags {sorted(unknown)}")
        if SCHWARZ in tags:
            tags = tags | {BOUNDED}
            if c[0] != 0:
                raise PreconditionError("a schwarz series needs coeffs[0] == 0")
        if BOUNDED in tags and float(np.sum(np.abs(c) ** 2)) > 1.0 + 1e-12:
            raise PreconditionError("prefix violates sum |a_n|^2 <= 1")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "tags", tags)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def bounded(self) -> bool:
        return BOUNDED in self.tags

    @property
    def polynomial(self) -> bool:
        return POLYNOMIAL in self.tags

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        more = ", ..." if self.order > 5 else ""
        return f"PowerSeries([{head}{more}], order={self.order}, tags={sorted(self.tags)})"

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        tags = self.tags - {POLYNOMIAL}
        if np.all(self.coeffs[order + 1:] == 0) and self.polynomial:
            tags = self.tags
        return PowerSeries(self.coeffs[: order + 1], tags)

    def padded(self, order: int) -> "PowerSeries":
        """Extend a polynomial series with explicit zeros up to ``order``."""
        if order <= self.order:
            return self
        if not self.polynomial:
            raise PreconditionError("only polynomial series can be zero-padded")
        c = np.zeros(order + 1, dtype=complex)
        c[: self.coeffs.size] = self.coeffs
        return PowerSeries(c, self.tags)

    # serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {"coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
                "tags": sorted(self.tags)}

    @classmethod
    def from_dict(cls, d: dict) -> "PowerSeries":
        raw = d["coeffs"]
        coeffs = [complex(x[0], x[1]) if isinstance(x, (list, tuple)) else complex(x) for x in raw]
        return cls(coeffs, d.get("tags", ()))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "PowerSeries":
        return cls.from_dict(json.loads(text))


def _common(f: PowerSeries, g: PowerSeries) -> int:
    return min(f.order, g.order)


def add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    n = _common(f, g)
    tags = {POLYNOMIAL} if f.polynomial and g.polynomial else ()
    if tags and f.order != g.order:
        big = max(f.order, g.order)
        return PowerSeries(f.padded(big).coeffs + g.padded(big).coeffs, tags)
    return PowerSeries(f.coeffs[: n + 1] + g.coeffs[: n + 1], tags)


def scale(f: PowerSeries, c: complex) -> PowerSeries:
    tags = set(f.tags & {POLYNOMIAL})
    if abs(c) <= 1 and f.bounded:
        tags |= f.tags & {BOUNDED, SCHWARZ}
    return PowerSeries(c * f.coeffs, tags)


def _product_tags(f: PowerSeries, g: PowerSeries) -> set:
    tags = set()
    if f.bounded and g.bounded:
        tags.add(BOUNDED)
        if SCHWARZ in f.tags or SCHWARZ in g.tags:
            tags.add(SCHWARZ)
    return tags


def _key(f: PowerSeries) -> tuple:
    return f.order, f.coeffs.tobytes(), sorted(f.tags)


def cauchy_product(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """c_n = sum_{m+j=n} a_m b_j, truncated to the common order."""
    # complex multiply is not bitwise commutative under FMA; fix the operand order
    if _key(g) < _key(f):
        f, g = g, f
    if f.polynomial and g.polynomial:
        c = np.convolve(f.coeffs, g.coeffs)
        return PowerSeries(c, _product_tags(f, g) | {POLYNOMIAL})
    if f.polynomial:
        f = f.padded(g.order)
    if g.polynomial:
        g = g.padded(f.order)
    n = _common(f, g)
    c = np.convolve(f.coeffs[: n + 1], g.coeffs[: n + 1])[: n + 1]
    return PowerSeries(c, _product_tags(f, g))


def _trimmed(f: PowerSeries) -> PowerSeries:
    """Drop the explicit trailing zeros of a polynomial series."""
    if not f.polynomial:
        return f
    nz = np.nonzero(f.coeffs)[0]
    deg = int(nz[-1]) if nz.size else 0
    return f if deg == f.order else PowerSeries(f.coeffs[: deg + 1], f.tags)


def compose(g: PowerSeries, omega: PowerSeries) -> PowerSeries:
    """g(omega(z)) by Horner accumulation; requires omega(0) = 0.

    The k-th Horner partial result is multiplied by omega k more times, so it
    only needs to be carried to order n - k.
    """
    if omega.coeffs[0] != 0:
        raise PreconditionError("compose needs omega(0) == 0")
    g, omega = _trimmed(g), _trimmed(omega)
    finite = [s.order for s in (g, omega) if not s.polynomial]
    n = min(finite) if finite else g.order * omega.order
    gc = np.zeros(n + 1, dtype=complex)
    m = min(n, g.order)
    gc[: m + 1] = g.coeffs[: m + 1]
    wc = np.zeros(n + 1, dtype=complex)
    m = min(n, omega.order)
    wc[: m + 1] = omega.coeffs[: m + 1]

    acc = np.array([gc[n]])
    for k in range(n - 1, -1, -1):
        keep = n - k
        prod = np.convolve(acc[:keep + 1], wc[: keep + 1])[: keep + 1]
        if prod.size < keep + 1:
            prod = np.concatenate([prod, np.zeros(keep + 1 - prod.size, dtype=complex)])
        prod[0] += gc[k]
        acc = prod
    tags = set()
    if g.bounded and omega.bounded:
        tags.add(BOUNDED)
        if g.coeffs[0] == 0:
            tags.add(SCHWARZ)
    if g.polynomial and omega.polynomial:
        tags.add(POLYNOMIAL)
    return PowerSeries(acc, tags)


def derivative(f: PowerSeries) -> PowerSeries:
    """(n + 1) a_{n+1}; the order drops by one (an order-0 input gives [0])."""
    tags = f.tags & {POLYNOMIAL}
    if f.order == 0:
        return PowerSeries([0.0], tags)
    n = np.arange(1, f.order + 1)
    return PowerSeries(n * f.coeffs[1:], tags)


def integrate(f: PowerSeries) -> PowerSeries:
    """Antiderivative vanishing at 0; the order grows by one."""
    c = np.zeros(f.order + 2, dtype=complex)
    c[1:] = f.coeffs / np.arange(1, f.order + 2)
    return PowerSeries(c, f.tags & {POLYNOMIAL})


def shift(f: PowerSeries, k: int = 1) -> PowerSeries:
    """z^k f(z); known coefficients extend by k."""
    c = np.concatenate([np.zeros(k, dtype=complex), f.coeffs])
    tags = set(f.tags)
    if k > 0 and f.bounded:
        tags.add(SCHWARZ)
    return PowerSeries(c, tags)


def divide(f: PowerSeries, g: PowerSeries, tags: Iterable[str] = ()) -> PowerSeries:
    """Series of f/g; needs g(0) != 0.  The caller vouches for the tags."""
    if g.coeffs[0] == 0:
        raise PreconditionError("division needs g(0) != 0")
    orders = [s.order for s in (f, g) if not s.polynomial]
    n = min(orders) if orders else max(f.order, g.order)
    impulse = np.zeros(n + 1, dtype=complex)
    impulse[0] = 1.0
    return PowerSeries(lfilter(f.coeffs[: n + 1], g.coeffs[: n + 1], impulse), tags)


def eval_at(f: PowerSeries, z: complex) -> complex:
    """Horner evaluation of the known prefix."""
    acc = 0j
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)


def eval_many(f: PowerSeries, z: np.ndarray) -> np.ndarray:
    return np.polyval(f.coeffs[::-1], np.asarray(z, dtype=complex))


# generators -------------------------------------------------------------

def _geometric_powers(c: complex, n: int) -> np.ndarray:
    """1, c, c^2, ..., c^(n-1) by repeated multiplication."""
    out = np.empty(n, dtype=complex)
    if n:
        out[0] = 1.0
        if n > 1:
            out[1:] = c
            out = np.cumprod(out)
    return out


def mobius(a: float, order: int = DEFAULT_ORDER) -> PowerSeries:
    """(a - z)/(1 - a z) = a - (1 - a^2) sum_{n>=1} a^{n-1} z^n."""
    a = float(a)
    if not (0.0 <= a < 1.0):
        raise DomainError(f"mobius parameter must lie in [0, 1), got {a!r}")
    c = np.empty(order + 1, dtype=complex)
    c[0] = a
    c[1:] = -(1.0 - a * a) * _geometric_powers(a, order)
    tags = {BOUNDED}
    if a == 0.0:
        tags |= {SCHWARZ, POLYNOMIAL}
    return PowerSeries(c, tags)


def blaschke_factor(zero: complex, order: int = DEFAULT_ORDER) -> PowerSeries:
    """(z0 - z)/(1 - conj(z0) z)."""
    zero = complex(zero)
    if not abs(zero) < 1.0:
        raise DomainError(f"Blaschke zero {zero!r} is not inside the unit disk")
    if zero == 0:
        return PowerSeries([0.0, -1.0], {SCHWARZ, POLYNOMIAL})
    c = np.empty(order + 1, dtype=complex)
    c[0] = zero
    c[1:] = -(1.0 - abs(zero) ** 2) * _geometric_powers(zero.conjugate(), order)
    return PowerSeries(c, {BOUNDED})


def blaschke(zeros: Sequence[complex], rotation: complex = 1.0,
             order: int = DEFAULT_ORDER) -> PowerSeries:
    """rotation * prod_i (z_i - z)/(1 - conj(z_i) z) by repeated Cauchy products."""
    rotation = complex(rotation)
    if abs(abs(rotation) - 1.0) > 1e-12:
        raise DomainError("rotation must be unimodular")
    out = PowerSeries([rotation], {BOUNDED, POLYNOMIAL})
    for z0 in zeros:
        out = cauchy_product(out, blaschke_factor(z0, order))
    if out.polynomial:
        return out.padded(order) if out.order < order else out
    return out.truncate(order)
