"""Seeded generators for the test-function families.

Every generated series carries only tags its construction guarantees.  A
:class:`TestFunctionSpec` pins the family, seed, degree and options, so the
same spec always reproduces the same coefficients bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import series as S
from .errors import DomainError
from .series import PowerSeries

FAMILIES = ("blaschke", "mobius", "schwarz", "subordinate_pair", "quasi_sub_triple",
            "harmonic_pair", "odd_pair")

MASK64 = (1 << 64) - 1
ZERO_RADIUS = 0.95
MAX_DEGREE = 8


def mix64(x: int) -> int:
    """SplitMix64 finalizer; a fixed bijection on 64-bit integers."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def sample_seed(base_seed: int, index: int) -> int:
    return mix64(mix64(base_seed & MASK64) ^ (index & MASK64))


@dataclass(frozen=True)
class TestFunctionSpec:
    __test__ = False  # keep pytest from collecting this class

    family: str
    seed: int
    degree: int = 2
    variant: str = ""
    a0: float | None = None
    k: float | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if not 0 <= self.degree <= MAX_DEGREE:
            raise DomainError(f"degree must lie in [0, {MAX_DEGREE}]")
        if self.a0 is not None and not 0.0 < self.a0 < 1.0:
            raise DomainError("a0 must lie in (0, 1)")
        if self.k is not None and not 0.0 <= self.k <= 1.0:
            raise DomainError("k must lie in [0, 1]")

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v not in (None, "")}


def sample_spec(family: str, base_seed: int, index: int, variant: str = "",
                max_degree: int = MAX_DEGREE, **params) -> TestFunctionSpec:
    seed = sample_seed(base_seed, index)
    degree = mix64(seed ^ 0x5DEECE66D) % (max_degree + 1)
    return TestFunctionSpec(family, seed, degree, variant, **params)


def _rng(seed: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed & MASK64, stream])


def random_zeros(rng: np.random.Generator, degree: int) -> np.ndarray:
    """Zeros uniform in the disk of radius 0.95."""
    rad = ZERO_RADIUS * np.sqrt(rng.uniform(size=degree))
    ang = rng.uniform(0.0, 2.0 * math.pi, size=degree)
    return rad * np.exp(1j * ang)


def random_rotation(rng: np.random.Generator) -> complex:
    return complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))


def random_blaschke(rng: np.random.Generator, degree: int, order: int) -> PowerSeries:
    zeros = random_zeros(rng, degree)
    return S.blaschke(zeros, random_rotation(rng), order)


def subordinate(g: PowerSeries, omega: PowerSeries) -> PowerSeries:
    """f = g o omega."""
    return S.compose(g, omega)


def quasi_subordinate(W: PowerSeries, g: PowerSeries, omega: PowerSeries) -> PowerSeries:
    """f = W * (g o omega)."""
    return S.cauchy_product(W, S.compose(g, omega))


def substitute_power(f: PowerSeries, m: int, order: int) -> PowerSeries:
    """f(z^m), truncated to ``order``."""
    c = np.zeros(order + 1, dtype=complex)
    n = min(f.order, order // m)
    c[: m * n + 1: m] = f.coeffs[: n + 1]
    tags = f.tags & {S.BOUNDED}
    if f.polynomial and m * f.order <= order:
        tags |= {S.POLYNOMIAL}
    if f.coeffs[0] == 0 and S.BOUNDED in tags:
        tags |= {S.SCHWARZ}
    return PowerSeries(c, tags)


def _identity(order: int) -> PowerSeries:
    return PowerSeries([0.0, 1.0], {S.SCHWARZ, S.POLYNOMIAL}).padded(order)


def _one(order: int) -> PowerSeries:
    return PowerSeries([1.0], {S.BOUNDED, S.POLYNOMIAL}).padded(order)


def _mobius_rotated(rng: np.random.Generator, order: int) -> PowerSeries:
    a = float(rng.uniform(0.0, 1.0))
    return S.scale(S.mobius(a, order), random_rotation(rng))


def _omega(rng: np.random.Generator, degree: int, order: int) -> PowerSeries:
    """z * (Blaschke of degree <= degree)."""
    d = int(rng.integers(0, degree + 1))
    return S.shift(random_blaschke(rng, d, order - 1))


def gen(spec: TestFunctionSpec, order: int = S.DEFAULT_ORDER) -> tuple[PowerSeries, ...]:
    """Series for ``spec``.

    blaschke, mobius, schwarz -> (f,)
    subordinate_pair          -> (f, g, omega) with f = g o omega
    quasi_sub_triple          -> (f, g, W, omega) with f = W (g o omega)
    harmonic_pair             -> (h, g) with Re h <= 1, h(0) = a0 > 0, |g'| <= k |h'|
    odd_pair                  -> (f, g), g odd and f = t(z^2) g with t in B
    """
    if order < 64:
        raise DomainError("order must be >= 64")
    rng = _rng(spec.seed)
    fam, var, d = spec.family, spec.variant, spec.degree

    if fam == "blaschke":
        f = random_blaschke(rng, d, order)
        if var == "scaled":
            f = S.scale(f, float(rng.uniform(0.0, 1.0)))
        return (f,)

    if fam == "mobius":
        a = spec.a0 if spec.a0 is not None else float(rng.uniform(0.0, 1.0))
        if var == "zero":
            a = 0.0
        return (S.mobius(a, order),)

    if fam == "schwarz":
        if var == "mobius":
            a = spec.a0 if spec.a0 is not None else float(rng.uniform(0.0, 1.0))
            inner = S.mobius(a, order - 1)
        elif var == "scaled":
            inner = S.scale(random_blaschke(rng, d, order - 1), float(rng.uniform(0.0, 1.0)))
        else:
            inner = random_blaschke(rng, d, order - 1)
        return (S.shift(inner),)

    if fam == "subordinate_pair":
        if var == "mobius":
            g = _mobius_rotated(rng, order)
        elif var == "schwarz":
            g = S.shift(random_blaschke(rng, d, order - 1))
        else:
            g = random_blaschke(rng, d, order)
        omega = _identity(order) if var == "identity" else _omega(rng, d, order)
        return (subordinate(g, omega), g, omega)

    if fam == "quasi_sub_triple":
        if var == "identity":
            g = random_blaschke(rng, d, order)
            W, omega = _one(order), _identity(order)
        elif var.startswith("schwarz"):
            # majorization f = W g with g(0) = 0
            g = S.shift(random_blaschke(rng, d, order - 1))
            omega = _identity(order)
            if var == "schwarz_z":
                W = _identity(order)
            elif var == "schwarz_mobius":
                W = _mobius_rotated(rng, order)
            else:
                W = random_blaschke(rng, int(rng.integers(0, d + 1)), order)
        else:
            g = random_blaschke(rng, d, order)
            W = random_blaschke(rng, int(rng.integers(0, d + 1)), order)
            if var != "majorization":
                W = S.scale(W, float(rng.uniform(0.0, 1.0)))
            omega = _identity(order) if var == "majorization" else _omega(rng, d, order)
            if var == "subordination":
                W = _one(order)
        return (quasi_subordinate(W, g, omega), g, W, omega)

    if fam == "harmonic_pair":
        return _harmonic_pair(spec, rng, order)

    if fam == "odd_pair":
        B = random_blaschke(rng, d, order)
        g = S.shift(substitute_power(B, 2, order - 1))
        if var == "identity":
            t = _one(order)
        elif var == "mobius":
            t = _mobius_rotated(rng, order)
        else:
            t = random_blaschke(rng, int(rng.integers(0, 3)), order)
        f = S.cauchy_product(substitute_power(t, 2, order), g)
        return (f, g)

    raise DomainError(f"unknown family {fam!r}")


def _harmonic_pair(spec: TestFunctionSpec, rng: np.random.Generator,
                   order: int) -> tuple[PowerSeries, PowerSeries]:
    a0 = spec.a0 if spec.a0 is not None else float(rng.uniform(0.01, 0.99))
    k = spec.k if spec.k is not None else 0.0
    extremal = spec.variant == "extremal"
    # p = (1 - a0)(1 + u)/(1 - u) with u = z b(z) has Re p > 0 and p(0) = 1 - a0
    b = random_blaschke(rng, 0 if extremal else spec.degree, order - 1)
    u = S.shift(b)
    one = _one(order)
    num = S.add(one, u)
    den = S.add(one, S.scale(u, -1.0))
    p = S.divide(num, den)
    # h = 1 - (1 - a0) p, written so that h(0) = a0 exactly
    h = PowerSeries(np.concatenate([[complex(a0, 0.0)], -(1.0 - a0) * p.coeffs[1:]]), ())
    if k == 0.0 or spec.variant == "analytic":
        return h, PowerSeries([0.0], {S.POLYNOMIAL})
    s_deg = 0 if extremal else int(rng.integers(0, 3))
    s = random_blaschke(rng, s_deg, order - 1)
    gprime = S.scale(S.cauchy_product(s, S.derivative(h)), k)
    g = S.integrate(PowerSeries(gprime.coeffs, ()))
    return h, g
