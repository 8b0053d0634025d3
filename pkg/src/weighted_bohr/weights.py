"""Weight sequences phi = {phi_k(r)} and their tail sums Phi_N(r).

Every built-in kind has the shape ``phi_k(r) = c_k * r**k`` with a nonnegative
coefficient sequence ``c_k``:

* ``geometric``:               c_k = 1
* ``power(alpha)``:            c_k = (k + 1)**alpha   (so c_0 = 1)
* ``truncated_geometric(n)``:  c_k = 1 for k <= n, 0 afterwards
* ``custom(b, growth_cap)``:   c_k = b_k on the supplied prefix and
  ``growth_cap * (k + 1)**cap_power`` beyond it

Tail sums come with a rigorous error bound; closed forms are used when they
exist and a geometric-comparison summation otherwise.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import CapabilityError, DomainError

EPS = sys.float_info.epsilon
SUM_RTOL = 1e-15
MAX_TERMS = 1_000_000

KINDS = ("geometric", "power", "truncated_geometric", "custom")


class TailSum(NamedTuple):
    value: float
    error: float


@dataclass(frozen=True)
class WeightSequence:
    kind: str
    alpha: float = 0.0
    n: int = 0
    b: tuple[float, ...] = ()
    growth_cap: float | None = None
    cap_power: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown weight kind {self.kind!r}")
        if self.kind == "power" and not math.isfinite(self.alpha):
            raise DomainError("alpha must be finite")
        if self.kind == "truncated_geometric" and self.n < 1:
            raise DomainError("truncated_geometric needs n >= 1")
        if self.kind == "custom":
            object.__setattr__(self, "b", tuple(float(x) for x in self.b))
            if not self.b:
                raise DomainError("custom weights need a nonempty prefix b")
            if any(not math.isfinite(x) or x < 0 for x in self.b):
                raise DomainError("custom prefix entries must be finite and >= 0")
            cap = self.growth_cap
            if cap is not None and (not math.isfinite(cap) or cap < 0):
                raise DomainError("growth_cap must be finite and >= 0")
            if not math.isfinite(self.cap_power):
                raise DomainError("cap_power must be finite")

    # constructors -----------------------------------------------------

    @classmethod
    def geometric(cls) -> "WeightSequence":
        return cls("geometric")

    @classmethod
    def power(cls, alpha: float) -> "WeightSequence":
        return cls("power", alpha=float(alpha))

    @classmethod
    def truncated_geometric(cls, n: int) -> "WeightSequence":
        return cls("truncated_geometric", n=int(n))

    @classmethod
    def custom(cls, b: Sequence[float], growth_cap: float | None = 0.0,
               cap_power: float = 0.0) -> "WeightSequence":
        return cls("custom", b=tuple(b), growth_cap=growth_cap, cap_power=float(cap_power))

    # descriptors ------------------------------------------------------

    @property
    def label(self) -> str:
        if self.kind == "power":
            return f"power(alpha={self.alpha:g})"
        if self.kind == "truncated_geometric":
            return f"truncated_geometric(n={self.n})"
        if self.kind == "custom":
            return f"custom(len={len(self.b)}, growth_cap={self.growth_cap})"
        return self.kind

    @property
    def phi0_is_one(self) -> bool:
        return self.kind != "custom" or self.b[0] == 1.0

    def to_dict(self) -> dict:
        if self.kind == "power":
            return {"kind": "power", "alpha": self.alpha}
        if self.kind == "truncated_geometric":
            return {"kind": "truncated_geometric", "n": self.n}
        if self.kind == "custom":
            d = {"kind": "custom", "b": list(self.b), "growth_cap": self.growth_cap}
            if self.cap_power:
                d["cap_power"] = self.cap_power
            return d
        return {"kind": "geometric"}

    @classmethod
    def from_dict(cls, d: dict) -> "WeightSequence":
        kind = d.get("kind")
        if kind == "geometric":
            return cls.geometric()
        if kind == "power":
            return cls.power(d["alpha"])
        if kind == "truncated_geometric":
            return cls.truncated_geometric(d["n"])
        if kind == "custom":
            return cls.custom(d["b"], d.get("growth_cap"), d.get("cap_power", 0.0))
        raise DomainError(f"unknown weight kind {kind!r}")

    # coefficients -----------------------------------------------------

    def coefficient(self, k: int) -> float:
        """c_k in phi_k(r) = c_k r^k."""
        if k < 0:
            raise DomainError("index must be >= 0")
        if self.kind == "geometric":
            return 1.0
        if self.kind == "power":
            return float(k + 1) ** self.alpha
        if self.kind == "truncated_geometric":
            return 1.0 if k <= self.n else 0.0
        if k < len(self.b):
            return self.b[k]
        if self.growth_cap is None:
            raise CapabilityError("custom weight has no growth cap beyond its prefix")
        return self.growth_cap * float(k + 1) ** self.cap_power

    def coefficients(self, count: int) -> np.ndarray:
        k = np.arange(count, dtype=float)
        if self.kind == "geometric":
            return np.ones(count)
        if self.kind == "power":
            return (k + 1.0) ** self.alpha
        if self.kind == "truncated_geometric":
            return (k <= self.n).astype(float)
        out = np.empty(count)
        m = min(count, len(self.b))
        out[:m] = self.b[:m]
        if count > m:
            if self.growth_cap is None:
                raise CapabilityError("custom weight has no growth cap beyond its prefix")
            out[m:] = self.growth_cap * (k[m:] + 1.0) ** self.cap_power
        return out

    def derivative_weights(self) -> "WeightSequence":
        """The sequence (k + 1) * phi_k, as needed for majorants of f'."""
        if self.kind == "geometric":
            return WeightSequence.power(1.0)
        if self.kind == "power":
            return WeightSequence.power(self.alpha + 1.0)
        if self.kind == "truncated_geometric":
            return WeightSequence.custom([k + 1.0 for k in range(self.n + 1)], 0.0)
        return WeightSequence.custom([(k + 1.0) * x for k, x in enumerate(self.b)],
                                     self.growth_cap, self.cap_power + 1.0)


def _check_r(r: float) -> float:
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"r must lie in [0, 1), got {r!r}")
    return r


def weight_at(w: WeightSequence, k: int, r: float) -> float:
    r = _check_r(r)
    c = w.coefficient(k)
    return 0.0 if c == 0.0 else c * r ** k


def weights_array(w: WeightSequence, r: float, count: int) -> np.ndarray:
    """phi_0(r), ..., phi_{count-1}(r)."""
    r = _check_r(r)
    return w.coefficients(count) * r ** np.arange(count, dtype=float)


def sum_power_terms(a: float, start: int, r: float, step: int = 1) -> TailSum:
    """Sum of (k+1)**a * r**k over k = start, start+step, ...

    Terms are accumulated until the geometric-comparison bound on the rest
    (next term / (1 - ratio bound)) drops below 1e-15 of the running sum.
    """
    r = _check_r(r)
    if r == 0.0:
        return TailSum(1.0 if start == 0 else 0.0, 0.0)
    terms = []
    acc = 0.0
    k = start
    for _ in range(MAX_TERMS):
        t = float(k + 1) ** a * r ** k
        terms.append(t)
        acc += t
        nxt = k + step
        t_next = float(nxt + 1) ** a * r ** nxt
        if t_next == 0.0:
            value = math.fsum(terms)
            return TailSum(value, 2 * EPS * value + 1e-300)
        # ratio t_{m+step}/t_m is nonincreasing in m when a >= 0
        rho = r ** step * (((nxt + 1 + step) / (nxt + 1)) ** a if a > 0 else 1.0)
        if rho < 1.0:
            rest = t_next / (1.0 - rho)
            if rest <= SUM_RTOL * acc:
                value = math.fsum(terms)
                return TailSum(value, rest + 2 * EPS * value)
        k = nxt
    raise CapabilityError(f"tail sum did not converge within {MAX_TERMS} terms")


def power_tail(a: float, N: int, r: float) -> TailSum:
    """sum_{k >= N} (k+1)**a r**k with closed forms for a in {0, 1, 2}."""
    r = _check_r(r)
    if a in (0.0, 1.0, 2.0):
        q = 1.0 - r
        rn = r ** N
        if a == 0.0:
            v = rn / q
        elif a == 1.0:
            v = rn * (1.0 / q ** 2 + N / q)
        else:
            v = rn * ((1.0 + r) / q ** 3 + 2.0 * N / q ** 2 + float(N) ** 2 / q)
        return TailSum(v, 8 * EPS * v)
    return sum_power_terms(a, N, r)


def tail_sum(w: WeightSequence, N: int, r: float) -> TailSum:
    """Phi_N(r) = sum_{k >= N} phi_k(r) with an absolute error bound."""
    r = _check_r(r)
    if N < 0:
        raise DomainError("N must be >= 0")
    if w.kind == "geometric":
        return power_tail(0.0, N, r)
    if w.kind == "power":
        return power_tail(w.alpha, N, r)
    if w.kind == "truncated_geometric":
        if N > w.n:
            return TailSum(0.0, 0.0)
        v = math.fsum(r ** k for k in range(N, w.n + 1))
        return TailSum(v, 2 * EPS * v)
    L = len(w.b)
    if w.growth_cap is None:
        raise CapabilityError("custom weight without a growth cap has no summable tail")
    head = math.fsum(w.b[k] * r ** k for k in range(N, L))
    if w.growth_cap == 0.0:
        return TailSum(head, 2 * EPS * head)
    rest = power_tail(w.cap_power, max(N, L), r)
    v = head + w.growth_cap * rest.value
    return TailSum(v, w.growth_cap * rest.error + 4 * EPS * v)


def tails_array(w: WeightSequence, r: float, count: int) -> np.ndarray:
    """Phi_0(r), ..., Phi_count(r) (length count + 1).

    Built from the closed tail Phi_count plus reversed partial sums.
    """
    phi = weights_array(w, r, count)
    last = tail_sum(w, count, r).value
    out = np.empty(count + 1)
    out[count] = last
    out[:count] = last + np.cumsum(phi[::-1])[::-1]
    return out


def even_tail_sum(w: WeightSequence, r: float) -> TailSum:
    """sum_{n >= 1} phi_{2n}(r)."""
    r = _check_r(r)
    if w.kind == "geometric":
        v = r * r / (1.0 - r * r)
        return TailSum(v, 8 * EPS * v)
    if w.kind == "power":
        return sum_power_terms(w.alpha, 2, r, step=2)
    if w.kind == "truncated_geometric":
        v = math.fsum(r ** k for k in range(2, w.n + 1, 2))
        return TailSum(v, 2 * EPS * v)
    if w.growth_cap is None:
        raise CapabilityError("custom weight without a growth cap has no summable tail")
    L = len(w.b)
    head = math.fsum(w.b[k] * r ** k for k in range(2, L, 2))
    if w.growth_cap == 0.0:
        return TailSum(head, 2 * EPS * head)
    first = L if L % 2 == 0 else L + 1
    rest = sum_power_terms(w.cap_power, first, r, step=2)
    v = head + w.growth_cap * rest.value
    return TailSum(v, w.growth_cap * rest.error + 4 * EPS * v)


@dataclass
class WeightCheck:
    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_submultiplicative(w: WeightSequence, r_grid: Iterable[float],
                            max_index: int) -> WeightCheck:
    """phi_{m+n}(r) <= phi_m(r) phi_n(r) + 1e-15 for m, n <= max_index."""
    violations = []
    idx = np.arange(max_index + 1)
    for r in r_grid:
        phi = weights_array(w, r, 2 * max_index + 1)
        lhs = phi[idx[:, None] + idx[None, :]]
        rhs = np.outer(phi[: max_index + 1], phi[: max_index + 1])
        for m, n in zip(*np.nonzero(lhs > rhs + 1e-15)):
            violations.append((int(m), int(n), float(r), float(lhs[m, n]), float(rhs[m, n])))
    return WeightCheck(not violations, violations)


def check_decreasing(w: WeightSequence, r_grid: Iterable[float], max_index: int) -> WeightCheck:
    """phi_{k+1}(r) <= phi_k(r) + 1e-15 for 1 <= k < max_index (phi_0 excluded)."""
    violations = []
    for r in r_grid:
        phi = weights_array(w, r, max_index + 1)
        for k in range(1, max_index):
            if phi[k + 1] > phi[k] + 1e-15:
                violations.append((k, float(r), float(phi[k]), float(phi[k + 1])))
    return WeightCheck(not violations, violations)
