"""Seeded fuzzing and sharpness probes for the weighted Bohr inequalities.

Each check samples test functions from :mod:`families`, evaluates both sides
of an inequality on a radius grid and aggregates the worst residual

    residual = lhs.value + lhs.tail_bound - rhs.value

which over-estimates lhs - rhs, so a clean run certifies the inequality on
the grid.  A residual above the threshold is only reported as a violation if
it survives a recomputation at twice the truncation order with the opposite
rounding of the tails (lhs.value > rhs.value + rhs.tail_bound + threshold);
otherwise the tail bounds were too coarse and the run raises ToolingError.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import functionals as F
from . import radii
from . import series as S
from .errors import BohrError, NoRadiusError, PreconditionError, ToolingError
from .families import TestFunctionSpec, gen, sample_spec
from .functionals import FunctionalValue, QuadraticWeight
from .series import PowerSeries
from .weights import WeightSequence, check_submultiplicative, tail_sum, weights_array

THRESHOLD = 1e-9
CARLSON_THRESHOLD = 1e-12
WITNESS_MARGIN = 1e-12
GRID_POINTS = 64
RECHECK_ORDER = 512
SHARPNESS_A = (0.9, 0.99, 0.999, 0.9999)
BOMBIERI_INTERVAL = (1.0 / 3.0, 0.95)
ROGOSINSKI_N = 32
CARLSON_N = 127
MAX_RECORDED = 20

GEOMETRIC = WeightSequence.geometric()


@dataclass
class VerificationReport:
    check: str
    samples: int
    grid: list
    max_residual: float
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    seed: int | None = None
    order: int = S.DEFAULT_ORDER
    status: str = "pass"
    reason: str = ""
    families: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    threshold: float = THRESHOLD

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "witness")

    def to_dict(self) -> dict:
        return {
            "check": self.check, "samples": self.samples, "grid": list(self.grid),
            "max_residual": self.max_residual, "violations": self.violations,
            "witnesses": self.witnesses, "seed": self.seed, "order": self.order,
            "status": self.status, "reason": self.reason, "families": self.families,
            "params": self.params, "threshold": self.threshold,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def summary(self) -> str:
        if self.status == "skipped":
            return f"{self.check}: skipped ({self.reason})"
        text = (f"{self.check}: {self.status}, {self.samples} samples, "
                f"{len(self.violations)} violation(s), max residual {self.max_residual:.3e}")
        if self.witnesses or self.status == "no-witness":
            text += f", {len(self.witnesses)} witness(es)"
        return text


def skipped(check: str, reason: str, params: dict, seed=None) -> VerificationReport:
    return VerificationReport(check, 0, [], -math.inf, seed=seed, status="skipped",
                              reason=reason, params=params)


def radius_grid(hi: float, lo: float = 0.0, points: int = GRID_POINTS) -> np.ndarray:
    return np.linspace(lo, hi, points)


def _fv(value, tail=0.0) -> FunctionalValue:
    value = np.asarray(value, dtype=float)
    return FunctionalValue(value, np.broadcast_to(np.asarray(tail, dtype=float), value.shape))


def _plus(a: FunctionalValue, b: FunctionalValue, scale=1.0) -> FunctionalValue:
    return FunctionalValue(a.value + scale * b.value, a.tail_bound + scale * b.tail_bound)


# Evaluator: (spec, order, grid) -> (lhs, rhs); both FunctionalValue arrays
Evaluator = Callable[[TestFunctionSpec, int, np.ndarray], tuple]


def run_fuzz(check: str, evaluate: Evaluator, plan: Sequence[tuple[str, str]],
             samples: int, base_seed: int, grid: np.ndarray, params: dict,
             order: int = S.DEFAULT_ORDER, threshold: float = THRESHOLD,
             spec_params: dict | None = None,
             extra: Callable[[TestFunctionSpec, tuple], list] | None = None) -> VerificationReport:
    """Sample ``samples`` specs round-robin over ``plan`` = [(family, variant)].

    Samples are evaluated in index order and merged by index, so the report
    depends only on (base_seed, samples, plan).
    """
    spec_params = spec_params or {}
    worst = -math.inf
    violations = []
    for i in range(samples):
        family, variant = plan[i % len(plan)]
        spec = sample_spec(family, base_seed, i, variant, **spec_params)
        lhs, rhs = evaluate(spec, order, grid)
        res = lhs.value + lhs.tail_bound - rhs.value
        j = int(np.argmax(res))
        worst = max(worst, float(res[j]))
        bad = np.nonzero(res > threshold)[0]
        if bad.size:
            hi_l, hi_r = evaluate(spec, RECHECK_ORDER, grid)
            for jj in bad:
                if not hi_l.value[jj] > hi_r.value[jj] + hi_r.tail_bound[jj] + threshold:
                    raise ToolingError(
                        f"{check}: residual {res[jj]:.3e} at r={grid[jj]:.6g} for {spec.to_dict()} "
                        f"does not survive recomputation at order {RECHECK_ORDER}")
                if len(violations) < MAX_RECORDED:
                    violations.append({"spec": spec.to_dict(), "r": float(grid[jj]),
                                       "lhs": float(hi_l.value[jj]), "rhs": float(hi_r.upper[jj])})
        if extra is not None:
            for v in extra(spec, (lhs, rhs)):
                worst = max(worst, v["residual"])
                if v["residual"] > threshold and len(violations) < MAX_RECORDED:
                    violations.append(v)
    status = "violation" if worst > threshold else "pass"
    if status == "violation" and not violations:  # pragma: no cover - guarded above
        raise ToolingError(f"{check}: residual above threshold without a recorded violation")
    return VerificationReport(check, samples, [float(r) for r in grid], worst, violations,
                              seed=base_seed, order=order, status=status,
                              families=sorted({f for f, _ in plan}), params=params,
                              threshold=threshold)


def _pair(spec: TestFunctionSpec, order: int) -> tuple[PowerSeries, PowerSeries]:
    """(f, g) from any family; single-series families give the trivial pair f = g."""
    out = gen(spec, order)
    if len(out) == 1:
        return out[0], out[0]
    return out[0], out[1]


def _phi0(w: WeightSequence, grid: np.ndarray) -> np.ndarray:
    return np.array([weights_array(w, r, 1)[0] for r in grid])


def _submultiplicative_reason(w: WeightSequence, R: float) -> str:
    if not w.phi0_is_one:
        return "phi_0 is not identically 1"
    check = check_submultiplicative(w, radius_grid(R), 32)
    if not check:
        m, n, r = check.violations[0][:3]
        return f"phi_{{m+n}} > phi_m phi_n at m={m}, n={n}, r={r:.6g}"
    return ""


def _majorant_radius(w: WeightSequence) -> float:
    """R with 1 = 2 Phi_1(R); with phi_0 = 1 this is the p = 1 general radius."""
    return radii.solve(radii.general_problem(w, 1.0))


# inequality checks -----------------------------------------------------

def check_theorem1(w: WeightSequence, p: float, samples: int = 1000, base_seed: int = 0,
                   order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """|a_0|^p phi_0 + B_1 + A(f_0) <= phi_0 on [0, R] for f in B."""
    params = {"weights": w.to_dict(), "p": p}
    try:
        R = radii.radius_general(w, p)
    except NoRadiusError as exc:
        if not exc.holds_everywhere:
            return skipped("theorem1", str(exc), params, base_seed)
        # the radius condition never fails, so the bound is claimed on the whole disk
        R = radii.X_MAX
        params["holds_everywhere"] = True
    grid = radius_grid(R)
    phi0 = _phi0(w, grid)
    params["R"] = R

    def evaluate(spec, order, grid):
        f = gen(spec, order)[0]
        return F.refined_functional(f, w, p, grid), _fv(phi0)

    plan = [("blaschke", ""), ("blaschke", "scaled"), ("mobius", ""), ("schwarz", ""),
            ("subordinate_pair", ""), ("quasi_sub_triple", ""), ("odd_pair", "")]
    return run_fuzz("theorem1", evaluate, plan, samples, base_seed, grid, params, order)


def probe_sharpness(w: WeightSequence, p: float, eps: float = 0.05,
                    order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """Search (a, r) with r in (R, R + eps] where the Mobius family breaks the bound."""
    params = {"weights": w.to_dict(), "p": p, "eps": eps}
    if not eps > 0:
        raise PreconditionError("eps must be positive")
    try:
        R = radii.radius_general(w, p)
    except NoRadiusError as exc:
        return skipped("sharpness", str(exc), params)
    if R + eps >= 1.0:
        raise PreconditionError("R + eps must stay below 1")
    params["R"] = R
    grid = np.linspace(R, R + eps, GRID_POINTS + 1)[1:]
    phi0 = _phi0(w, grid)
    witnesses, best = [], -math.inf
    for a in SHARPNESS_A:
        fv = F.refined_functional(S.mobius(a, order), w, p, grid)
        margin = fv.value - fv.tail_bound - phi0
        best = max(best, float(margin.max()))
        hits = np.nonzero(margin > WITNESS_MARGIN)[0]
        if hits.size:
            j = int(hits[0])
            witnesses.append({"a": a, "r": float(grid[j]), "value": float(fv.value[j]),
                              "phi0": float(phi0[j])})
    return VerificationReport("sharpness", len(SHARPNESS_A), [float(r) for r in grid], best,
                              witnesses=witnesses, order=order,
                              status="witness" if witnesses else "no-witness",
                              families=["mobius"], params=params, threshold=WITNESS_MARGIN)


QUASI_PLAN = [("quasi_sub_triple", ""), ("quasi_sub_triple", "majorization"),
              ("quasi_sub_triple", "subordination"), ("quasi_sub_triple", "schwarz_z"),
              ("subordinate_pair", ""), ("subordinate_pair", "mobius"), ("odd_pair", ""),
              ("blaschke", "")]


def check_quasi_majorant(w: WeightSequence, samples: int = 1000, seed: int = 0,
                         order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """sum |a_k| phi_k <= sum |b_k| phi_k on [0, R] for f = W (g o omega)."""
    params = {"weights": w.to_dict()}
    try:
        R = _majorant_radius(w)
    except NoRadiusError as exc:
        return skipped("quasi_majorant", str(exc), params, seed)
    reason = _submultiplicative_reason(w, R)
    if reason:
        return skipped("quasi_majorant", reason, params, seed)
    params["R"] = R
    grid = radius_grid(R)

    def evaluate(spec, order, grid):
        f, g = _pair(spec, order)
        return F.majorant(f, w, 0, grid), F.majorant(g, w, 0, grid)

    return run_fuzz("quasi_majorant", evaluate, QUASI_PLAN, samples, seed, grid, params, order)


SUBORDINATE_PLAN = [("subordinate_pair", ""), ("subordinate_pair", "mobius"),
                    ("subordinate_pair", "schwarz"), ("quasi_sub_triple", "subordination"),
                    ("quasi_sub_triple", "identity"), ("blaschke", "")]


def _lambda(mode, w: WeightSequence, f: PowerSeries, grid: np.ndarray) -> np.ndarray:
    if mode == "carlson":
        # 1/(1 + |a_0|) + Phi_1(r), with a_0 taken from f
        tails = np.array([sum(tail_sum(w, 1, r)) for r in grid])
        return 1.0 / (1.0 + abs(f.coeffs[0])) + tails
    return np.full(grid.shape, float(mode))


def _below(r_psi: float, hi: float) -> float:
    return hi if hi < r_psi else float(np.nextafter(r_psi, 0.0))


def check_weighted_quasi(w: WeightSequence, psi: QuadraticWeight, lam="carlson",
                         samples: int = 1000, seed: int = 0,
                         order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """B_0(f) + lam sum |a_k|^2 psi_k <= B_0(g) + lam sum |b_k|^2 psi_k, r <= min{R, r_psi}.

    ``lam`` is "carlson" or a nonnegative constant.
    """
    params = {"weights": w.to_dict(), "psi": psi.kind, "lambda": lam}
    if lam != "carlson" and not float(lam) >= 0:
        raise PreconditionError("lambda must be 'carlson' or a nonnegative constant")
    try:
        R = _majorant_radius(w)
    except NoRadiusError as exc:
        return skipped("weighted_quasi", str(exc), params, seed)
    reason = _submultiplicative_reason(w, R)
    if reason:
        return skipped("weighted_quasi", reason, params, seed)
    hi = _below(psi.r_psi, R)
    params["R"] = hi
    grid = radius_grid(hi)

    def evaluate(spec, order, grid):
        f, g = _pair(spec, order)
        lam_r = _lambda(lam, w, f, grid)
        lhs = _plus(F.majorant(f, w, 0, grid), F.quadratic_weighted_sum(f, psi, grid), lam_r)
        rhs = _plus(F.majorant(g, w, 0, grid), F.quadratic_weighted_sum(g, psi, grid), lam_r)
        return lhs, rhs

    return run_fuzz("weighted_quasi", evaluate, SUBORDINATE_PLAN, samples, seed, grid,
                    params, order)


def rogosinski_residuals(f: PowerSeries, g: PowerSeries, n_max: int = ROGOSINSKI_N) -> np.ndarray:
    """A_n - B_n for n = 1..n_max with A_n = sum_{k=1}^n |a_k|^2."""
    n_max = min(n_max, *(s.order for s in (f, g) if not s.polynomial), n_max)
    f, g = (s.padded(n_max) if s.polynomial else s for s in (f, g))
    A = np.cumsum(np.abs(f.coeffs[1: n_max + 1]) ** 2)
    B = np.cumsum(np.abs(g.coeffs[1: n_max + 1]) ** 2)
    return A - B


def check_goluzin(psi: QuadraticWeight, samples: int = 1000, seed: int = 0,
                  order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """sum |a_k|^2 psi_k <= sum |b_k|^2 psi_k on [0, r_psi) for f subordinate to g,
    together with the partial sums A_n <= B_n for n <= 32."""
    hi = _below(psi.r_psi, BOMBIERI_INTERVAL[1])
    grid = radius_grid(hi)
    params = {"psi": psi.kind, "r_max": hi}

    def evaluate(spec, order, grid):
        f, g = _pair(spec, order)
        return F.quadratic_weighted_sum(f, psi, grid), F.quadratic_weighted_sum(g, psi, grid)

    def rogosinski(spec, _):
        f, g = _pair(spec, order)
        res = rogosinski_residuals(f, g)
        n = int(np.argmax(res))
        return [{"spec": spec.to_dict(), "n": n + 1, "residual": float(res[n]),
                 "kind": "rogosinski"}]

    return run_fuzz("goluzin", evaluate, SUBORDINATE_PLAN, samples, seed, grid, params, order,
                    extra=rogosinski)


def check_harmonic(w: WeightSequence, p: float, K: float, samples: int = 1000, seed: int = 0,
                   order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """a_0^p + sum_{n>=1} (|a_n| + |b_n|) phi_n <= 1 for sense-preserving K-qc h + conj(g)."""
    k = radii.k_from_K(K)
    params = {"weights": w.to_dict(), "p": p, "K": K, "k": k}
    try:
        R = radii.radius_harmonic(w, p, k)
    except (NoRadiusError, PreconditionError) as exc:
        return skipped("harmonic", str(exc), params, seed)
    params["R"] = R
    grid = radius_grid(R)
    one = np.ones_like(grid)

    def evaluate(spec, order, grid):
        h, g = gen(spec, order)
        return F.harmonic_functional(h, g, w, p, grid, k), _fv(one)

    plan = [("harmonic_pair", ""), ("harmonic_pair", "extremal"), ("harmonic_pair", "analytic")]
    return run_fuzz("harmonic", evaluate, plan, samples, seed, grid, params, order,
                    spec_params={"k": k})


SCHWARZ_PLAN = [("schwarz", ""), ("schwarz", "mobius"), ("schwarz", "scaled"),
                ("subordinate_pair", "schwarz"), ("quasi_sub_triple", "schwarz"),
                ("odd_pair", "")]


def _schwarz_member(spec: TestFunctionSpec, order: int) -> PowerSeries:
    out = gen(spec, order)
    # odd pairs: g = z B(z^2) is the Schwarz function; elsewhere f is
    return out[1] if spec.family == "odd_pair" else out[0]


def check_derivative_bohr(w: WeightSequence, samples: int = 1000, seed: int = 0,
                          eps: float = 0.05, order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """B_{f'}(phi, r) <= phi_0(r) on [0, R_0] for Schwarz f, plus a sharpness probe
    with z (a - z)/(1 - a z) on (R_0, R_0 + eps]."""
    params = {"weights": w.to_dict(), "eps": eps}
    try:
        R0 = radii.radius_schwarz_derivative(w)
    except NoRadiusError as exc:
        return skipped("derivative_bohr", str(exc), params, seed)
    params["R0"] = R0
    grid = radius_grid(R0)
    phi0 = _phi0(w, grid)

    def evaluate(spec, order, grid):
        return F.derivative_majorant(_schwarz_member(spec, order), w, grid), _fv(phi0)

    report = run_fuzz("derivative_bohr", evaluate, SCHWARZ_PLAN, samples, seed, grid, params,
                      order)
    report.witnesses = derivative_witnesses(w, R0, eps, order)
    if report.status == "pass" and not report.witnesses:
        report.status = "no-witness"
    return report


def derivative_witnesses(w: WeightSequence, R0: float, eps: float,
                         order: int = S.DEFAULT_ORDER) -> list:
    if R0 + eps >= 1.0:
        return []
    grid = np.linspace(R0, R0 + eps, GRID_POINTS + 1)[1:]
    phi0 = _phi0(w, grid)
    out = []
    for a in SHARPNESS_A:
        fv = F.derivative_majorant(S.shift(S.mobius(a, order - 1)), w, grid)
        hits = np.nonzero(fv.value - fv.tail_bound - phi0 > WITNESS_MARGIN)[0]
        if hits.size:
            j = int(hits[0])
            out.append({"a": a, "r": float(grid[j]), "value": float(fv.value[j]),
                        "phi0": float(phi0[j])})
    return out


MODULUS_PLAN = [("quasi_sub_triple", "schwarz"), ("quasi_sub_triple", "schwarz_z"),
                ("quasi_sub_triple", "schwarz_mobius"), ("odd_pair", ""), ("schwarz", "")]


def check_derivative_majorization(w: WeightSequence, mode: str = "subordination",
                                  samples: int = 1000, seed: int = 0,
                                  order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """B_{f'} <= B_{g'} for f subordinate to g on [0, min{R, R_0}] (mode "subordination")
    or for f = h g with h in B, g(0) = 0 on [0, R_0] (mode "modulus")."""
    if mode not in ("subordination", "modulus"):
        raise PreconditionError("mode must be 'subordination' or 'modulus'")
    name = f"derivative_majorization_{mode}"
    params = {"weights": w.to_dict(), "mode": mode}
    try:
        R = _majorant_radius(w)
        R0 = radii.radius_schwarz_derivative(w)
    except NoRadiusError as exc:
        return skipped(name, str(exc), params, seed)
    reason = _submultiplicative_reason(w, R)
    if reason:
        return skipped(name, reason, params, seed)
    hi = min(R, R0) if mode == "subordination" else R0
    params.update(R=R, R0=R0)
    grid = radius_grid(hi)

    def evaluate(spec, order, grid):
        f, g = _pair(spec, order)
        lhs = F.derivative_majorant_unchecked(f, w, grid, F.coefficient_bound(f))
        rhs = F.derivative_majorant_unchecked(g, w, grid, F.coefficient_bound(g))
        return lhs, rhs

    plan = SUBORDINATE_PLAN if mode == "subordination" else MODULUS_PLAN
    return run_fuzz(name, evaluate, plan, samples, seed, grid, params, order)


def check_odd_majorant(w: WeightSequence, samples: int = 1000, seed: int = 0,
                       order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """B_f <= B_g on [0, R] for odd f, g with |f| <= |g|, where 1 = 2 sum phi_{2n}(R)."""
    params = {"weights": w.to_dict()}
    try:
        R = radii.radius_odd(w)
        reason = _submultiplicative_reason(w, _majorant_radius(w))
    except NoRadiusError as exc:
        return skipped("odd_majorant", str(exc), params, seed)
    if reason:
        return skipped("odd_majorant", reason, params, seed)
    params["R"] = R
    grid = radius_grid(R)

    def evaluate(spec, order, grid):
        f, g = gen(spec, order)
        return F.majorant(f, w, 0, grid), F.majorant(g, w, 0, grid)

    plan = [("odd_pair", ""), ("odd_pair", "mobius"), ("odd_pair", "identity")]
    return run_fuzz("odd_majorant", evaluate, plan, samples, seed, grid, params, order)


def check_bombieri(samples: int = 1000, seed: int = 0,
                   order: int = S.DEFAULT_ORDER) -> VerificationReport:
    """sum |a_n| r^n <= bombieri_bound(r) on [1/3, 0.95] for f in B."""
    grid = radius_grid(BOMBIERI_INTERVAL[1], BOMBIERI_INTERVAL[0])
    bound = np.array([F.bombieri_bound(r) for r in grid])

    def evaluate(spec, order, grid):
        f = gen(spec, order)[0]
        return F.majorant(f, GEOMETRIC, 0, grid), _fv(bound)

    plan = [("blaschke", ""), ("blaschke", "scaled"), ("mobius", ""), ("schwarz", ""),
            ("subordinate_pair", "")]
    return run_fuzz("bombieri", evaluate, plan, samples, seed, grid, {}, order)


def check_carlson(samples: int = 10_000, seed: int = 0, order: int = S.DEFAULT_ORDER,
                  plan: Sequence[tuple[str, str]] = (("blaschke", ""),)) -> VerificationReport:
    """Carlson's coefficient inequalities on seeded functions; residuals must stay >= -1e-12."""
    n_max = min(CARLSON_N, (order - 1) // 2)
    worst = -math.inf
    violations = []
    for i in range(samples):
        family, variant = plan[i % len(plan)]
        spec = sample_spec(family, seed, i, variant)
        f = gen(spec, order)[0]
        res = F.carlson_residuals(f, n_max).minimum()
        worst = max(worst, -res)
        if -res > CARLSON_THRESHOLD and len(violations) < MAX_RECORDED:
            violations.append({"spec": spec.to_dict(), "residual": res})
    return VerificationReport("carlson", samples, [], worst, violations, seed=seed, order=order,
                              status="violation" if worst > CARLSON_THRESHOLD else "pass",
                              families=sorted({f for f, _ in plan}),
                              params={"n_max": n_max}, threshold=CARLSON_THRESHOLD)


def check_table1(p: float, tol: float = 1e-6) -> VerificationReport:
    """radius_corollary against the embedded table entries for this p."""
    rows = [(n, R) for n, pp, R in radii.PRINTED_TABLE1 if pp == p]
    if not rows:
        return skipped("table1", f"no embedded entries for p={p}", {"p": p})
    worst, violations = -math.inf, []
    for n, R in rows:
        got = radii.radius_corollary(n, p)
        diff = abs(got - R) - tol
        worst = max(worst, diff)
        if diff > 0:
            violations.append({"n": n, "expected": R, "computed": got})
    return VerificationReport("table1", len(rows), [], worst, violations,
                              status="violation" if violations else "pass",
                              params={"p": p, "tol": tol}, threshold=0.0)


CHECKS = ("theorem1", "sharpness", "quasi_majorant", "weighted_quasi", "goluzin", "harmonic",
          "derivative_bohr", "derivative_majorization", "odd_majorant", "bombieri", "carlson",
          "table1")


def run_check(name: str, **kw) -> VerificationReport:
    """Dispatch by name; unknown keyword arguments are ignored per check."""
    w = kw.get("weights", GEOMETRIC)
    samples = kw.get("samples")
    seed = kw.get("seed", 0)
    n = {} if samples is None else {"samples": samples}
    try:
        if name == "theorem1":
            return check_theorem1(w, kw.get("p", 1.0), base_seed=seed, **n)
        if name == "sharpness":
            return probe_sharpness(w, kw.get("p", 1.0), kw.get("eps", 0.05))
        if name == "quasi_majorant":
            return check_quasi_majorant(w, seed=seed, **n)
        if name == "weighted_quasi":
            return check_weighted_quasi(w, QuadraticWeight(kw.get("psi", "geometric")),
                                        kw.get("lam", "carlson"), seed=seed, **n)
        if name == "goluzin":
            return check_goluzin(QuadraticWeight(kw.get("psi", "geometric")), seed=seed, **n)
        if name == "harmonic":
            return check_harmonic(w, kw.get("p", 1.0), kw.get("K", 1.0), seed=seed, **n)
        if name == "derivative_bohr":
            return check_derivative_bohr(w, seed=seed, eps=kw.get("eps", 0.05), **n)
        if name == "derivative_majorization":
            return check_derivative_majorization(w, kw.get("mode", "subordination"),
                                                 seed=seed, **n)
        if name == "odd_majorant":
            return check_odd_majorant(w, seed=seed, **n)
        if name == "bombieri":
            return check_bombieri(seed=seed, **n)
        if name == "carlson":
            return check_carlson(seed=seed, **n)
        if name == "table1":
            return check_table1(kw.get("p", 1.0))
    except BohrError:
        raise
    raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")


def merge(reports: Iterable[VerificationReport]) -> VerificationReport:
    """Combine reports of the same check in the given order."""
    reports = list(reports)
    if not reports:
        raise PreconditionError("nothing to merge")
    head = reports[0]
    worst = max(r.max_residual for r in reports)
    statuses = {r.status for r in reports}
    status = "violation" if "violation" in statuses else head.status
    return VerificationReport(
        head.check, sum(r.samples for r in reports), head.grid, worst,
        [v for r in reports for v in r.violations], [x for r in reports for x in r.witnesses],
        head.seed, head.order, status, head.reason,
        sorted({f for r in reports for f in r.families}), head.params, head.threshold)
