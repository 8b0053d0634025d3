"""Command-line interface: radius, table1, verify, eval.

Exit codes: 0 pass, 1 inequality violation (or no sharpness witness),
2 no radius, 3 hypotheses unmet, 4 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path

from . import functionals as F
from . import radii
from .errors import (BohrError, CapabilityError, DomainError, NoRadiusError,
                     PreconditionError, ToolingError)
from .series import PowerSeries
from .verify import CHECKS, run_check
from .weights import WeightSequence

EXIT_OK, EXIT_VIOLATION, EXIT_NO_RADIUS, EXIT_UNMET, EXIT_INPUT = 0, 1, 2, 3, 4
OUTPUT_DIR_ENV = "WEIGHTED_BOHR_OUTPUT_DIR"
TABLE1_NS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 15, 20, 25, 30, 35)
EQUATIONS = ("general", "corollary", "power", "harmonic", "schwarz-derivative", "odd")
FUNCTIONALS = ("bohr", "refined", "majorant", "norm-sq", "derivative-majorant",
               "bombieri-bound")


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors get the input-error code, keeping 2 for "no radius"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    weights: WeightSequence = field(default_factory=WeightSequence.geometric)
    p: float | None = None
    alpha: float | None = None
    K: float | None = None
    n: int | None = None
    seed: int = 0
    samples: int | None = None
    order: int = 256
    tol: float = radii.DEFAULT_TOL
    fmt: str = "text"
    output: Path | None = None
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        """Reject bad numbers before any computation starts."""
        if self.p is not None and not (0.0 < self.p <= 2.0):
            raise InputError(f"--p must lie in (0, 2], got {self.p}")
        if self.K is not None and not self.K >= 1.0:
            raise InputError(f"--K must be >= 1, got {self.K}")
        if self.n is not None and self.n < 1:
            raise InputError(f"--n must be a positive integer, got {self.n}")
        if self.alpha is not None and not math.isfinite(self.alpha):
            raise InputError("--alpha must be finite")
        if self.samples is not None and self.samples < 1:
            raise InputError("--samples must be positive")
        if not self.tol > 0:
            raise InputError("--tol must be positive")
        if self.order < 64:
            raise InputError("--order must be >= 64")


def parse_weights(text: str) -> WeightSequence:
    """'geometric', 'power:A', 'truncated_geometric:N', inline JSON or a JSON file path."""
    text = text.strip()
    try:
        if text.startswith("{"):
            return WeightSequence.from_dict(json.loads(text))
        if text.endswith(".json") or os.path.sep in text:
            return WeightSequence.from_dict(json.loads(Path(text).read_text()))
        kind, _, arg = text.partition(":")
        if kind == "geometric" and not arg:
            return WeightSequence.geometric()
        if kind == "power" and arg:
            return WeightSequence.power(float(arg))
        if kind in ("truncated_geometric", "truncated") and arg:
            return WeightSequence.truncated_geometric(int(arg))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad weight descriptor {text!r}: {exc}") from exc
    raise InputError(f"bad weight descriptor {text!r}")


def round6(x: float) -> str:
    return str(Decimal(repr(float(x))).quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text)


def _default_output(name: str) -> Path | None:
    base = os.environ.get(OUTPUT_DIR_ENV)
    return Path(base) / name if base else None


# commands ---------------------------------------------------------------

def _radius_problem(cfg: RunConfig, equation: str) -> radii.RadiusProblem:
    w = cfg.weights
    if equation == "general":
        return radii.general_problem(w, cfg.p if cfg.p is not None else 1.0)
    if equation == "corollary":
        if cfg.n is None:
            raise InputError("--equation corollary needs --n")
        return radii.corollary_problem(cfg.n, cfg.p if cfg.p is not None else 1.0)
    if equation == "power":
        if cfg.alpha is None:
            raise InputError("--equation power needs --alpha")
        return radii.power_problem(cfg.alpha, cfg.p if cfg.p is not None else 1.0)
    if equation == "harmonic":
        p = cfg.p if cfg.p is not None else 1.0
        if p > 1.0:
            raise InputError("--equation harmonic needs p in (0, 1]")
        return radii.harmonic_problem(w, p, radii.k_from_K(cfg.K if cfg.K is not None else 1.0))
    if equation == "schwarz-derivative":
        return radii.schwarz_derivative_problem(w)
    if equation == "odd":
        return radii.odd_problem(w)
    raise InputError(f"unknown equation {equation!r}")


def cmd_radius(cfg: RunConfig) -> int:
    equation = cfg.extra.get("equation", "general")
    problem = _radius_problem(cfg, equation)
    res = radii.solve_detailed(problem, cfg.tol)
    if equation == "harmonic":
        radii.radius_harmonic(cfg.weights, problem.params["p"], problem.params["k"], cfg.tol)
    out = {"equation": problem.name, "radius": res.root, "residual": res.residual,
           "crossing": res.crossing}
    if problem.closed_form is not None:
        out["closed_form"] = problem.closed_form
        out["discrepancy"] = abs(res.root - problem.closed_form)
    if cfg.fmt == "json":
        text = json.dumps(out, sort_keys=True) + "\n"
    else:
        lines = [f"radius       {res.root:.12f}", f"equation     {problem.name}",
                 f"residual     {res.residual:.3e}"]
        if problem.closed_form is not None:
            lines += [f"closed form  {problem.closed_form:.12f}",
                      f"discrepancy  {out['discrepancy']:.3e}"]
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.output)
    return EXIT_OK


def cmd_table1(cfg: RunConfig) -> int:
    p = cfg.p if cfg.p is not None else 1.0
    ns = cfg.extra.get("ns") or TABLE1_NS
    rows = radii.table1(p, ns, cfg.tol)
    text = "n,R\n" + "".join(f"{n},{round6(R)}\n" for n, R in rows)
    _emit(text, cfg.output or _default_output(f"table1_p{p:g}.csv"))
    if not cfg.extra.get("compare_paper"):
        return EXIT_OK
    computed = dict(rows)
    bad = 0
    for n, pp, expected in radii.PRINTED_TABLE1:
        if pp != p:
            continue
        got = computed.get(n, radii.radius_corollary(n, p, cfg.tol))
        if abs(got - expected) > 1e-6:
            bad += 1
            print(f"mismatch n={n}: computed {got:.9f}, printed {expected}", file=sys.stderr)
    if not any(pp == p for _, pp, _ in radii.PRINTED_TABLE1):
        print(f"no printed entries for p={p:g}", file=sys.stderr)
        return EXIT_UNMET
    print(f"compare-paper: {bad} mismatch(es)", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    name = cfg.extra["check"]
    kw = {"weights": cfg.weights, "seed": cfg.seed, "eps": cfg.extra.get("eps", 0.05),
          "psi": cfg.extra.get("psi", "geometric"), "lam": cfg.extra.get("lam", "carlson"),
          "mode": cfg.extra.get("mode", "subordination")}
    if cfg.p is not None:
        kw["p"] = cfg.p
    if cfg.K is not None:
        kw["K"] = cfg.K
    if cfg.samples is not None:
        kw["samples"] = cfg.samples
    report = run_check(name, **kw)
    out = cfg.output or _default_output(f"{name}.json")
    if out is not None:
        _emit(report.to_json() + "\n", out)
    if cfg.fmt == "json" and out is None:
        sys.stdout.write(report.to_json() + "\n")
    else:
        print(report.summary())
        for wit in report.witnesses[:4]:
            print("  witness " + ", ".join(f"{k}={v:.6g}" for k, v in wit.items()))
    if report.status == "skipped":
        return EXIT_UNMET
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _load_series(path: str | None) -> PowerSeries:
    if path is None:
        raise InputError("--input is required for this functional")
    try:
        return PowerSeries.from_json(Path(path).read_text())
    except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
        raise InputError(f"cannot read series from {path}: {exc}") from exc


def cmd_eval(cfg: RunConfig) -> int:
    name = cfg.extra["functional"]
    r = cfg.extra["r"]
    if name == "bombieri-bound":
        value = F.FunctionalValue(F.bombieri_bound(r), 0.0)
    else:
        f = _load_series(cfg.extra.get("input"))
        w, p = cfg.weights, (cfg.p if cfg.p is not None else 1.0)
        if name == "bohr":
            value = F.bohr_functional(f, w, p, r)
        elif name == "refined":
            value = F.refined_functional(f, w, p, r)
        elif name == "majorant":
            value = F.majorant(f, w, cfg.extra.get("N", 0), r)
        elif name == "norm-sq":
            value = F.norm_sq(f, r)
        elif name == "derivative-majorant":
            value = F.derivative_majorant(f, w, r)
        else:
            raise InputError(f"unknown functional {name!r}")
    if cfg.fmt == "json":
        text = json.dumps({"functional": name, "r": r, "value": value.value,
                           "tail_bound": value.tail_bound}, sort_keys=True) + "\n"
    else:
        text = f"value       {value.value:.12g}\ntail_bound  {value.tail_bound:.3e}\n"
    _emit(text, cfg.output)
    return EXIT_OK


COMMANDS = {"radius": cmd_radius, "table1": cmd_table1, "verify": cmd_verify, "eval": cmd_eval}


# argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weighted-bohr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, weights=True):
        if weights:
            sp.add_argument("--weights", default="geometric",
                            help="geometric | power:A | truncated_geometric:N | JSON")
        sp.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--output", type=Path)

    sp = sub.add_parser("radius", help="solve a radius equation")
    common(sp)
    sp.add_argument("--equation", choices=EQUATIONS, default="general")
    sp.add_argument("--p", type=float)
    sp.add_argument("--alpha", type=float)
    sp.add_argument("--K", type=float)
    sp.add_argument("--n", type=int)
    sp.add_argument("--tol", type=float, default=radii.DEFAULT_TOL)

    sp = sub.add_parser("table1", help="R_n(p) rows as CSV")
    common(sp, weights=False)
    sp.add_argument("--p", type=float, default=1.0)
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--compare-paper", action="store_true",
                    help="diff against the 28 embedded table entries")
    sp.add_argument("--tol", type=float, default=radii.DEFAULT_TOL)

    sp = sub.add_parser("verify", help="run a seeded verification check")
    common(sp)
    sp.add_argument("--check", choices=CHECKS, required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--K", type=float)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--eps", type=float, default=0.05)
    sp.add_argument("--psi", choices=("geometric", "linear", "quadratic"), default="geometric")
    sp.add_argument("--lambda", dest="lam", default="carlson",
                    help="'carlson' or a nonnegative constant")
    sp.add_argument("--mode", choices=("subordination", "modulus"), default="subordination")

    sp = sub.add_parser("eval", help="evaluate a functional")
    common(sp)
    sp.add_argument("--functional", choices=FUNCTIONALS, required=True)
    sp.add_argument("--r", type=float, required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--N", type=int, default=0)
    sp.add_argument("--input")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, fmt=ns.fmt, output=ns.output)
    if hasattr(ns, "weights"):
        cfg.weights = parse_weights(ns.weights)
    for name in ("p", "alpha", "K", "n", "samples", "tol"):
        if getattr(ns, name, None) is not None:
            setattr(cfg, name, getattr(ns, name))
    cfg.seed = getattr(ns, "seed", 0)
    if ns.command == "radius":
        cfg.extra["equation"] = ns.equation
    elif ns.command == "table1":
        if (ns.n_min is None) != (ns.n_max is None):
            raise InputError("--n-min and --n-max go together")
        if ns.n_min is not None:
            if not 1 <= ns.n_min <= ns.n_max:
                raise InputError("need 1 <= n-min <= n-max")
            cfg.extra["ns"] = list(range(ns.n_min, ns.n_max + 1))
        cfg.extra["compare_paper"] = ns.compare_paper
    elif ns.command == "verify":
        lam = ns.lam
        if lam != "carlson":
            try:
                lam = float(lam)
            except ValueError as exc:
                raise InputError("--lambda must be 'carlson' or a number") from exc
            if not lam >= 0:
                raise InputError("--lambda must be nonnegative")
        if ns.check == "harmonic" and cfg.p is not None and cfg.p > 1.0:
            raise InputError("the harmonic check needs p in (0, 1]")
        if not ns.eps > 0:
            raise InputError("--eps must be positive")
        cfg.extra.update(check=ns.check, eps=ns.eps, psi=ns.psi, lam=lam, mode=ns.mode)
    elif ns.command == "eval":
        if not 0.0 <= ns.r < 1.0:
            raise InputError("--r must lie in [0, 1)")
        if ns.N < 0:
            raise InputError("--N must be >= 0")
        cfg.extra.update(functional=ns.functional, r=ns.r, N=ns.N, input=ns.input)
    cfg.validate()
    return cfg


def main(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except NoRadiusError as exc:
        print(f"no radius: {exc}", file=sys.stderr)
        return EXIT_NO_RADIUS
    except (InputError, DomainError, CapabilityError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"hypotheses unmet: {exc}", file=sys.stderr)
        return EXIT_UNMET
    except ToolingError as exc:
        print(f"tooling error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except BohrError as exc:  # pragma: no cover - every subclass is handled above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
