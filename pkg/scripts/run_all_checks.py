#!/usr/bin/env python3
"""Run every verification check with fixed seeds and save the JSON reports."""

import argparse
import sys
import time
from pathlib import Path

from weighted_bohr import verify as V
from weighted_bohr.functionals import QuadraticWeight
from weighted_bohr.weights import WeightSequence

GEO = WeightSequence.geometric()


def plan(samples: int, seed: int):
    weights = [("geometric", GEO)]
    weights += [(f"truncated{n}", WeightSequence.truncated_geometric(n)) for n in (1, 2, 3, 6)]
    weights += [(f"power{a}", WeightSequence.power(a)) for a in (-1, 1, 2)]
    for label, w in weights:
        for p in (1, 2):
            yield f"theorem1_{label}_p{p}", lambda w=w, p=p: V.check_theorem1(w, p, samples, seed)
            yield f"sharpness_{label}_p{p}", lambda w=w, p=p: V.probe_sharpness(w, p)
    yield "quasi_majorant", lambda: V.check_quasi_majorant(GEO, samples, seed)
    yield "quasi_majorant_truncated6", lambda: V.check_quasi_majorant(
        WeightSequence.truncated_geometric(6), samples, seed)
    for kind in ("geometric", "linear", "quadratic"):
        yield f"goluzin_{kind}", lambda k=kind: V.check_goluzin(QuadraticWeight(k), samples, seed)
    yield "weighted_quasi_carlson", lambda: V.check_weighted_quasi(
        GEO, QuadraticWeight("geometric"), "carlson", samples, seed)
    yield "weighted_quasi_linear", lambda: V.check_weighted_quasi(
        GEO, QuadraticWeight("linear"), 1.0, samples, seed)
    for K in (1, 2, 4):
        yield f"harmonic_K{K}", lambda K=K: V.check_harmonic(GEO, 1, K, samples, seed)
    yield "derivative_bohr", lambda: V.check_derivative_bohr(GEO, samples, seed)
    for mode in ("subordination", "modulus"):
        yield f"derivative_majorization_{mode}", lambda m=mode: V.check_derivative_majorization(
            GEO, m, samples, seed)
    yield "odd_majorant", lambda: V.check_odd_majorant(GEO, samples, seed)
    yield "bombieri", lambda: V.check_bombieri(samples, seed)
    yield "carlson", lambda: V.check_carlson(10 * samples, seed)
    for p in (1, 2):
        yield f"table1_p{p}", lambda p=p: V.check_table1(p)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("out/reports"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    failed = 0
    for name, run in plan(args.samples, args.seed):
        t = time.perf_counter()
        report = run()
        (args.out / f"{name}.json").write_text(report.to_json() + "\n")
        failed += not report.passed
        print(f"{name:36s} {report.summary()}  [{time.perf_counter() - t:.1f}s]")
    print(f"{failed} check(s) without a pass")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
