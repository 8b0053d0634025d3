#!/usr/bin/env python3
"""Write R_n(p) for p = 1, 2 as CSV and diff against the embedded table."""

import argparse
import sys
from pathlib import Path

from weighted_bohr.cli import TABLE1_NS, round6
from weighted_bohr.radii import PRINTED_TABLE1, table1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("out"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    printed = {(n, p): R for n, p, R in PRINTED_TABLE1}
    mismatches = 0
    for p in (1, 2):
        rows = table1(p, TABLE1_NS)
        path = args.out / f"table1_p{p}.csv"
        path.write_text("n,R\n" + "".join(f"{n},{round6(R)}\n" for n, R in rows))
        for n, R in rows:
            diff = abs(R - printed[(n, p)])
            flag = "" if diff <= 1e-6 else "  <-- mismatch"
            mismatches += bool(flag)
            print(f"p={p} n={n:2d}  computed {R:.9f}  printed {printed[(n, p)]:.6f}{flag}")
        print(f"wrote {path}")
    print(f"{mismatches} mismatch(es) over {len(PRINTED_TABLE1)} entries")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
