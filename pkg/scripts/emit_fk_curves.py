#!/usr/bin/env python3
"""Emit CSV samples of the gap functions F^k for k = 2, 4, 6, 8.

Writes one file per k (fk_<k>.csv) into the output directory; each curve is
sampled from just above its concavity threshold 2(k-1) up to x_max.  The CSVs
are plot-ready: header `x,F`, full double precision.
"""

import argparse
import pathlib

from chevalley.galkin import fk_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("."))
    ap.add_argument("--x-max", type=float, default=100.0)
    ap.add_argument("--step", type=float, default=0.25)
    ap.add_argument("--ks", type=int, nargs="+", default=[2, 4, 6, 8])
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for k in args.ks:
        x_min = 2.0 * (k - 1) + args.step
        rows = fk_table(k, x_min, args.x_max, args.step)
        path = args.out_dir / f"fk_{k}.csv"
        with open(path, "w") as out:
            out.write("x,F\n")
            for x, f in rows:
                out.write(f"{x:.17g},{f:.17g}\n")
        print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
