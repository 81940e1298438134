"""Tabulate |f|, the local slope and the normalized decay of the cutoff function.

Shows that f(y) ~ c y^{-(1/2 + min Re mu)} (log y)^{-3/2} for large y: the
last column settles to a constant for every GL(1) fixture.

    python3 scripts/decay_table.py [--fixtures dirichlet-3 dirichlet-5 delta]
"""

import argparse
import math

import numpy as np

from afeval import builtin
from afeval.cutoff import decay_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--fixtures", nargs="+", default=["dirichlet-3", "dirichlet-5", "delta"])
    ap.add_argument("--x", default="1e-4,1e7,23", help="start,stop,count on a log grid")
    args = ap.parse_args()
    lo, hi, n = args.x.split(",")
    x = np.geomspace(float(lo), float(hi), int(n))
    for name in args.fixtures:
        inst = builtin(name)
        e = 0.5 + float(np.min(inst.mu.real))
        print(f"# {name}: predicted exponent -{e:g} with (log y)^-1.5 correction")
        print(f"{'x':>10} {'|f|':>11} {'|f-1|':>11} {'|fprime|':>11} {'slope':>8} {'normalized':>11}")
        for r in decay_report(inst, x_grid=x):
            norm = r["abs_f"] * r["x"] ** e * math.log(r["x"]) ** 1.5 if r["x"] > 1 else float("nan")
            print(f"{r['x']:10.3g} {r['abs_f']:11.4e} {r['abs_f_minus_1']:11.4e} {r['abs_fprime']:11.4e} "
                  f"{r['slope']:8.3f} {norm:11.4e}")
        print()


if __name__ == "__main__":
    main()
