"""Spread of thm1 central values across Gaussian kernel widths, per fixture.

    python3 scripts/kernel_independence.py --a 0.1 0.25 0.5 1 2
"""

import argparse
import itertools

from afeval import KernelParams, central_value_thm1
from afeval.fixtures import pinned_fixtures


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--a", type=float, nargs="+", default=[0.1, 0.25, 0.5, 1.0, 2.0])
    args = ap.parse_args()
    print(f"{'fixture':>14} {'value':>44} {'max spread':>11}")
    for inst in pinned_fixtures():
        vals = [central_value_thm1(inst, KernelParams(a)).value for a in args.a]
        spread = max(abs(x - y) for x, y in itertools.combinations(vals, 2))
        print(f"{inst.label:>14} {vals[0]!s:>44} {spread:11.2e}")


if __name__ == "__main__":
    main()
