"""Exact (thm1) versus explicit-kernel (thm2) values as the twist height grows.

The thm2 error should shrink roughly like 1/eta while the bound
c eta^{-1} C^{1/4+eps} tracks it from above.

    python3 scripts/thm_comparison.py --fixture dirichlet-5 --t 0 1 3 10 30 100 300
"""

import argparse

from afeval import builtin, central_value_thm1, central_value_thm2
from afeval.evaluator import TruncationPolicy


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--fixture", default="dirichlet-5")
    ap.add_argument("--t", type=float, nargs="+", default=[0, 1, 3, 10, 30, 100, 300])
    ap.add_argument("--eps", type=float, default=0.1)
    ap.add_argument("--c", type=float, default=5.0)
    args = ap.parse_args()
    tp = TruncationPolicy(eps=args.eps)
    print(f"{'t':>7} {'eta':>9} {'C':>10} {'|thm1-thm2|':>12} {'bound':>10} {'ratio':>8}")
    for t in args.t:
        inst = builtin(args.fixture, t=t)
        one = central_value_thm1(inst)
        two = central_value_thm2(inst, tp=tp, c_bound=args.c)
        bound = two.details["error_bound"]
        diff = abs(one.value - two.value)
        print(f"{t:7.1f} {one.constants.eta:9.4f} {one.constants.C:10.4f} {diff:12.4e} {bound:10.4f} {diff / bound:8.2e}")


if __name__ == "__main__":
    main()
