"""Print the empirical constants that tests/pinned_constants.py freezes."""

import numpy as np

from afeval import builtin
from afeval.archimedean import lemma2_sweep, lemma3_deviation
from afeval.cutoff import cutoff_values
from afeval.evaluator import convexity_report
from afeval.fixtures import pinned_fixtures
from afeval.model import eta_min


def main():
    fixtures = [(i.label, i) for i in pinned_fixtures()] + [("dirichlet-5@100", builtin("dirichlet-5", t=100.0))]
    for name, inst in fixtures:
        growth = {s: lemma2_sweep(inst, s, 200.0, 4001).max_normalized for s in (-0.15, 0.0, 0.15)}
        ts = [t for t in np.linspace(-0.1, 0.1, 41) if t]
        c_needed = max(lemma3_deviation(inst, t, enforce_range=False).deviation * eta_min(inst) / abs(t) for t in ts)
        line = f"{name:18s} growth {growth[-0.15]:.4f} {growth[0.0]:.4f} {growth[0.15]:.4f}  small-t c {c_needed:.4f}"
        line += f"  convexity {convexity_report(inst).ratio:.4f}"
        if inst.m == 1:
            x = np.geomspace(1e-10, 1e-2, 200)
            v, _, _ = cutoff_values(x, inst)
            line += f"  small-x K {np.max(np.abs(v - 1) / x ** 0.3):.4f}"
        print(line)


if __name__ == "__main__":
    main()
