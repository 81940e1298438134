"""Regenerate tests/reference_values.py from mpmath at 40 digits.

Every value comes from a route that shares no code with afeval's evaluator:
mpmath's own Dirichlet L implementation for characters, and the classical
incomplete-gamma expansion (run at high precision) for Delta.

    python3 scripts/freeze_reference_values.py > tests/reference_values.py
"""

import mpmath

from afeval.fixtures import CHARACTERS, delta_instance
from afeval.oracles import smoothed_sum_oracle

DPS = 40


def chi_table(chi):
    # mpmath.dirichlet wants chi(0), ..., chi(q-1)
    return [mpmath.mpc(v) for v in chi.values]


def main():
    mpmath.mp.dps = DPS
    print('"""Frozen reference values; regenerate with scripts/freeze_reference_values.py."""')
    print()
    print("DIRICHLET_HALF = {")
    for q, make in CHARACTERS.items():
        v = mpmath.dirichlet(mpmath.mpf(1) / 2, chi_table(make()))
        print(f"    {q}: complex({float(v.real)!r}, {float(v.imag)!r}),")
    print("}")
    print()
    print("DIRICHLET_HALF_PLUS_I = {")
    for q, make in CHARACTERS.items():
        for t in (1, -1):
            v = mpmath.dirichlet(mpmath.mpc(0.5, t), chi_table(make()))
            print(f"    ({q}, {t}): complex({float(v.real)!r}, {float(v.imag)!r}),")
    print("}")
    print()
    v = mpmath.dirichlet(mpmath.mpc(0.5, 100), chi_table(CHARACTERS[5]()))
    print(f"DIRICHLET_5_T100 = complex({float(v.real)!r}, {float(v.imag)!r})")
    v = smoothed_sum_oracle(delta_instance(2000), dps=DPS)
    print(f"DELTA_HALF = {v.real!r}")
    print(f"CATALAN = {float(mpmath.catalan)!r}")


if __name__ == "__main__":
    main()
