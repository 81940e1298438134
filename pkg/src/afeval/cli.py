"""``afeval`` command line.

Exit codes: 0 success, 1 invalid input, 2 numerical failure (a requested
tolerance or pinned bound was not met).
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path
import sys
from typing import Optional, Sequence

import numpy as np

from .archimedean import (
    evaluation_strip,
    kappa_lambda,
    lambda_phase,
    lemma2_sweep,
    lemma3_deviation,
    lemma3_slope,
    log_normalized_ratio,
)
from .cutoff import cutoff_values, default_contour
from .documents import csv_text, dumps, instance_to_dict, parse_instance, result_to_dict
from .errors import NumericalFailure, ValidationError
from .evaluator import (
    TruncationPolicy,
    central_value_thm1,
    central_value_thm2,
    convexity_report,
    truncation_length,
)
from .fixtures import builtin, builtin_names
from .kernel import KernelParams
from .model import analytic_conductor, coefficient_growth_diagnostic, eta_min, twist

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 1, 2


def _load(path: str):
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_instance(data)


def parse_grid(spec: str) -> np.ndarray:
    """``start:stop:log|lin:count`` -> grid including both ends."""
    parts = spec.split(":")
    if len(parts) != 4:
        raise ValidationError(f"grid {spec!r} must look like start:stop:log|lin:count")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[3])
    except ValueError:
        raise ValidationError(f"grid {spec!r} has a non-numeric field") from None
    kind = parts[2]
    if n < 1 or not (0 < lo <= hi) or not math.isfinite(hi):
        raise ValidationError(f"grid {spec!r} needs 0 < start <= stop and count >= 1")
    if kind == "log":
        return np.geomspace(lo, hi, n)
    if kind == "lin":
        return np.linspace(lo, hi, n)
    raise ValidationError(f"grid spacing must be 'log' or 'lin', got {kind!r}")


def _policy(args) -> TruncationPolicy:
    return TruncationPolicy(eps=args.eps, hard_cap=args.terms, mode=args.truncation)


def cmd_eval(args) -> int:
    inst = _load(args.instance)
    if args.t:
        inst = twist(inst, args.t)
    kp = KernelParams(args.kernel_a)
    tp = _policy(args)
    if args.method == "thm1":
        res = central_value_thm1(inst, kp, None, tp)
    else:
        res = central_value_thm2(inst, kp, tp, c_bound=args.c_bound)
    payload = result_to_dict(res)
    if not all(math.isfinite(v) for v in (res.value.real, res.value.imag, res.error_estimate)):
        raise NumericalFailure("evaluation produced a non-finite value")
    sys.stdout.write(dumps(payload))
    if args.max_error is not None and res.error_estimate > args.max_error:
        print(f"error estimate {res.error_estimate:.3g} exceeds --max-error {args.max_error:.3g}",
              file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_tabulate(args) -> int:
    inst = _load(args.instance)
    if args.t:
        inst = twist(inst, args.t)
    kp = KernelParams(args.kernel_a)
    x = parse_grid(args.x)
    cs = default_contour(inst, kp, sigma=args.sigma)
    vals, errs, nodes = cutoff_values(x, inst, kp, cs, 0)
    rows = [(x[i], vals[i].real, vals[i].imag, abs(vals[i]), errs[i]) for i in range(x.size)]
    text = csv_text(("x", "re_f", "im_f", "abs_f", "quad_error"), rows)
    Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    sys.stdout.write(dumps({"rows": int(x.size), "out": str(args.out), "nodes": nodes,
                            "sigma": cs.sigma, "max_quad_error": float(np.max(errs))}))
    return EXIT_OK


def cmd_check_bounds(args) -> int:
    inst = _load(args.instance)
    if args.t:
        inst = twist(inst, args.t)
    strip = evaluation_strip(inst)
    C, eta = analytic_conductor(inst), eta_min(inst)
    failures = []

    lam = lambda_phase(inst)
    kl = kappa_lambda(inst)
    f0 = complex(np.exp(log_normalized_ratio(0j, inst)))
    unit_t = [0.1, 1.0, 5.0, 50.0]
    unit_dev = [abs(abs(np.exp(log_normalized_ratio(1j * t, inst))) - 1.0) for t in unit_t]
    unitarity = {"abs_lambda_minus_1": abs(abs(lam) - 1), "abs_kappa_lambda_minus_1": abs(abs(kl) - 1),
                 "F0_minus_1": abs(f0 - 1), "critical_modulus_dev": max(unit_dev)}
    if max(unitarity["abs_lambda_minus_1"], unitarity["abs_kappa_lambda_minus_1"],
           unitarity["critical_modulus_dev"]) > 1e-12 or unitarity["F0_minus_1"] > 1e-14:
        failures.append("unitarity")

    sweeps = []
    for sigma in (-0.15, 0.0, 0.15):
        if not strip.contains(sigma):
            continue
        rep = lemma2_sweep(inst, sigma, args.t_max, args.points)
        ok = rep.max_normalized <= args.ceiling
        if sigma == 0.0:
            ok = ok and abs(rep.max_normalized - 1.0) <= 1e-12
        sweeps.append({"sigma": sigma, "max_normalized": rep.max_normalized, "argmax_t": rep.argmax_t, "ok": ok})
        if not ok:
            failures.append(f"growth sweep at sigma={sigma}")

    small = []
    t_cap = min(0.1, 0.99 * eta, 0.99 * C ** args.lemma3_eps)
    for t in np.linspace(-t_cap, t_cap, 9):
        if t == 0:
            continue
        rep = lemma3_deviation(inst, float(t), args.c, args.lemma3_eps)
        law = args.c * abs(t) / eta
        ok = rep.deviation <= law
        small.append({"t": float(t), "deviation": rep.deviation, "bound": law, "ok": ok})
        if not ok:
            failures.append(f"small-t deviation at t={t:.4g}")

    report = {
        "label": inst.label, "C": C, "eta": eta,
        "strip": {"sigma_min": strip.sigma_min, "sigma_max": strip.sigma_max},
        "unitarity": unitarity, "growth": sweeps, "small_t": small,
        "small_t_slope": lemma3_slope(inst), "ok": not failures, "failures": failures,
    }
    sys.stdout.write(dumps(report))
    return EXIT_OK if not failures else EXIT_NUMERICAL


def cmd_diagnose(args) -> int:
    inst = _load(args.instance)
    if args.t:
        inst = twist(inst, args.t)
    kp = KernelParams(args.kernel_a)
    C = analytic_conductor(inst)
    strip = evaluation_strip(inst)
    cs = default_contour(inst, kp)
    x = min(args.growth_x, len(inst.coefficients))
    growth = coefficient_growth_diagnostic(inst.coefficients, x, args.eps)
    conv = convexity_report(inst, kp)
    report = {
        "label": inst.label, "m": inst.m, "d": inst.d, "N": inst.conductor_N,
        "C": C, "eta": eta_min(inst), "lambda": {"re": lambda_phase(inst).real, "im": lambda_phase(inst).imag},
        "theta_low": inst.theta_low,
        "strip": {"sigma_min": strip.sigma_min, "sigma_max": strip.sigma_max},
        "contour": {"sigma": cs.sigma, "step": cs.step, "half_width": cs.half_width, "tol": cs.tol},
        "declared_length": len(inst.coefficients), "period": inst.coefficients.period,
        "truncation_length": truncation_length(C, args.eps),
        "growth": {"x": x, "partial_sum": growth.partial_sum, "reference": growth.reference,
                   "ratio": growth.ratio, "a1_is_1": growth.a1_normalized},
        "convexity": {"abs_value": conv.abs_value, "c_quarter": conv.c_quarter, "ratio": conv.ratio},
    }
    sys.stdout.write(dumps(report))
    return EXIT_OK


def cmd_fixtures_export(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in builtin_names():
        if name == "trivial":
            continue
        path = out / f"{name}.json"
        path.write_text(dumps(instance_to_dict(builtin(name))), encoding="utf-8", newline="\n")
        written.append(str(path))
    sys.stdout.write(dumps({"written": written}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="afeval", description="Central values of L-functions from smoothed approximate functional equations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kernel=True):
        sp.add_argument("--instance", required=True, help="instance JSON path, or - for stdin")
        sp.add_argument("--t", type=float, default=0.0, help="evaluate at 1/2 + i t")
        if kernel:
            sp.add_argument("--kernel-a", type=float, default=0.25, help="Gaussian kernel width a")

    e = sub.add_parser("eval", help="central value as JSON")
    common(e)
    e.add_argument("--method", choices=("thm1", "thm2"), default="thm1")
    e.add_argument("--eps", type=float, default=0.25)
    e.add_argument("--truncation", choices=("fixed_length", "corollary1"), default="fixed_length")
    e.add_argument("--terms", type=int, default=None, help="cap on the number of terms")
    e.add_argument("--c-bound", type=float, default=5.0, help="constant in the thm2 error bound")
    e.add_argument("--max-error", type=float, default=None, help="exit 2 if the error estimate is larger")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("tabulate-f", help="cutoff function on a grid, as CSV")
    common(t)
    t.add_argument("--x", required=True, help="grid start:stop:log|lin:count")
    t.add_argument("--out", required=True)
    t.add_argument("--sigma", type=float, default=None, help="contour abscissa")
    t.set_defaults(func=cmd_tabulate)

    c = sub.add_parser("check-bounds", help="unitarity, growth and small-t sweeps")
    common(c, kernel=False)
    c.add_argument("--t-max", type=float, default=200.0)
    c.add_argument("--points", type=int, default=4001)
    c.add_argument("--ceiling", type=float, default=3.0)
    c.add_argument("--c", type=float, default=10.0)
    c.add_argument("--lemma3-eps", type=float, default=0.1)
    c.set_defaults(func=cmd_check_bounds)

    d = sub.add_parser("diagnose", help="invariants, truncation and convexity ratio")
    common(d)
    d.add_argument("--eps", type=float, default=0.25)
    d.add_argument("--growth-x", type=int, default=1000)
    d.set_defaults(func=cmd_diagnose)

    f = sub.add_parser("fixtures", help="fixture utilities")
    fsub = f.add_subparsers(dest="fixtures_command", required=True)
    fe = fsub.add_parser("export", help="write pinned fixtures as instance JSON")
    fe.add_argument("--out", required=True)
    fe.set_defaults(func=cmd_fixtures_export)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"invalid input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (NumericalFailure, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
