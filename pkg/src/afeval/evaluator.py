"""Central values from the two smoothed approximate functional equations.

``central_value_thm1`` is exact up to quadrature and truncation:

    L(1/2) = sum a_n n^{-1/2} f(n/sqrt C) + kappa*lambda sum conj(a_n) n^{-1/2} conj(f(n/sqrt C))

``central_value_thm2`` swaps ``f`` for the instance-free cutoff ``g`` and
reports the resulting error bound instead of absorbing it.

The cutoff ``f`` decays only like ``x^{-(1/2 + min Re mu)}`` once the line of
integration meets the branch points of the gamma ratio, so truncation alone
converges slowly for small ``Re mu``. When the coefficients declare a period
(Dirichlet characters) the tail is summed by parts against the periodic
partial sums, which is exact up to a remainder in high differences of the
smooth weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import Callable, Literal, Optional

import numpy as np

from .archimedean import kappa_lambda, lambda_phase
from .cutoff import ContourSpec, cutoff_values, default_contour
from .errors import ValidationError
from .kernel import DEFAULT_KERNEL, KernelParams, g_cutoff
from .model import CoefficientSource, LFunctionInstance, analytic_conductor, eta_min, twist

TAIL_ORDER = 8
_DECAY_RATIO = 1.25
_DECAY_POINTS = 64


@dataclass(frozen=True)
class TruncationPolicy:
    """How many coefficients enter each sum.

    ``corollary1`` takes ``truncation_length(C, eps)`` terms; ``fixed_length``
    takes ``hard_cap`` terms or, without a cap, every declared coefficient.
    """

    eps: float = 0.25
    hard_cap: Optional[int] = None
    mode: Literal["corollary1", "fixed_length"] = "fixed_length"
    tail_correction: bool = True

    def __post_init__(self):
        if self.eps <= 0:
            raise ValidationError("eps must be positive")
        if self.mode not in ("corollary1", "fixed_length"):
            raise ValidationError(f"unknown truncation mode {self.mode!r}")

    def length(self, C: float, src: CoefficientSource) -> int:
        if self.mode == "corollary1":
            M = truncation_length(C, self.eps)
            src.take(M)  # raises if the source is too short
            if self.hard_cap is not None:
                M = min(M, self.hard_cap)
            return M
        M = len(src) if self.hard_cap is None else self.hard_cap
        src.take(M)
        return M


@dataclass(frozen=True)
class Constants:
    C: float
    eta: float
    lam: complex
    kappa_lambda: complex


@dataclass(frozen=True)
class CentralValueResult:
    value: complex
    method: str
    terms_used: int
    error_estimate: float
    constants: Constants
    details: dict = field(default_factory=dict, compare=False)


def truncation_length(C: float, eps: float) -> int:
    """``ceil(C^{1/2 + eps})``, never below 10."""
    if eps <= 0:
        raise ValidationError("eps must be positive")
    return max(10, math.ceil(C ** (0.5 + eps)))


def _constants(inst: LFunctionInstance) -> Constants:
    return Constants(analytic_conductor(inst), eta_min(inst), lambda_phase(inst), kappa_lambda(inst))


def _csum(z: np.ndarray) -> complex:
    return complex(math.fsum(z.real), math.fsum(z.imag))


def _zero_mean_period(src: CoefficientSource) -> Optional[np.ndarray]:
    if src.period is None or len(src) < src.period:
        return None
    one = src.a[: src.period]
    if abs(_csum(one)) > 1e-12 * src.period:
        return None
    return one


def _partial_sum_tables(period_vals: np.ndarray, order: int) -> list[np.ndarray]:
    """Periodic iterated partial sums ``P_1..P_order`` with zero mean.

    ``tables[j][r]`` holds ``P_{j+1}(n)`` for ``n = r (mod q)``, ``r = 0..q-1``.
    """
    cur = np.roll(period_vals, 1)  # index by residue: cur[r] = c(n) for n = r mod q
    out = []
    for _ in range(order):
        # P(n) = sum_{k<=n} cur(k); residue r <-> n = r for r = 1..q, r = 0 <-> n = q
        by_n = np.cumsum(np.concatenate([cur[1:], cur[:1]]))  # n = 1..q
        by_n = by_n - by_n.mean()
        cur = np.concatenate([by_n[-1:], by_n[:-1]])
        out.append(cur)
    return out


def periodic_tail(period_vals: np.ndarray, M: int, w_ext: np.ndarray, order: int = TAIL_ORDER):
    """``sum_{n>M} c(n) w(n)`` for periodic zero-mean ``c`` and smooth ``w``.

    Repeated summation by parts gives
    ``sum_{j=1}^{K} (-1)^j P_j(M) Delta^{j-1} w(M+1)`` plus a remainder in
    ``Delta^K w``; ``w_ext`` holds ``w(M+1), ..., w(M+K+1)``.
    Returns ``(tail, remainder_estimate)``.
    """
    tables = _partial_sum_tables(period_vals, order)
    q = len(period_vals)
    r = M % q
    diffs = [w_ext]
    for _ in range(order):
        diffs.append(np.diff(diffs[-1]))
    terms = [(-1) ** j * tables[j - 1][r] * diffs[j - 1][0] for j in range(1, order + 1)]
    tail = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    remainder = float(np.max(np.abs(tables[-1]))) * abs(diffs[order - 1][0])
    return tail, remainder


def _decay_tail(amplitude: float, u: np.ndarray, w_abs: np.ndarray) -> float:
    """``amplitude * int_M^inf |w(u)| du`` on a geometric grid."""
    if len(u) < 2:
        return 0.0
    integrand = w_abs * u
    return float(amplitude * math.log(_DECAY_RATIO) * (0.5 * integrand[0] + integrand[1:].sum()))


def _two_sums(
    inst: LFunctionInstance,
    M: int,
    cutoff_fn: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    use_tail: bool,
):
    """Shared sum machinery for both evaluators.

    ``cutoff_fn(y)`` returns the cutoff and its quadrature error at ``y``;
    the dual sum uses the conjugated cutoff.
    """
    src = inst.coefficients
    C = analytic_conductor(inst)
    sqC = math.sqrt(C)
    t = inst.twist_t
    period_vals = _zero_mean_period(src) if use_tail else None

    n = np.arange(1, M + 1, dtype=float)
    if period_vals is not None:
        extra = np.arange(M + 1, M + TAIL_ORDER + 2, dtype=float)
    else:
        extra = M * _DECAY_RATIO ** np.arange(0, _DECAY_POINTS)
    pts = np.concatenate([n, extra])
    cut, cut_err = cutoff_fn(pts / sqC)
    scale = pts ** -0.5
    tw = np.exp(-1j * t * np.log(pts)) if t else np.ones_like(pts, dtype=complex)
    own_w = cut * scale * tw
    dual_w = np.conj(cut) * scale * np.conj(tw)

    c = src.take(M)
    own = _csum(c * own_w[:M])
    dual = _csum(np.conj(c) * dual_w[:M])
    quad_err = 2.0 * math.fsum(np.abs(c) * cut_err[:M] * scale[:M])

    if period_vals is not None:
        t_own, r_own = periodic_tail(period_vals, M, own_w[M:])
        t_dual, r_dual = periodic_tail(np.conj(period_vals), M, dual_w[M:])
        own += t_own
        dual += t_dual
        tail_err = r_own + r_dual + 2.0 * math.fsum(cut_err[M:] * scale[M:])
        tail_kind = "periodic"
    else:
        amp = 2.0 * float(np.max(np.abs(c[M // 2:]))) if M else 0.0
        tail_err = 2.0 * _decay_tail(amp, extra, np.abs(own_w[M:]))
        tail_kind = "decay"
    return own, dual, quad_err, tail_err, tail_kind


def central_value_thm1(
    inst: LFunctionInstance,
    kp: KernelParams = DEFAULT_KERNEL,
    cs: Optional[ContourSpec] = None,
    tp: TruncationPolicy = TruncationPolicy(),
) -> CentralValueResult:
    consts = _constants(inst)
    if cs is None:
        cs = default_contour(inst, kp)
    M = tp.length(consts.C, inst.coefficients)

    def cutoff_fn(y):
        v, e, _ = cutoff_values(y, inst, kp, cs, 0)
        return v, e

    own, dual, quad_err, tail_err, kind = _two_sums(inst, M, cutoff_fn, tp.tail_correction)
    value = own + consts.kappa_lambda * dual
    return CentralValueResult(
        value, "thm1", M, quad_err + tail_err, consts,
        {"quadrature_error": quad_err, "tail_error": tail_err, "tail": kind, "kernel_a": kp.a,
         "contour": cs},
    )


def central_value_thm2(
    inst: LFunctionInstance,
    kp: KernelParams = DEFAULT_KERNEL,
    tp: TruncationPolicy = TruncationPolicy(),
    c_bound: float = 5.0,
) -> CentralValueResult:
    """Sums weighted by ``g``; ``error_estimate`` carries ``c eta^{-1} C^{1/4+eps}``."""
    consts = _constants(inst)
    M = tp.length(consts.C, inst.coefficients)

    def cutoff_fn(y):
        v = np.asarray(g_cutoff(y, kp), dtype=complex)
        return v, np.full(v.shape, 4.0 * np.finfo(float).eps)

    own, dual, quad_err, tail_err, kind = _two_sums(inst, M, cutoff_fn, tp.tail_correction)
    value = own + consts.kappa_lambda * dual
    bound = c_bound / consts.eta * consts.C ** (0.25 + tp.eps)
    return CentralValueResult(
        value, "thm2", M, bound + quad_err + tail_err, consts,
        {"error_bound": bound, "tail_error": tail_err, "tail": kind, "kernel_a": kp.a},
    )


def critical_line_value(
    inst: LFunctionInstance,
    t: float,
    kp: KernelParams = DEFAULT_KERNEL,
    cs: Optional[ContourSpec] = None,
    tp: TruncationPolicy = TruncationPolicy(),
) -> CentralValueResult:
    """``L(1/2 + it)`` as the central value of the twisted instance."""
    return central_value_thm1(twist(inst, t), kp, cs, tp)


@dataclass(frozen=True)
class ConvexityReport:
    abs_value: float
    c_quarter: float
    ratio: float


def convexity_report(
    inst: LFunctionInstance,
    kp: KernelParams = DEFAULT_KERNEL,
    cs: Optional[ContourSpec] = None,
    tp: TruncationPolicy = TruncationPolicy(),
) -> ConvexityReport:
    res = central_value_thm1(inst, kp, cs, tp)
    cq = res.constants.C ** 0.25
    return ConvexityReport(abs(res.value), cq, abs(res.value) / cq)
