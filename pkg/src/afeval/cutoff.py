"""Cutoff function ``f`` and its derivatives by vertical-line quadrature.

    f(x) = (1/2 pi i) int_{(sigma)} x^{-s} C^{-s/2} F(s) H(s) ds / s

is approximated by the trapezoid rule in ``t = Im s``. The integrand is
analytic in a band around the line and decays like a Gaussian, so the rule
converges geometrically. The node spacing is tied to the distance from the
line to the nearest singularity (the pole at 0 or a branch point of ``F``),
and the truncation ``T`` to the Gaussian tail.

For ``sigma < 0`` the residue 1 at ``s = 0`` is added back, so both sides of
the pole describe the same function.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
import threading
from typing import Optional

import numpy as np

from .archimedean import evaluation_strip, log_normalized_ratio
from .errors import PoleOnContourError, StripViolationError, ValidationError
from .kernel import DEFAULT_KERNEL, KernelParams
from .model import LFunctionInstance

MACHINE_EPS = np.finfo(float).eps
_CHUNK = 512


@dataclass(frozen=True)
class ContourSpec:
    sigma: float
    step: float
    half_width: float
    tol: float

    def __post_init__(self):
        if not (self.step > 0 and self.half_width > 0 and self.tol > 0):
            raise ValidationError("contour step, half_width and tol must be positive")


@dataclass(frozen=True)
class CutoffEvaluation:
    value: complex
    quad_error_estimate: float
    nodes_used: int


def tail_factor(cs: ContourSpec, kp: KernelParams, md: int) -> float:
    """Gaussian tail at the truncation point against polynomial growth of the gamma ratio."""
    return math.exp(kp.a * (cs.sigma ** 2 - cs.half_width ** 2)) * (1.0 + cs.half_width) ** (
        md * abs(cs.sigma) / 2.0
    )


def singularity_distance(inst: LFunctionInstance, sigma: float, include_pole: bool = True) -> float:
    """Distance from ``Re s = sigma`` to the nearest singularity of the integrand."""
    re_min = float(np.min(inst.mu.real))
    right = 0.5 + re_min - sigma  # branch points of F at 1/2 + conj(mu_j)
    left = sigma + 0.5 + re_min  # gamma poles at -1/2 - mu_j
    d = min(right, left)
    if include_pole:
        d = min(d, abs(sigma))
    return d


def default_sigma(inst: LFunctionInstance) -> float:
    strip = evaluation_strip(inst)
    return min(1.0 / (2 * (inst.m ** 2 + 1)), strip.sigma_max / 2.0)


def default_contour(
    inst: LFunctionInstance,
    kp: KernelParams = DEFAULT_KERNEL,
    tol: float = 1e-13,
    sigma: Optional[float] = None,
    derivative: bool = False,
) -> ContourSpec:
    """Contour whose coarse (doubled-step) rule already meets ``tol``.

    The trapezoid error for a singularity at distance ``d`` is about
    ``exp(-2 pi d / step)``; the estimate compares ``step`` with ``2 step``,
    so ``step = pi d / log(10/tol)`` makes the estimate itself ~tol/10.
    """
    if sigma is None:
        sigma = default_sigma(inst)
    d = singularity_distance(inst, sigma, include_pole=not derivative)
    if d <= 0:
        raise PoleOnContourError(f"sigma = {sigma} touches a singularity of the integrand")
    logt = math.log(10.0 / tol)
    step = min(0.05, math.pi * d / logt)
    T = math.sqrt(sigma ** 2 + (logt + math.log(100.0)) / kp.a)
    cs = ContourSpec(sigma, step, T, tol)
    while tail_factor(cs, kp, inst.md) > tol / 100.0:
        T *= 1.05
        cs = ContourSpec(sigma, step, T, tol)
    return cs


def validate_contour(cs: ContourSpec, inst: LFunctionInstance, kp: KernelParams, k: int = 0) -> None:
    strip = evaluation_strip(inst)
    if not strip.contains(cs.sigma):
        raise StripViolationError(
            f"contour abscissa {cs.sigma} outside the evaluation strip "
            f"[{strip.sigma_min:.6g}, {strip.sigma_max:.6g}]"
        )
    if k == 0 and cs.sigma == 0.0:
        raise PoleOnContourError("contour Re s = 0 passes through the pole of H(s)/s")
    if tail_factor(cs, kp, inst.md) > cs.tol / 10.0:
        raise ValidationError(
            f"half_width {cs.half_width} too short: Gaussian tail exceeds tol/10 = {cs.tol / 10:.3g}"
        )


# Node values depend on the instance's Archimedean data, the kernel and the
# contour, never on x, so they are shared between all evaluation points.
_node_cache: dict = {}
_node_lock = threading.Lock()
_NODE_CACHE_MAX = 64


def _node_key(inst: LFunctionInstance, kp: KernelParams, cs: ContourSpec, k: int):
    return (inst.m, inst.d, inst.conductor_N, inst.arch.mu, inst.tempered, kp.a, cs, k)


def _nodes(inst: LFunctionInstance, kp: KernelParams, cs: ContourSpec, k: int):
    key = _node_key(inst, kp, cs, k)
    with _node_lock:
        hit = _node_cache.get(key)
    if hit is not None:
        return hit
    J = int(math.ceil(cs.half_width / cs.step))
    J += J % 2  # even, so the coarse rule keeps both ends
    t = cs.step * np.arange(-J, J + 1)
    s = cs.sigma + 1j * t
    base = np.exp(np.asarray(log_normalized_ratio(s, inst)) + kp.a * s * s)
    if k == 0:
        base = base / s
    else:
        for i in range(1, k):
            base = base * (s + i)
    base.setflags(write=False)
    s.setflags(write=False)
    with _node_lock:
        if len(_node_cache) >= _NODE_CACHE_MAX:
            _node_cache.pop(next(iter(_node_cache)))
        _node_cache[key] = (s, base)
    return s, base


def clear_cache() -> None:
    with _node_lock:
        _node_cache.clear()


def cutoff_values(
    x,
    inst: LFunctionInstance,
    kp: KernelParams = DEFAULT_KERNEL,
    cs: Optional[ContourSpec] = None,
    k: int = 0,
    add_residue: bool = True,
):
    """Vectorized ``f^{(k)}(x)`` with per-point error estimates.

    With ``add_residue=False`` and ``sigma < 0`` the bare line integral is
    returned, which is ``f - 1``. Returns ``(values, errors, nodes_used)``.
    """
    if cs is None:
        cs = default_contour(inst, kp, derivative=k > 0)
    if k < 0:
        raise ValidationError("derivative order must be non-negative")
    validate_contour(cs, inst, kp, k)
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise ValidationError("cutoff arguments must be positive")
    s, base = _nodes(inst, kp, cs, k)
    coarse = slice(0, None, 2)
    h = cs.step
    end_mag = max(abs(base[0]), abs(base[-1]))
    tail_unit = 2.0 * end_mag / (2.0 * kp.a * cs.half_width) / (2.0 * math.pi)

    flat = x.ravel()
    vals = np.empty(flat.shape, dtype=complex)
    errs = np.empty(flat.shape, dtype=float)
    for lo in range(0, flat.size, _CHUNK):
        lx = np.log(flat[lo:lo + _CHUNK])[:, None]
        terms = np.exp(-s[None, :] * lx) * base[None, :]
        fine = terms.sum(axis=1) * (h / (2.0 * math.pi))
        rough = terms[:, coarse].sum(axis=1) * (2.0 * h / (2.0 * math.pi))
        mag = np.abs(terms).sum(axis=1) * (h / (2.0 * math.pi))
        scale = np.exp(-cs.sigma * lx[:, 0])
        vals[lo:lo + _CHUNK] = fine
        errs[lo:lo + _CHUNK] = np.abs(fine - rough) + 8.0 * MACHINE_EPS * mag + tail_unit * scale

    if k > 0:
        factor = (-1.0) ** k * flat ** (-float(k))
        vals = vals * factor
        errs = errs * np.abs(factor)
    elif cs.sigma < 0 and add_residue:
        vals = vals + 1.0
    return vals.reshape(x.shape), errs.reshape(x.shape), int(s.size)


def f_at(x: float, inst: LFunctionInstance, kp: KernelParams = DEFAULT_KERNEL,
         cs: Optional[ContourSpec] = None) -> CutoffEvaluation:
    if x <= 0:
        raise ValidationError("x must be positive")
    v, e, n = cutoff_values(np.array([x]), inst, kp, cs, 0)
    return CutoffEvaluation(complex(v[0]), float(e[0]), n)


def f_derivative(x: float, k: int, inst: LFunctionInstance, kp: KernelParams = DEFAULT_KERNEL,
                 cs: Optional[ContourSpec] = None) -> CutoffEvaluation:
    if k < 1:
        raise ValidationError("use f_at for k = 0")
    if x <= 0:
        raise ValidationError("x must be positive")
    v, e, n = cutoff_values(np.array([x]), inst, kp, cs, k)
    return CutoffEvaluation(complex(v[0]), float(e[0]), n)


def decay_report(inst: LFunctionInstance, kp: KernelParams = DEFAULT_KERNEL, x_grid=None,
                 cs: Optional[ContourSpec] = None) -> list[dict]:
    """Rows of ``x, |f|, |f-1|, |f'|`` and the local log-log slope of ``|f|``."""
    x = np.asarray(x_grid, dtype=float)
    if x.ndim != 1 or x.size < 2 or np.any(np.diff(x) <= 0):
        raise ValidationError("x_grid must be a sorted 1-d grid with at least two points")
    f, _, _ = cutoff_values(x, inst, kp, cs, 0)
    fp, _, _ = cutoff_values(x, inst, kp, None, 1)
    absf = np.abs(f)
    slope = np.gradient(np.log(np.maximum(absf, 1e-300)), np.log(x))
    return [
        {"x": float(x[i]), "abs_f": float(absf[i]), "abs_f_minus_1": float(abs(f[i] - 1.0)),
         "abs_fprime": float(abs(fp[i])), "slope": float(slope[i])}
        for i in range(x.size)
    ]
