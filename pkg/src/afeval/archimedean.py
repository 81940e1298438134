"""Gamma-factor ratio ``F(s, pi_inf)``, the phase ``lambda`` and bound sweeps.

``F`` is realized as the exponential of half a sum of principal log-gammas.
Inside the evaluation strip every gamma argument has positive real part, so
this log-sum is continuous and ``F(0) = 1`` fixes the branch of the root.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import StripViolationError, ValidationError
from .gamma import digamma, log_gamma
from .model import LFunctionInstance, analytic_conductor, eta_min

LOG_PI = math.log(math.pi)
STRIP_MARGIN = 1e-3


@dataclass(frozen=True)
class EvaluationStrip:
    sigma_min: float
    sigma_max: float

    def __post_init__(self):
        if not self.sigma_min < 0.0 < self.sigma_max:
            raise ValidationError(f"degenerate strip ({self.sigma_min}, {self.sigma_max})")

    def contains(self, sigma) -> bool:
        sigma = np.asarray(sigma, dtype=float)
        return bool(np.all((sigma >= self.sigma_min) & (sigma <= self.sigma_max)))


def evaluation_strip(inst: LFunctionInstance, delta: float = STRIP_MARGIN) -> EvaluationStrip:
    """Abscissae where all gamma arguments of ``F`` keep ``Re > 0``."""
    half_width = 0.5 + inst.theta_low  # 1/(m^2+1) unless tempered
    lo = -half_width + delta
    hi = min(half_width, 0.5 + float(np.min(inst.mu.real))) - delta
    return EvaluationStrip(lo, hi)


def _check_strip(s: np.ndarray, inst: LFunctionInstance) -> None:
    strip = evaluation_strip(inst)
    if not strip.contains(s.real):
        bad = s.real[(s.real < strip.sigma_min) | (s.real > strip.sigma_max)].ravel()[0]
        raise StripViolationError(
            f"Re s = {bad} outside the evaluation strip [{strip.sigma_min:.6g}, {strip.sigma_max:.6g}]"
        )


def log_gamma_factor(s, mu) -> np.ndarray:
    """Principal log of ``prod_j pi^{-s/2} Gamma((s + mu_j)/2)``."""
    s_arr = np.asarray(s, dtype=complex)
    mu = np.asarray(getattr(mu, "mu", mu), dtype=complex)
    out = np.zeros_like(s_arr)
    for m_j in mu:
        arg = (s_arr + m_j) / 2.0
        if np.any(arg.real <= 0.0):
            raise StripViolationError(
                f"gamma argument (s + mu)/2 left the right half-plane for mu = {m_j!r}"
            )
        out = out + (-(s_arr / 2.0) * LOG_PI + log_gamma(arg))
    return out.item() if np.ndim(s) == 0 else out


def log_F(s, inst: LFunctionInstance, check: bool = True) -> np.ndarray:
    """``log F(s, pi_inf)``; each bracket vanishes identically at ``s = 0``."""
    s_arr = np.asarray(s, dtype=complex)
    if check:
        _check_strip(s_arr, inst)
    mu = inst.mu
    mu_bar = np.conj(mu)
    own = log_gamma_factor(0.5 + s_arr, mu) - log_gamma_factor(0.5, mu)
    dual = log_gamma_factor(0.5 - s_arr, mu_bar) - log_gamma_factor(0.5, mu_bar)
    out = 0.5 * (s_arr * math.log(inst.conductor_N) + own - dual)
    return out.item() if np.ndim(s) == 0 else out


def F_ratio(s, inst: LFunctionInstance):
    out = np.exp(np.asarray(log_F(s, inst)))
    return out.item() if np.ndim(s) == 0 else out


def log_normalized_ratio(s, inst: LFunctionInstance, check: bool = True):
    """``log(C^{-s/2} F(s))``, the factor that multiplies ``x^{-s} H(s)/s``."""
    s_arr = np.asarray(s, dtype=complex)
    C = analytic_conductor(inst)
    out = np.asarray(log_F(s_arr, inst, check)) - 0.5 * s_arr * math.log(C)
    return out.item() if np.ndim(s) == 0 else out


def lambda_phase(inst: LFunctionInstance) -> complex:
    mu = inst.mu
    total = np.sum(log_gamma((0.5 + np.conj(mu)) / 2.0) - log_gamma((0.5 + mu) / 2.0))
    return complex(np.exp(total))


def kappa_lambda(inst: LFunctionInstance) -> complex:
    return inst.root_number_kappa * lambda_phase(inst)


@dataclass(frozen=True)
class Lemma2Report:
    sigma: float
    t_max: float
    max_normalized: float
    argmax_t: float


def lemma2_sweep(inst: LFunctionInstance, sigma: float, t_max: float, n_points: int) -> Lemma2Report:
    """Largest ``|C^{-s/2} F(s)| / (1+|s|)^{md sigma / 2}`` on ``Re s = sigma``."""
    t = np.linspace(-t_max, t_max, int(n_points))
    s = sigma + 1j * t
    lp = np.asarray(log_normalized_ratio(s, inst)).real
    ratio = np.exp(lp - (inst.md * sigma / 2.0) * np.log1p(np.abs(s)))
    k = int(np.argmax(ratio))
    return Lemma2Report(float(sigma), float(t_max), float(ratio[k]), float(t[k]))


@dataclass(frozen=True)
class Lemma3Report:
    t: float
    deviation: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.deviation <= self.bound


def lemma3_deviation(inst: LFunctionInstance, t: float, c: float = 10.0, eps: float = 0.1,
                     enforce_range: bool = True) -> Lemma3Report:
    """``|C^{-it/2} F(it) - 1|`` next to the small-t bound ``c |t| C^eps / eta``."""
    C = analytic_conductor(inst)
    eta = eta_min(inst)
    if enforce_range and abs(t) >= min(eta, C ** eps):
        raise ValidationError(f"|t| = {abs(t)} must be below min(eta, C^eps) = {min(eta, C ** eps):.6g}")
    lp = log_normalized_ratio(1j * float(t), inst)
    dev = abs(np.expm1(lp))
    return Lemma3Report(float(t), float(dev), c * abs(t) / eta * C ** eps)


def lemma3_slope(inst: LFunctionInstance) -> float:
    """``d/dt |C^{-it/2} F(it)|`` at ``t = 0`` from the digamma formula."""
    z = 0.25 + inst.mu / 2.0
    return 0.5 * abs(float(np.sum(digamma(z) - np.log(z)).real))
