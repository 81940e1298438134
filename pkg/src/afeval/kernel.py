"""Gaussian Mellin pair used to smooth the Dirichlet series.

With ``H(s) = exp(a s^2)`` the multiplicative bump ``h`` and the cutoff
``g = (1/2) erfc(log x / (2 sqrt a))`` are all closed form, and
``-x g'(x) = h(x)``, ``g(x) + g(1/x) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np
from scipy import special

from .errors import DomainError, ValidationError


@dataclass(frozen=True)
class KernelParams:
    a: float = 0.25

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise ValidationError(f"kernel width a must be positive, got {self.a!r}")


DEFAULT_KERNEL = KernelParams()


def _scalar_or_array(x, out):
    return out.item() if np.ndim(x) == 0 else out


def H_mellin(s, p: KernelParams = DEFAULT_KERNEL):
    """``exp(a s^2)``; entire, ``H(0) = 1``, even, real on both axes."""
    s = np.asarray(s, dtype=complex)
    return _scalar_or_array(s, np.exp(p.a * s * s))


def _positive(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("argument must be positive")
    return x


def h_test(x, p: KernelParams = DEFAULT_KERNEL):
    x_arr = _positive(x)
    u = np.log(x_arr)
    out = np.exp(-u * u / (4.0 * p.a)) / (2.0 * math.sqrt(p.a * math.pi))
    return _scalar_or_array(x, out)


def erfc_real(u):
    """Complementary error function (scipy's, accurate to a few ulp)."""
    u_arr = np.asarray(u, dtype=float)
    return _scalar_or_array(u, special.erfc(u_arr))


def g_cutoff(x, p: KernelParams = DEFAULT_KERNEL):
    x_arr = _positive(x)
    out = 0.5 * special.erfc(np.log(x_arr) / (2.0 * math.sqrt(p.a)))
    return _scalar_or_array(x, out)


def g_tail_point(p: KernelParams, level: float) -> float:
    """Smallest ``x >= 1`` with ``g(x) <= level``."""
    u = special.erfcinv(2.0 * level)
    return math.exp(2.0 * math.sqrt(p.a) * max(u, 0.0))
