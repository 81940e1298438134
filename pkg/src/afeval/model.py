"""L-function instances and their scalar invariants.

Coefficients use the unitary (analytic) normalization: the functional
equation relates ``s`` and ``1 - s`` and the central point is ``s = 1/2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
import math
from typing import Optional, Sequence

import numpy as np

from .errors import (
    AdmissibilityError,
    CoefficientExhaustionError,
    UnitarityError,
    ValidationError,
)

KAPPA_TOL = 1e-12
ADMISSIBILITY_SLACK = 1e-12


def lrs_lower_bound(m: int) -> float:
    """Unconditional lower bound for ``Re mu_j`` on GL(m): ``1/(m^2+1) - 1/2``."""
    return 1.0 / (m * m + 1) - 0.5


@dataclass(frozen=True, eq=False)
class CoefficientSource:
    """Finite list of Dirichlet coefficients ``a_1, a_2, ...``.

    ``period`` declares that ``a_{n+period} = a_n`` for all n; the evaluator
    then corrects truncated sums analytically instead of relying on decay.
    """

    a: np.ndarray
    period: Optional[int] = None

    def __post_init__(self):
        arr = np.array(self.a, dtype=complex).ravel()
        arr.setflags(write=False)
        object.__setattr__(self, "a", arr)
        if self.period is not None:
            p = int(self.period)
            if p < 1:
                raise ValidationError(f"period must be positive, got {p}")
            object.__setattr__(self, "period", p)
            n = min(len(arr), 3 * p)
            if n > p and not np.array_equal(arr[p:n], arr[: n - p]):
                raise ValidationError(f"coefficients are not periodic with period {p}")

    @property
    def declared_length(self) -> int:
        return len(self.a)

    def __len__(self) -> int:
        return len(self.a)

    def __getitem__(self, n: int) -> complex:
        """1-based access; never pads with zeros."""
        if not 1 <= n <= len(self.a):
            raise CoefficientExhaustionError(
                f"coefficient a_{n} requested but only {len(self.a)} are declared"
            )
        return complex(self.a[n - 1])

    def take(self, n_max: int) -> np.ndarray:
        if n_max > len(self.a):
            raise CoefficientExhaustionError(
                f"{n_max} coefficients requested but only {len(self.a)} are declared"
            )
        return self.a[:n_max]

    def periodic_values(self, n: np.ndarray) -> np.ndarray:
        """Coefficients at arbitrary indices through the declared period."""
        if self.period is None:
            raise ValidationError("coefficient source has no declared period")
        if len(self.a) < self.period:
            raise CoefficientExhaustionError("fewer coefficients than one full period")
        return self.a[(np.asarray(n) - 1) % self.period]

    def conj(self) -> "CoefficientSource":
        return CoefficientSource(np.conj(self.a), self.period)

    def same_as(self, other: "CoefficientSource") -> bool:
        return self.period == other.period and np.array_equal(self.a, other.a)


@dataclass(frozen=True)
class ArchimedeanParams:
    mu: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(complex(x) for x in self.mu))

    def __len__(self) -> int:
        return len(self.mu)

    def as_array(self) -> np.ndarray:
        return np.array(self.mu, dtype=complex)

    def conj(self) -> "ArchimedeanParams":
        return ArchimedeanParams(tuple(x.conjugate() for x in self.mu))


@dataclass(frozen=True, eq=False)
class LFunctionInstance:
    """Data of ``L(s, pi)`` on GL(m) over a degree-d field.

    ``twist_t`` records a shift ``s -> s + i t`` applied through :func:`twist`;
    the evaluator multiplies coefficients by ``n^{-i t}`` accordingly.
    ``tempered`` raises the admissibility bound on ``Re mu_j`` to 0.
    """

    label: str
    m: int
    d: int
    conductor_N: int
    root_number_kappa: complex
    arch: ArchimedeanParams
    coefficients: CoefficientSource
    twist_t: float = 0.0
    tempered: bool = False

    def __post_init__(self):
        if isinstance(self.arch, (list, tuple)):
            object.__setattr__(self, "arch", ArchimedeanParams(tuple(self.arch)))
        if not isinstance(self.coefficients, CoefficientSource):
            object.__setattr__(self, "coefficients", CoefficientSource(self.coefficients))
        object.__setattr__(self, "root_number_kappa", complex(self.root_number_kappa))
        object.__setattr__(self, "twist_t", float(self.twist_t))
        self.validate()

    @property
    def md(self) -> int:
        return self.m * self.d

    @property
    def mu(self) -> np.ndarray:
        return self.arch.as_array()

    @property
    def theta_low(self) -> float:
        return 0.0 if self.tempered else lrs_lower_bound(self.m)

    def validate(self) -> None:
        if int(self.m) != self.m or self.m < 1 or int(self.d) != self.d or self.d < 1:
            raise ValidationError(f"m and d must be positive integers, got m={self.m}, d={self.d}")
        if int(self.conductor_N) != self.conductor_N or self.conductor_N < 1:
            raise ValidationError(f"conductor must be a positive integer, got {self.conductor_N}")
        if len(self.arch) != self.md:
            raise ValidationError(
                f"expected m*d = {self.md} Archimedean parameters, got {len(self.arch)}"
            )
        k = abs(self.root_number_kappa)
        if not math.isfinite(k) or abs(k - 1.0) > KAPPA_TOL:
            raise UnitarityError(f"root number must have modulus 1, got |kappa| = {k!r}")
        low = self.theta_low
        for j, mu in enumerate(self.arch.mu, start=1):
            if not (math.isfinite(mu.real) and math.isfinite(mu.imag)):
                raise AdmissibilityError(f"mu_{j} = {mu!r} is not finite")
            if mu.real < low - ADMISSIBILITY_SLACK:
                bound = "tempered bound Re mu >= 0" if self.tempered else f"Re mu >= 1/(m^2+1) - 1/2 = {low:.6g}"
                raise AdmissibilityError(
                    f"admissibility bound violated by mu_{j} = {mu!r}: need {bound}"
                )
            if mu == -0.5:
                raise AdmissibilityError(f"mu_{j} = -1/2 puts a gamma pole at the central point")

    def contragredient(self) -> "LFunctionInstance":
        """Dual instance: conjugated parameters, coefficients and root number.

        The twist flips sign because ``conj(n^{-it}) = n^{it}``.
        """
        return replace(
            self,
            label=self.label + "~",
            root_number_kappa=self.root_number_kappa.conjugate(),
            arch=self.arch.conj(),
            coefficients=self.coefficients.conj(),
            twist_t=-self.twist_t,
        )


def analytic_conductor(inst: LFunctionInstance) -> float:
    """``(N / pi^{md}) * prod_j |1/4 + mu_j/2|``."""
    factors = np.abs(0.25 + inst.mu / 2.0)
    return float(inst.conductor_N / math.pi ** inst.md * np.prod(factors))


def eta_min(inst: LFunctionInstance) -> float:
    return float(np.min(np.abs(0.25 + inst.mu / 2.0)))


def twist(inst: LFunctionInstance, t: float) -> LFunctionInstance:
    """Instance describing ``s -> L(s + i t, pi)``.

    Conductor and coefficients are kept and every ``mu_j`` moves to
    ``mu_j + i t``. Because each gamma factor carries ``pi^{-s/2}`` rather
    than ``pi^{-(s+mu_j)/2}``, the root number picks up
    ``(N / pi^{md})^{-it}``, not just ``N^{-it}``.
    """
    t = float(t)
    if t == 0.0:
        return inst
    angle = t * (math.log(inst.conductor_N) - inst.md * math.log(math.pi))
    phase = complex(math.cos(angle), -math.sin(angle))
    return replace(
        inst,
        root_number_kappa=inst.root_number_kappa * phase,
        arch=ArchimedeanParams(tuple(mu + 1j * t for mu in inst.arch.mu)),
        twist_t=inst.twist_t + t,
    )


@dataclass(frozen=True)
class GrowthReport:
    partial_sum: float
    reference: float
    ratio: float
    a1_normalized: bool = field(default=True)


def coefficient_growth_diagnostic(src: CoefficientSource, x: int, eps: float) -> GrowthReport:
    """Compare ``sum_{n<=x} |a_n|`` with ``x^{1+eps}``. Never rejects."""
    x = int(x)
    if x < 0:
        raise ValidationError("x must be non-negative")
    vals = src.take(x)
    partial = math.fsum(np.abs(vals))
    reference = float(x) ** (1.0 + eps) if x > 0 else 0.0
    ratio = partial / reference if reference > 0 else 0.0
    a1_ok = len(src) == 0 or src.a[0] == 1
    return GrowthReport(partial, reference, ratio, a1_ok)


def make_instance(
    label: str,
    m: int,
    d: int,
    N: int,
    kappa: complex,
    mu: Sequence[complex],
    coefficients,
    period: Optional[int] = None,
    **kwargs,
) -> LFunctionInstance:
    src = coefficients if isinstance(coefficients, CoefficientSource) else CoefficientSource(coefficients, period)
    return LFunctionInstance(label, m, d, N, kappa, ArchimedeanParams(tuple(mu)), src, **kwargs)
