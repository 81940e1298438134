"""Independent reference values for tests and fixtures.

Nothing here touches the cutoff, archimedean or gamma modules: gamma values
come from mpmath and Hurwitz zeta is summed with its own Euler-Maclaurin
routine, so agreement with the main evaluator is a genuine cross-check.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
import math
from typing import Optional

import mpmath
import numpy as np

from .errors import CoefficientExhaustionError, DomainError, ValidationError
from .model import CoefficientSource, LFunctionInstance


# -- Dirichlet characters ----------------------------------------------------

@dataclass(frozen=True)
class DirichletCharacter:
    """Character table ``values[a % q]`` (zero off the unit group)."""

    q: int
    values: tuple[complex, ...]
    name: str = ""

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        q = self.q
        if len(vals) != q:
            raise ValidationError(f"character table has {len(vals)} entries, expected {q}")
        for a in range(q):
            unit = math.gcd(a, q) == 1
            if unit and abs(abs(vals[a]) - 1.0) > 1e-12:
                raise ValidationError(f"chi({a}) = {vals[a]} is not a root of unity")
            if not unit and vals[a] != 0:
                raise ValidationError(f"chi({a}) must vanish since gcd({a}, {q}) > 1")
        for a in range(q):
            for b in range(q):
                if abs(vals[a * b % q] - vals[a] * vals[b]) > 1e-12:
                    raise ValidationError(f"table is not multiplicative at ({a}, {b})")

    def __call__(self, n: int) -> complex:
        return self.values[n % self.q]

    @property
    def parity(self) -> str:
        return "odd" if abs(self(self.q - 1) + 1) < 1e-12 else "even"

    @property
    def delta(self) -> int:
        return 1 if self.parity == "odd" else 0

    def is_principal(self) -> bool:
        return all(abs(v - 1) < 1e-12 for a, v in enumerate(self.values) if math.gcd(a, self.q) == 1)

    def conductor(self) -> int:
        """Smallest d | q such that chi is trivial on units that are 1 mod d."""
        for d in range(1, self.q + 1):
            if self.q % d:
                continue
            if all(abs(self(a) - 1) < 1e-12 for a in range(1, self.q)
                   if math.gcd(a, self.q) == 1 and a % d == 1 % d):
                return d
        return self.q

    def is_primitive(self) -> bool:
        return self.conductor() == self.q

    def conj(self) -> "DirichletCharacter":
        return DirichletCharacter(self.q, tuple(v.conjugate() for v in self.values), self.name + "~")

    def coefficients(self, n_max: int) -> np.ndarray:
        reps = -(-n_max // self.q) + 1
        period = np.array(self.values[1:] + self.values[:1], dtype=complex)
        return np.tile(period, reps)[:n_max]


def legendre_character(p: int) -> DirichletCharacter:
    vals = [0] * p
    for a in range(1, p):
        vals[a] = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
    return DirichletCharacter(p, tuple(vals), f"legendre-{p}")


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    raise ValidationError(f"no primitive root mod {p}")


def power_character(p: int, j: int) -> DirichletCharacter:
    """``chi(g^k) = exp(2 pi i j k / (p-1))`` for the least primitive root g."""
    g = _primitive_root(p)
    vals = [0j] * p
    for k in range(p - 1):
        vals[pow(g, k, p)] = cmath.exp(2j * math.pi * j * k / (p - 1))
    return DirichletCharacter(p, tuple(vals), f"power-{p}-{j}")


def kronecker_character(q: int) -> DirichletCharacter:
    """Real primitive characters mod 4 and 8 (``chi_{-4}``, ``chi_8``, ``chi_{-8}``)."""
    tables = {
        4: (0, 1, 0, -1),
        8: (0, 1, 0, -1, 0, -1, 0, 1),
        -8: (0, 1, 0, 1, 0, -1, 0, -1),
    }
    vals = tables[q]
    return DirichletCharacter(len(vals), vals, f"kronecker-{q}")


def gauss_sum(chi: DirichletCharacter) -> complex:
    q = chi.q
    return sum(chi(a) * cmath.exp(2j * math.pi * a / q) for a in range(1, q + 1))


def gauss_sum_root_number(chi: DirichletCharacter) -> complex:
    """``tau(chi) / (i^delta sqrt q)`` for primitive chi."""
    if not chi.is_primitive():
        raise ValidationError(f"character mod {chi.q} is not primitive")
    return gauss_sum(chi) / ((1j ** chi.delta) * math.sqrt(chi.q))


# -- Hurwitz zeta and Dirichlet L-values ---------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_over_factorial(count: int) -> tuple[float, ...]:
    return tuple(float(mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j)) for j in range(1, count + 1))


def hurwitz_zeta(s: complex, alpha: float, cutoff: Optional[int] = None, terms: int = 15) -> complex:
    """``zeta(s, alpha)`` by Euler-Maclaurin after ``cutoff`` explicit terms.

    About 1e-12 relative for ``|s| <= 100`` and ``Re s >= -3``. Further left
    the explicit terms grow like ``k^{-Re s}`` and cancel in double precision.
    """
    s = complex(s)
    if s == 1:
        raise DomainError("Hurwitz zeta has a pole at s = 1")
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    if cutoff is None:
        # for Re s < 0 the explicit terms grow, so keep the head short
        cutoff = int(abs(s)) + 30 if s.real >= 0 else max(8, int(abs(s) / 2))
    head = [(k + alpha) ** (-s) for k in range(cutoff)]
    w = cutoff + alpha
    tail = [w ** (1 - s) / (s - 1), 0.5 * w ** (-s)]
    rising = s  # s (s+1) ... (s + 2j - 2)
    wpow = w ** (-s - 1)
    for j, b in enumerate(_bernoulli_over_factorial(terms), start=1):
        tail.append(b * rising * wpow)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        wpow /= w * w
    re = math.fsum(z.real for z in head + tail)
    im = math.fsum(z.imag for z in head + tail)
    return complex(re, im)


def dirichlet_L(s: complex, chi: DirichletCharacter, cutoff: Optional[int] = None) -> complex:
    """``q^{-s} sum_a chi(a) zeta(s, a/q)`` for non-principal chi."""
    if chi.is_principal():
        raise ValidationError("principal character: L(s, chi) has a pole at s = 1")
    q = chi.q
    parts = [chi(a) * hurwitz_zeta(s, a / q, cutoff) for a in range(1, q + 1) if chi(a) != 0]
    total = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    return q ** (-complex(s)) * total


# -- Ramanujan tau ------------------------------------------------------------

@lru_cache(maxsize=4)
def ramanujan_tau(n_max: int) -> tuple[int, ...]:
    """``tau(1..n_max)`` exactly, from ``Delta = q (eta^3)^8``.

    Jacobi's identity makes ``eta^3`` sparse, and the coefficients of its
    8th power follow from the power-series recurrence
    ``n b_n = sum_k (9k - n) e_k b_{n-k}`` in exact integers.
    """
    if n_max > 10 ** 5:
        raise ValidationError("n_max is limited to 10^5")
    size = n_max  # b_0 .. b_{n_max-1}
    tri = []
    k = 0
    while k * (k + 1) // 2 < size:
        tri.append((k * (k + 1) // 2, (-1) ** k * (2 * k + 1)))
        k += 1
    tri = tri[1:]
    b = [0] * size
    if size:
        b[0] = 1
    for n in range(1, size):
        acc = 0
        for idx, e in tri:
            if idx > n:
                break
            acc += (9 * idx - n) * e * b[n - idx]
        b[n] = acc // n
    return tuple(b)


def ramanujan_coefficients(n_max: int) -> CoefficientSource:
    """Unitarily normalized ``a_n = tau(n) / n^{11/2}``."""
    tau = ramanujan_tau(n_max)
    n = np.arange(1, n_max + 1, dtype=float)
    return CoefficientSource(np.array([float(t) for t in tau]) / n ** 5.5)


def brute_force_tau(n_max: int) -> list[int]:
    """Direct expansion of ``q prod_k (1 - q^k)^24``; slow, for small n only."""
    poly = [1] + [0] * (n_max - 1)
    for k in range(1, n_max):
        for _ in range(24):
            for i in range(n_max - 1, k - 1, -1):
                poly[i] -= poly[i - k]
    return poly


# -- classical incomplete-gamma expansion ---------------------------------------

def smoothed_sum_oracle(inst: LFunctionInstance, dps: int = 30, cutoff_level: float = 1e-22) -> complex:
    """Central value from the classical incomplete-gamma expansion.

    Supported gamma factors: a single ``Gamma_R(s + mu)`` (md = 1), or two
    factors with parameters differing by 1, which merge into one
    ``Gamma_C`` by the duplication formula. Twisted instances are handled
    through their shifted parameters and ``n^{-it}`` coefficient weights,
    as long as the shift is small enough for the sums not to cancel.
    """
    mu = [complex(x) for x in inst.arch.mu]
    N = inst.conductor_N
    # The weights grow like exp(pi |Im z| / 2) and the two sums cancel to
    # that order, so a double-precision root number caps the accuracy.
    im_z = max(abs(m.imag) for m in mu) / (2 if len(mu) == 1 else 1)
    if math.pi * im_z / 2 > math.log(1e6):
        raise DomainError(f"incomplete-gamma expansion is ill-conditioned for |Im z| = {im_z:.3g}")
    with mpmath.workdps(dps):
        if len(mu) == 1:
            z = mpmath.mpc((0.5 + mu[0]) / 2)

            def X(n):
                return mpmath.pi * n * n / N
        elif len(mu) == 2 and abs(abs(mu[1] - mu[0]) - 1) < 1e-14 and abs((mu[1] - mu[0]).imag) < 1e-14:
            lo = min(mu, key=lambda v: v.real)
            z = mpmath.mpc(0.5 + lo)

            def X(n):
                return 2 * mpmath.pi * n / mpmath.sqrt(N)
        else:
            raise NotImplementedError("oracle supports md = 1 or a duplicable pair of gamma factors")

        zb = mpmath.conj(z)
        gz, gzb = mpmath.gamma(z), mpmath.gamma(zb)
        lam = gzb / gz
        kappa = mpmath.mpc(inst.root_number_kappa)
        t = inst.twist_t
        src = inst.coefficients
        own = mpmath.mpc(0)
        dual = mpmath.mpc(0)
        n = 0
        while True:
            n += 1
            x = X(n)
            w1 = mpmath.gammainc(z, x) / gz
            w2 = mpmath.gammainc(zb, x) / gzb
            if n > 1 and abs(w1) + abs(w2) < cutoff_level:
                break
            if n > len(src):
                raise CoefficientExhaustionError(f"oracle needs more than {len(src)} coefficients")
            a = mpmath.mpc(src[n])
            tw = mpmath.power(n, -1j * t) if t else 1
            own += a * tw * w1 / mpmath.sqrt(n)
            dual += mpmath.conj(a * tw) * w2 / mpmath.sqrt(n)
        return complex(own + kappa * lam * dual)


def dirichlet_central_value(chi: DirichletCharacter, t: float = 0.0) -> complex:
    return dirichlet_L(0.5 + 1j * t, chi)
