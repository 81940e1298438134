import math

import numpy as np
import pytest

from afeval.errors import CoefficientExhaustionError, ValidationError
from afeval.evaluator import (
    TruncationPolicy,
    central_value_thm1,
    central_value_thm2,
    convexity_report,
    critical_line_value,
    periodic_tail,
    truncation_length,
)
from afeval.fixtures import CHARACTERS, delta_instance, dirichlet_instance
from afeval.kernel import KernelParams, g_cutoff
from afeval.oracles import dirichlet_central_value

from pinned_constants import CONVEXITY_CEILING, THM2_C, THM2_EXPONENT
from reference_values import DELTA_HALF, DIRICHLET_HALF, DIRICHLET_HALF_PLUS_I

KERNELS = [KernelParams(a) for a in (0.25, 0.5, 1.0)]


def test_dirichlet_against_hurwitz(dirichlet):
    q = dirichlet.conductor_N
    res = central_value_thm1(dirichlet)
    assert abs(res.value - dirichlet_central_value(CHARACTERS[q]())) <= 1e-8
    assert abs(res.value - DIRICHLET_HALF[q]) <= 1e-12
    assert res.method == "thm1" and res.terms_used == 2000 and res.error_estimate >= 0
    assert res.details["tail"] == "periodic"


def test_delta_against_smoothed_oracle(delta):
    res = central_value_thm1(delta)
    assert abs(res.value - DELTA_HALF) <= 1e-6
    assert abs(res.value - DELTA_HALF) <= 1e-13
    assert res.details["tail"] == "decay"


def test_delta_wide_kernel_needs_more_terms():
    # a = 1 widens f, so 2000 terms leave a truncation error of ~5e-10 that more terms remove
    short = central_value_thm1(delta_instance(2000), KernelParams(1.0))
    longer = central_value_thm1(delta_instance(8000), KernelParams(1.0))
    assert 1e-11 < abs(short.value - DELTA_HALF) <= short.error_estimate
    assert abs(longer.value - DELTA_HALF) <= 1e-12


def test_kernel_independence(any_fixture):
    vals = [central_value_thm1(any_fixture, kp).value for kp in KERNELS]
    assert max(abs(a - b) for a in vals for b in vals) <= 1e-9


def test_kernel_independence_twisted(twisted100):
    vals = [central_value_thm1(twisted100, kp).value for kp in KERNELS]
    assert max(abs(a - b) for a in vals for b in vals) <= 1e-9


def test_self_dual_values_are_real():
    for inst in (dirichlet_instance(3), dirichlet_instance(5), dirichlet_instance(8), delta_instance()):
        res = central_value_thm1(inst)
        assert abs(res.constants.kappa_lambda.imag) <= 1e-12
        assert abs(res.value.imag) <= 1e-9


def test_unit_kappa_lambda(any_fixture, twisted100):
    for inst in (any_fixture, twisted100):
        assert abs(abs(central_value_thm1(inst).constants.kappa_lambda) - 1) <= 1e-12


def test_thm2_bound_on_twisted_fixture(twisted100):
    one = central_value_thm1(twisted100)
    two = central_value_thm2(twisted100, tp=TruncationPolicy(eps=0.1), c_bound=THM2_C)
    C, eta = two.constants.C, two.constants.eta
    assert eta == pytest.approx(50.000625)
    assert abs(one.value - two.value) <= THM2_C / eta * C ** THM2_EXPONENT
    assert two.details["error_bound"] == pytest.approx(THM2_C / eta * C ** THM2_EXPONENT)


def test_thm2_untwisted_within_bound_but_not_small(chi5):
    two = central_value_thm2(chi5, tp=TruncationPolicy(eps=0.1))
    dev = abs(two.value - DIRICHLET_HALF[5])
    assert dev <= two.details["error_bound"]
    assert dev > 1e-2  # eta = 1/4: the g-approximation is visibly off


def test_thm1_thm2_within_bound_everywhere(any_fixture):
    one = central_value_thm1(any_fixture)
    two = central_value_thm2(any_fixture, tp=TruncationPolicy(eps=0.1))
    assert abs(one.value - two.value) <= two.error_estimate


def test_thm2_weights_are_g():
    # one term, unit coefficient: value = g(1/sqrt C) (1 + kappa lambda)
    from afeval.model import analytic_conductor, make_instance
    inst = make_instance("one", 1, 1, 1, 1.0, [0.0], [1.0, 0.0])
    res = central_value_thm2(inst, tp=TruncationPolicy(hard_cap=1, tail_correction=False))
    assert res.value == pytest.approx(2 * g_cutoff(1 / math.sqrt(analytic_conductor(inst))), rel=1e-15)
    assert g_cutoff(1.0) == 0.5


def test_critical_line_t0_identical(chi5):
    a = critical_line_value(chi5, 0.0)
    b = central_value_thm1(chi5)
    assert a.value == b.value and a.terms_used == b.terms_used


@pytest.mark.parametrize("t", [1.0, -1.0])
def test_critical_line_against_hurwitz(dirichlet, t):
    q = dirichlet.conductor_N
    v = critical_line_value(dirichlet, t).value
    assert abs(v - dirichlet_central_value(CHARACTERS[q](), t)) <= 1e-8
    assert abs(v - DIRICHLET_HALF_PLUS_I[(q, int(t))]) <= 1e-12


def test_critical_line_high(chi5):
    from reference_values import DIRICHLET_5_T100
    assert abs(critical_line_value(chi5, 100.0).value - DIRICHLET_5_T100) <= 1e-8


def test_critical_line_conjugation_real_fixtures():
    for inst in (dirichlet_instance(5), dirichlet_instance(4), delta_instance()):
        for t in (0.7, 3.0):
            a = critical_line_value(inst, t).value
            b = critical_line_value(inst, -t).value
            assert abs(a - b.conjugate()) <= 1e-9


def test_convexity_ratio(any_fixture):
    rep = convexity_report(any_fixture)
    assert rep.ratio <= CONVEXITY_CEILING
    other = convexity_report(any_fixture, KernelParams(1.0))
    assert abs(rep.ratio - other.ratio) <= 1e-9


def test_truncation_length_examples():
    assert truncation_length(100, 1e-300) == 10
    assert truncation_length(1.0, 0.3) == 10
    assert truncation_length(10.5 / math.pi ** 2, 0.25) == 10
    assert math.ceil((10.5 / math.pi ** 2) ** 0.75) == 2
    assert truncation_length(1e4, 0.25) == 1000
    with pytest.raises(ValidationError):
        truncation_length(2.0, 0.0)


def test_policy_validation_and_exhaustion():
    with pytest.raises(ValidationError):
        TruncationPolicy(eps=-1)
    with pytest.raises(ValidationError):
        TruncationPolicy(mode="everything")
    with pytest.raises(CoefficientExhaustionError):
        central_value_thm1(delta_instance(5), tp=TruncationPolicy(mode="corollary1"))
    with pytest.raises(CoefficientExhaustionError):
        central_value_thm1(delta_instance(50), tp=TruncationPolicy(hard_cap=60))
    res = central_value_thm1(delta_instance(50), tp=TruncationPolicy(mode="corollary1"))
    assert res.terms_used == 10


def test_truncation_stability_delta():
    inst = delta_instance(800)
    short = central_value_thm1(inst, tp=TruncationPolicy(hard_cap=40))
    long = central_value_thm1(inst, tp=TruncationPolicy(hard_cap=80))
    assert abs(short.value - long.value) <= short.error_estimate


def test_truncation_stability_periodic(chi5):
    short = central_value_thm1(chi5, tp=TruncationPolicy(hard_cap=50))
    long = central_value_thm1(chi5, tp=TruncationPolicy(hard_cap=100))
    assert abs(short.value - long.value) <= short.error_estimate
    assert abs(short.value - DIRICHLET_HALF[5]) <= 1e-8


def test_tail_correction_matters(chi5):
    plain = central_value_thm1(chi5, tp=TruncationPolicy(hard_cap=100, tail_correction=False))
    fixed = central_value_thm1(chi5, tp=TruncationPolicy(hard_cap=100))
    assert abs(plain.value - DIRICHLET_HALF[5]) > 1e-6
    assert abs(plain.value - DIRICHLET_HALF[5]) <= plain.error_estimate
    assert abs(fixed.value - DIRICHLET_HALF[5]) <= 1e-13


def test_periodic_tail_against_long_sum():
    c = np.array([1.0, -1.0, 0.0])  # chi_{-3} pattern starting at n = 1
    M = 30
    n = np.arange(M + 1, 400001, dtype=float)
    w = n ** -1.5
    brute = math.fsum(c[(n.astype(int) - 1) % 3] * w)
    ext = np.arange(M + 1, M + 10, dtype=float) ** -1.5
    tail, rem = periodic_tail(c, M, ext)
    # brute force is itself truncated at 4e5; its own tail is below 1e-8
    assert abs(tail - brute) <= rem + 1e-8
