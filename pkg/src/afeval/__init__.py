"""Central values of L-functions via smoothed approximate functional equations."""

from .archimedean import F_ratio, evaluation_strip, kappa_lambda, lambda_phase
from .cutoff import ContourSpec, default_contour, f_at, f_derivative
from .errors import AFEError, NumericalFailure, ValidationError
from .evaluator import (
    CentralValueResult,
    TruncationPolicy,
    central_value_thm1,
    central_value_thm2,
    critical_line_value,
)
from .fixtures import builtin
from .kernel import KernelParams
from .model import LFunctionInstance, analytic_conductor, eta_min, make_instance, twist

__version__ = "0.1.0"

__all__ = [
    "AFEError", "CentralValueResult", "ContourSpec", "F_ratio", "KernelParams", "LFunctionInstance",
    "NumericalFailure", "TruncationPolicy", "ValidationError", "analytic_conductor", "builtin",
    "central_value_thm1", "central_value_thm2", "critical_line_value", "default_contour", "eta_min",
    "evaluation_strip", "f_at", "f_derivative", "kappa_lambda", "lambda_phase", "make_instance", "twist",
]
