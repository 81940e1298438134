"""Exception hierarchy.

Validation problems (bad inputs, inadmissible parameters) derive from
``ValidationError``; numerical shortfalls derive from ``NumericalFailure``.
The CLI maps the two families to exit codes 1 and 2.
"""


class AFEError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AFEError, ValueError):
    pass


class AdmissibilityError(ValidationError):
    """Archimedean parameters violate the lower bound on their real parts."""


class UnitarityError(ValidationError):
    """Root number is not of modulus one."""


class SchemaError(ValidationError):
    """Instance document does not follow the JSON schema."""


class DomainError(ValidationError):
    """Argument outside the domain of a special function."""


class StripViolationError(ValidationError):
    """A contour abscissa or gamma argument left the safe evaluation strip."""


class PoleOnContourError(ValidationError):
    """Integration line passes through the pole at s = 0."""


class CoefficientExhaustionError(ValidationError, IndexError):
    """More Dirichlet coefficients were requested than the source declares."""


class NumericalFailure(AFEError, ArithmeticError):
    """A computed error estimate exceeds the requested tolerance."""
