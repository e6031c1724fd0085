"""Exception hierarchy for the oscilla package.

Everything raised deliberately by the library derives from OscillaError so
callers can catch one type at the boundary. Input validation failures raise
ParameterError (a ValueError subclass, so idiomatic try/except ValueError
still works).
"""
from __future__ import annotations


class OscillaError(Exception):
    """Base class for all errors raised by oscilla."""


class ParameterError(OscillaError, ValueError):
    """Invalid argument: out-of-range parameter, malformed spec string, bad tolerance."""


class NonIntegrableError(ParameterError):
    """Requested density is not integrable on (0, 1)."""


class QuadratureError(OscillaError):
    """Quadrature failed to meet the requested tolerance within its budget.

    Carries the best estimate so far in .value and the error estimate in
    .error_estimate; both may be useful for diagnostics even though the
    result did not converge.
    """

    def __init__(self, message: str, value: float | None = None,
                 error_estimate: float | None = None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class ConsistencyError(OscillaError):
    """Two independent evaluation routes disagree beyond tolerance.

    Raised when the direct quadrature of a reflected transform and the
    trigonometric combination of the unreflected transforms differ by more
    than can be explained by their error estimates.
    """

    def __init__(self, message: str, direct: float | None = None,
                 via_identity: float | None = None):
        super().__init__(message)
        self.direct = direct
        self.via_identity = via_identity


class SeriesRegimeError(ParameterError):
    """Series evaluation requested outside its supported argument range."""


class SeriesCancellationError(OscillaError):
    """Alternating series lost too many digits to cancellation to meet tolerance."""


class PoleProximityError(ParameterError):
    """Evaluation point is too close to a pole of a partial-fraction expansion."""
