"""Exception taxonomy shared by all solver modules.

ValidationError covers malformed inputs, DomainError covers requests that
fall outside the model's domain of validity (e.g. inversions at or above
the semi-classical threshold), and ConvergenceFailure flags an internal
solver bug.  The CLI maps these onto exit codes 2, 3 and 4.
"""


class RabisplitError(Exception):
    """Base class for all rabisplit errors."""


class ValidationError(RabisplitError):
    """Invalid parameter values or malformed configuration input."""


class NonPositiveRate(ValidationError):
    """A decay rate or squared coupling strength is zero or negative."""


class ZeroEmitters(ValidationError):
    """Emitter count below one."""


class DomainError(RabisplitError):
    """Request outside the model's domain of validity."""


class AboveThreshold(DomainError):
    """Inversion at or above the semi-classical threshold: the linearized
    steady state does not exist and the closed forms diverge."""


class SplitSpectrum(DomainError):
    """FWHM requested for a double-peaked spectrum; report the splitting
    instead."""


class UnstableSystem(DomainError):
    """Linearized field/polarization dynamics do not decay; no stationary
    spectrum can be simulated."""


class StepTooLarge(DomainError):
    """Integrator step too coarse for the fastest rate in the system."""


class ConvergenceFailure(RabisplitError):
    """A bracketed scalar solve failed to converge.  Should be unreachable
    for monotone residuals; treat as an internal bug."""
