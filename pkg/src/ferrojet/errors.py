"""Exception taxonomy for the toolkit.

Two families matter for the CLI exit-code contract: input/validation
problems (exit 1) and numerical failures (exit 2).
"""


class FerrojetError(Exception):
    """Base class for all toolkit errors."""


class InputError(FerrojetError, ValueError):
    """Invalid argument or precondition violation (CLI exit code 1)."""


class NumericalError(FerrojetError, RuntimeError):
    """A numerical procedure failed to produce a trustworthy result (exit 2)."""


# -- validation-type errors ------------------------------------------------

class OutOfRange(InputError):
    pass


class AtCodimensionTwo(InputError):
    """Parameter sits exactly on the codimension-two point (1/4, 2)."""


class NoSignChange(InputError):
    """Root bracketing failed: f(a) * f(b) >= 0."""


class DomainViolation(InputError):
    """State outside the domain of the energy functional."""


class MissingDerivativeData(InputError):
    pass


class MismatchedSystem(InputError):
    """Orbit does not belong to the system expected by the transformation."""


# -- numerical-type errors -------------------------------------------------

class NonConvergence(NumericalError):
    pass


class StepUnderflow(NumericalError):
    """Richardson extrapolation failed to stabilise."""


class ExtrapolationUnstable(NumericalError):
    pass


class WindowTooCoarse(NumericalError):
    """Scan step too large to resolve neighbouring roots."""


class WindowTooShort(NumericalError):
    """Computational window ends before the orbit tail has decayed."""


class TauDegenerate(NumericalError):
    """The normalisation constant tau_1 is numerically zero."""


class NoTurningPoint(NumericalError):
    """The requested orbit branch has no turning point."""


class NewtonDivergence(NumericalError):
    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace) if trace is not None else []


class CoefficientSignError(NumericalError):
    """Existence predicate on normal-form coefficients fails."""


class DegenerateProfile(NumericalError):
    pass
