"""Exception hierarchy shared by every fracvib module."""


class FracVibError(Exception):
    """Base class for all errors raised by fracvib."""


class ProfileSyntaxError(FracVibError, ValueError):
    """An order-profile expression could not be parsed."""

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownIdentifier(FracVibError, ValueError):
    """An expression refers to a name other than ``w`` or a known function."""

    def __init__(self, name, position):
        self.name = name
        self.position = position
        super().__init__(f"unknown identifier {name!r} at position {position}")


class NonFiniteResult(FracVibError, ArithmeticError):
    """Evaluation produced inf or nan (division by zero, overflow)."""


class NonPositiveFrequency(FracVibError, ValueError):
    """A frequency-domain quantity was requested at omega <= 0."""


class OrderOutOfRange(FracVibError, ValueError):
    """A fractional order left its admissible open interval."""

    def __init__(self, name, value, omega, bounds):
        self.name = name
        self.value = value
        self.omega = omega
        self.bounds = bounds
        super().__init__(
            f"{name}={value!r} at omega={omega!r} is outside {bounds}"
        )


class RestrictionError(FracVibError):
    """A restricted effective quantity is undefined at this frequency."""

    status = None


class MassNonPositive(RestrictionError):
    status = "MassNonPositive"


class OverCritical(RestrictionError):
    status = "OverCritical"


class StiffnessZero(RestrictionError):
    status = "StiffnessZero"


class ResonanceSingular(FracVibError, ZeroDivisionError):
    """The transfer-function denominator vanished."""


class NonzeroPrimaryDamping(FracVibError, ValueError):
    """Rayleigh decomposition requested for a spec with c != 0."""


class ConfigError(FracVibError, ValueError):
    """A sweep configuration is malformed or violates a domain rule."""


class UnknownFigureId(FracVibError, LookupError):
    """No catalog entry for the requested figure panel."""
