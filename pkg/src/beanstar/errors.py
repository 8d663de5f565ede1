"""Exception types raised across the package."""


class BeanError(Exception):
    """Base class for all package errors."""


class DomainError(BeanError, ValueError):
    """An argument lies outside the region where an operation is defined."""


class ParameterError(BeanError, ValueError):
    """A class parameter (A, B, alpha, gamma, k, ...) is out of range."""


class SingularityError(BeanError, ZeroDivisionError):
    """Evaluation hit w = 0 or w**2 = 2 where the inverse map blows up."""


class NoRootError(BeanError, RuntimeError):
    """No sign change and no touching zero was found on the scanned interval."""


class MultiplicityError(BeanError, RuntimeError):
    """More than one interior critical point was detected where one is expected."""


class SeriesAccuracyError(BeanError, ArithmeticError):
    """Truncated power series is not accurate enough at the requested radius."""


class QuadratureError(BeanError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance."""
