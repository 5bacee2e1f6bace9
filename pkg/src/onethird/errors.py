"""Exception types shared across the package."""


class OneThirdError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(OneThirdError, ZeroDivisionError):
    """A rational function was evaluated at a zero of its denominator."""


class DegenerateHexagon(OneThirdError, ValueError):
    """A family instantiation produced a hexagon side smaller than 1."""


class DomainError(OneThirdError, ValueError):
    """A rhombus position lies outside the range where the triple sum is valid."""


class OutOfRange(OneThirdError, ValueError):
    """A probability argument was not in [0, 1]."""


class LimitExceeded(OneThirdError, RuntimeError):
    """Brute-force enumeration would visit more tilings than allowed."""


class NoFit(OneThirdError):
    """No rational function within the degree budget reproduces the data."""


class DegenerateSystem(NoFit):
    """Every interpolation candidate had a denominator vanishing at a sample."""
