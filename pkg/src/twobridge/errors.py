"""Exception hierarchy shared across the package."""


class TwoBridgeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TwoBridgeError, ValueError):
    """Invalid user-facing input (bad fraction, bad continued fraction, ...)."""


class NotAKnot(InputError):
    """The fraction p/q has p even: a two-bridge link, not a knot."""


class InvalidFraction(InputError):
    pass


class InvalidCF(InputError):
    pass


class InvalidSlope(InputError):
    pass


class OutOfRegion(InputError):
    pass


class GridViolation(TwoBridgeError, ValueError):
    """An exponent would leave the half-integer grid (or the integer grid where required)."""


class ZeroDivisor(TwoBridgeError, ZeroDivisionError):
    pass


class DivisionByZero(TwoBridgeError, ZeroDivisionError):
    """A continued-fraction tail evaluated to 0 where its reciprocal was needed."""


class MultiComponent(TwoBridgeError):
    pass


class NotALink(InputError):
    pass


class DegenerateAlexander(TwoBridgeError, ValueError):
    pass


class HypothesisViolation(TwoBridgeError):
    pass


class ParseError(TwoBridgeError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValidationError(TwoBridgeError, ValueError):
    def __init__(self, entry: str, message: str):
        self.entry = entry
        super().__init__(f"{entry}: {message}")
