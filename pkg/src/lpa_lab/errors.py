"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LpaError(Exception):
    """Base class for all library errors."""


class InputError(LpaError):
    """Malformed or out-of-contract input (CLI exit code 1)."""


class IndexOutOfRange(InputError):
    pass


class ZeroVertices(InputError):
    pass


class NegativeMultiplicity(InputError):
    pass


class TooLarge(InputError):
    pass


class TooManyVertices(TooLarge):
    pass


class NotSquare(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class NoSuchEdge(InputError):
    pass


class RangeIsSink(InputError):
    pass


class LoopShiftUnsupported(InputError):
    pass


class BadGraphFile(InputError):
    pass


class UnknownCommand(InputError):
    pass


class Overflow(LpaError, OverflowError):
    """Fixed-width arithmetic ran out of range; retry with big integers."""
