"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CycloCoverError(Exception):
    """Base class for all library errors."""


class InvalidInput(CycloCoverError, ValueError):
    """Parameters outside an operation's domain."""


class NonPrimeCharacteristic(InvalidInput):
    pass


class InvalidQ(InvalidInput):
    """q is not a prime power (or is too large for table arithmetic)."""


class NotCoprime(InvalidInput):
    pass


class NonMonic(InvalidInput):
    pass


class ParameterMismatch(InvalidInput):
    pass


class OrderUnavailable(InvalidInput):
    """The requested multiplicative order does not divide the group order."""


class DescriptorMismatch(InvalidInput):
    """Operands belong to different fields."""


class ZeroElement(InvalidInput):
    pass


class DivisionByZero(CycloCoverError, ZeroDivisionError):
    pass


class ResourceExceeded(CycloCoverError):
    """A configured work bound would be exceeded; no partial answer is returned."""
