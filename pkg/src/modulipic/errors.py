"""Exception hierarchy shared by all modules."""


class ModulipicError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTypeError(ModulipicError):
    """Series/rank combination outside the admissible ranges."""


class DomainError(ModulipicError):
    """Arguments outside an operation's domain (non-dominant weight, genus 0, ...)."""


class ShapeError(ModulipicError):
    """Dimension mismatch between vectors/matrices."""


class ConsistencyError(ModulipicError):
    """An internal integrality or divisibility assertion failed.

    This signals a normalization/convention bug, not bad user input.
    """


class ResourceError(ModulipicError):
    """A size guard was exceeded (weight system or Weyl group too large)."""


class PrecisionError(ModulipicError):
    """A numeric result could not be certified to the required gap."""
