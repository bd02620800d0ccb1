"""Exception types shared across the package."""


class SwldError(Exception):
    """Base class for all library errors."""


class LengthMismatchError(SwldError, ValueError):
    """A vector does not have the length required by the code or operation."""


class InconsistentSystemError(SwldError, ValueError):
    """A linear system has no solution (cannot occur for full-row-rank H)."""


class RadiusUnsupportedError(SwldError, ValueError):
    """Requested decoding radius exceeds what the decoder can guarantee."""


class ListOverflowError(SwldError, RuntimeError):
    """A decoding list exceeded the configured cap; truncation is refused."""


class InstanceTooLargeError(SwldError, ValueError):
    """An exhaustive operation was asked for beyond its work guard."""


class PacketFormatError(SwldError, ValueError):
    """A serialized packet is malformed or references unknown identifiers."""


class InfeasiblePlanError(SwldError, ValueError):
    """No code in the requested family reaches the required radius."""


class InterpolationError(SwldError, RuntimeError):
    """Internal interpolation failure; indicates a bug, not bad input."""
