"""Exception classes raised by svt."""

__all__ = ["SvtError", "MixedParity", "NotNilpotent", "InvalidM",
           "InvalidIndex", "InvariantViolated", "RankMismatch",
           "LegOutOfRange", "OrderMismatch", "NonUnitLeadingTerm",
           "UnknownIdentity", "UnknownSuite", "OrderTooLarge",
           "ShapeMismatch"]


class SvtError(Exception):
    """Base class of all svt specific exceptions."""
    def __init__(self, msg=None):
        """Creates a new SvtError instance with the specified message.

        If no msg is passed, the class docstring's first line is used.
        """
        super(SvtError, self).__init__()
        self.msg = msg
        if not msg:
            self.msg = self.__class__.__doc__.strip().splitlines()[0]

    def __str__(self):
        return str(self.msg)


class MixedParity(SvtError):
    """An element is not Z2-homogeneous."""


class NotNilpotent(SvtError):
    """An adjoint series did not terminate within its bound."""


class InvalidM(SvtError):
    """The twist parameter m must be a nonzero integer."""


class InvalidIndex(SvtError):
    """A generator index lies outside its index set."""


class InvariantViolated(SvtError):
    """An internal consistency check failed."""


class RankMismatch(SvtError):
    """Tensor ranks do not fit the operation."""


class LegOutOfRange(SvtError):
    """A tensor leg index is out of range."""


class OrderMismatch(SvtError):
    """Truncated series of different orders were combined."""


class NonUnitLeadingTerm(SvtError):
    """A series without unit leading term cannot be inverted."""


class UnknownIdentity(SvtError):
    """No identity with that name is known."""


class UnknownSuite(SvtError):
    """No verification suite with that name is known."""


class OrderTooLarge(SvtError):
    """The truncation order exceeds the configured maximum."""


class ShapeMismatch(SvtError):
    """Values of different shape cannot be compared."""
