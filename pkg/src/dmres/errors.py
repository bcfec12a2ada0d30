"""Exception types shared across the package."""


class DmresError(Exception):
    """Base class for all package errors."""


class RingMismatchError(DmresError):
    """Operands belong to different rings."""


class HomogeneityError(DmresError):
    """A polynomial or matrix entry fails its required degree."""


class ShapeError(DmresError):
    """Matrix or module shapes are incompatible."""


class MembershipError(DmresError):
    """An element is not in the submodule it was claimed to lie in."""


class LiftError(DmresError):
    """A lifting problem has no solution (augmentation not a quasi-isomorphism)."""


class TruncationError(DmresError):
    """A requested answer lies beyond the computed truncation depth."""


class ParseError(DmresError):
    """Artifact file syntax or consistency error, with location."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class CancelledError(DmresError):
    """A cooperative cancellation token was triggered."""


class CancelToken:
    """Cooperative cancellation flag checked inside long-running loops."""

    __slots__ = ("cancelled",)

    def __init__(self):
        self.cancelled = False

    def cancel(self):
        self.cancelled = True

    def check(self):
        if self.cancelled:
            raise CancelledError("computation cancelled")
