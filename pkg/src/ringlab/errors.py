"""Exception hierarchy with stable machine-readable error codes.

The CLI maps every ``RinglabError`` to exit code 2 unless noted otherwise;
``code`` is the identifier emitted in machine-readable output.
"""

from __future__ import annotations


class RinglabError(Exception):
    """Base class.  ``position`` is a 0-based offset into DSL input, if any."""

    code = "error"

    def __init__(self, message: str = "", position: int | None = None):
        self.position = position
        self.message = message
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class InvalidModulusError(RinglabError):
    code = "invalid-modulus"


class SizeBoundExceededError(RinglabError):
    code = "size-bound-exceeded"


class RingMismatchError(RinglabError):
    code = "ring-mismatch"


class HomInvalidError(RinglabError):
    code = "hom-invalid"


class ImproperIdealError(RinglabError):
    code = "improper-ideal"


class NotAnIdealError(RinglabError):
    code = "not-an-ideal"


class InvalidMultSetError(RinglabError):
    code = "invalid-mult-set"


class AxiomViolationError(RinglabError):
    code = "axiom-violation"


class UnsupportedIdealShapeError(RinglabError):
    code = "unsupported-ideal-shape"


class NonHomogeneousIdealError(UnsupportedIdealShapeError):
    code = "non-homogeneous-ideal"


class NTooLargeError(RinglabError):
    code = "n-too-large"


class UnknownTheoremError(RinglabError):
    code = "unknown-theorem"


class BadConjectureError(RinglabError):
    code = "bad-conjecture"


class ShapeMismatchError(RinglabError):
    code = "shape-mismatch"


class SemanticExprError(RinglabError):
    code = "semantic-error"


class RingSyntaxError(RinglabError):
    code = "syntax-error"
