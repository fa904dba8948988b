"""Domain exception hierarchy.

Every error carries a stable ``code`` string that the CLI emits in its
JSON error documents.
"""


class PolylatError(Exception):
    """Base class for all domain validation errors."""

    code = "Error"


class NotConvexError(PolylatError):
    code = "NotConvex"


class DegenerateError(PolylatError):
    code = "Degenerate"


class SingularBasisError(PolylatError):
    code = "SingularBasis"


class ZeroVectorError(PolylatError):
    code = "ZeroVector"


class NotPrimitiveError(PolylatError):
    code = "NotPrimitive"


class ZeroDirectionError(PolylatError):
    code = "ZeroDirection"


class BoxTooLargeError(PolylatError):
    code = "BoxTooLarge"


class InvalidAlphaError(PolylatError):
    code = "InvalidAlpha"


class PulseTooWideError(PolylatError):
    code = "PulseTooWide"


class NotNormalizedError(PolylatError):
    code = "NotNormalized"


class DegenerateProgressionError(PolylatError):
    code = "DegenerateProgression"


class VerificationFailedError(PolylatError):
    """A reduction consistency check found a counterexample."""

    code = "VerificationFailed"

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t
