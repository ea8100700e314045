"""Exception types raised by the library.

All of them derive from :class:`TonnetzError`, itself a ``ValueError``, so
callers that only care about "bad input" can catch one thing.
"""


class TonnetzError(ValueError):
    """Base class; ``reason`` is a short machine-readable tag."""

    reason = "error"


class SumMismatch(TonnetzError):
    reason = "sum mismatch"


class NotGeneric(TonnetzError):
    reason = "not generic"


class NotReduced(TonnetzError):
    reason = "not reduced"


class FaceNotInComplex(TonnetzError):
    reason = "face not in complex"


class NoType(TonnetzError):
    reason = "no L-type"


class NotClosed(TonnetzError):
    reason = "word not closed"


class LabelCollision(TonnetzError):
    reason = "label collision"


class UnsupportedK(TonnetzError):
    reason = "unsupported k"
