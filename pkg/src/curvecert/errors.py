"""Exception types shared across the package.

The CLI maps these onto exit codes: malformed input files exit 1, domain
errors (bad geometry handed to an operation) exit 2, exhausted retry or
shrink schedules exit 3.
"""


class MalformedInput(ValueError):
    """An input file or dict does not match the documented schema."""


class DimensionMismatch(ValueError):
    """Operands disagree in dimension or in the closed/open flag."""


class DegenerateSegment(ValueError):
    """A zero-length segment was passed to a simplicity-dependent operation."""


class NotSimple(ValueError):
    """A curve required to be simple has a self-intersection."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotTotallyReal(ValueError):
    """The two spanning vectors are complex-linearly dependent."""


class VanishesOnCurve(ValueError):
    """A function required to be zero-free on a curve vanishes (or nearly does)."""


class EmptyIntersection(ValueError):
    """A ball or neighborhood required to meet a curve misses it."""


class RetryExhausted(RuntimeError):
    """A seeded retry or shrink schedule ran out before succeeding."""

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail
