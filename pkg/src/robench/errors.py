"""Exception hierarchy shared by the whole suite."""


class BenchmarkError(Exception):
    """Base class for every error raised by this package."""


class UnknownFunction(BenchmarkError):
    """Function id outside the 0..36 catalog."""


class DimensionTooSmall(BenchmarkError):
    """Dimension below the minimum for the requested function."""


class DimensionMismatch(BenchmarkError):
    """Input vector length does not match the configured dimension."""


class NonFiniteInput(BenchmarkError):
    """Input contains NaN or infinity."""


class RankDeficiency(BenchmarkError):
    """Orthonormalization hit a (numerically) rank-deficient matrix.

    Callers treat this as a resample signal and redraw the random input.
    """


class DisabledFunction(BenchmarkError):
    """Function id is disabled for the engine's dimension."""


class BatchTooLarge(BenchmarkError):
    """Batch exceeds the engine's configured concurrency cap."""


class UseAfterDispose(BenchmarkError):
    """Engine used after dispose()."""


class UnsupportedAtDim2(BenchmarkError):
    """Function cannot be evaluated on a 2-D landscape grid."""


class ParseError(BenchmarkError):
    """Malformed instance, points, values or grid file."""


class CorruptInstance(BenchmarkError):
    """Instance file parsed but failed a structural invariant."""
