"""Exception types shared across the package."""


class OrderTooSmallError(ValueError):
    """A graph family was requested below its minimum order."""


class LengthMismatchError(ValueError):
    """Two spectra of different lengths were compared."""


class NonSymmetricMatrixError(ValueError):
    """The eigensolver was given a matrix that is not exactly symmetric."""


class ConvergenceError(RuntimeError):
    """The Jacobi sweeps exhausted their budget before converging."""


class ResidueMismatchError(ValueError):
    """A scan order does not lie in the requested residue class."""


class InsufficientSamplesError(ValueError):
    """Extrapolation was attempted with too few samples."""
