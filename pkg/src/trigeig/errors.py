"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Array shapes or lengths are incompatible with the requested construction."""


class DomainError(ValueError):
    """An argument lies outside the set of accepted values (non-finite, out of range)."""


class ConvergenceError(RuntimeError):
    """The Jacobi eigensolver did not reach its threshold within the sweep budget."""

    def __init__(self, message, off_diag_norm, sweeps_used):
        super().__init__(message)
        self.off_diag_norm = off_diag_norm
        self.sweeps_used = sweeps_used
