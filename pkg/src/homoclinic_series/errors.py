"""Exception hierarchy shared across the package and mapped to CLI exit codes."""


class HomoclinicError(Exception):
    """Base class for all package errors."""


class ConfigError(HomoclinicError):
    """Bad configuration file, flag value, or inconsistent run settings."""


class DomainError(HomoclinicError):
    """The requested operation is not defined at this parameter point
    (e.g. the linearization is not a saddle-focus)."""


class SolverError(HomoclinicError):
    """The polynomial all-roots iteration failed to converge."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class OracleError(HomoclinicError):
    """The shooting oracle failed (optimizer non-convergence or integration
    breakdown).  Carries the best boundary mismatch seen."""

    def __init__(self, message, best_mismatch=None):
        super().__init__(message)
        self.best_mismatch = best_mismatch


class ResonanceError(HomoclinicError):
    """The resonance polynomial vanished at some k > 1, so the coefficient
    recurrence cannot be divided through.  Cannot happen in Region 1."""

    def __init__(self, k, value):
        super().__init__(f"resonance polynomial ~ 0 at k={k} (|p(k*alpha)|={abs(value):.3e})")
        self.k = k
