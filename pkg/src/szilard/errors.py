"""Exception types shared across the package."""

from __future__ import annotations


class SzilardError(Exception):
    """Base class for all package errors."""


class InvalidArgument(SzilardError, ValueError):
    """An argument violates a documented precondition."""


class SolverFailure(SzilardError):
    """The quasi-momentum solver did not reach the residual tolerance.

    Carries the offending quantum numbers and the best residual norm seen.
    """

    def __init__(self, message, quantum_numbers=None, best_residual=None):
        super().__init__(message)
        self.quantum_numbers = quantum_numbers
        self.best_residual = best_residual


class RegimeUnsupported(SzilardError):
    """Requested coupling regime is outside what the solver supports
    (e.g. attractive bound clusters of three or more particles)."""


class TruncationNotConverged(SzilardError):
    """Raising the spectral cutoff repeatedly still moved the result."""


class DerivativeUnstable(SzilardError):
    """Finite-difference halving did not converge."""


class OptimizationFailed(SzilardError):
    """No grid point of a protocol search produced a usable value."""


class ConfigError(SzilardError):
    """Invalid run configuration; collects every validation message."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class OverwriteRefused(SzilardError):
    """Golden files already exist and --overwrite-goldens was not given."""
