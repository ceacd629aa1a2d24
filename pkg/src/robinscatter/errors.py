"""Exception hierarchy.

Validation errors (bad user input) are distinguished from numeric errors
(a solver or check could not reach its contract) and from check failures,
so the CLI can map them to distinct exit codes.
"""

from __future__ import annotations


class RobinScatterError(Exception):
    """Base class for all package errors."""


class ValidationError(RobinScatterError):
    """Invalid parameter, potential spec or configuration."""


class NumericError(RobinScatterError):
    """A numerical procedure could not meet its contract."""


class NonConvergedError(NumericError):
    """Iteration cap reached before the error majorant was met."""


class StepUnderflowError(NumericError):
    """Adaptive ODE controller could not meet the local tolerance."""


class SmallZetaError(NumericError):
    """|zeta| below the series cutoff; use backward integration instead."""


class XMaxTooSmallError(NumericError):
    """Truncation point rejected: imposed asymptotic data inadmissible."""


class InconsistentMethodsError(NumericError):
    """Two independent methods disagree far beyond their error estimates."""


class DecayTooWeakError(NumericError):
    """Potential decay class insufficient for the requested operation."""


class GridTooCoarseError(NumericError):
    """Phase unwrapping could not bound a jump after maximal refinement."""


class AtEigenvalueError(NumericError):
    """Jost function vanishes at the requested spectral point."""


class CountMismatchError(NumericError):
    """Root scan and Levinson prediction disagree after refinement."""


class BracketFailError(NumericError):
    """Unresolvable sign structure while bracketing zeros."""


class NotNearIntegerError(NumericError):
    """Computed phase shift is not close to any admissible case value."""


class TailNotConvergedError(NumericError):
    """Regularized integrand fails its decay envelope at the grid top."""


class CaseUndeterminedError(NumericError):
    """Resonance detection ambiguous; Levinson case cannot be selected."""


class OrderTooHighError(ValidationError):
    """Requested expansion order above the certified cap."""


class MajorantViolationError(NumericError):
    """A rigorous solution bound failed at a solver evaluation."""
