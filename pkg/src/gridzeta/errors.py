"""Exception hierarchy shared by all gridzeta modules.

Domain errors mean the input lies outside the region where an operation is
defined; precision errors mean the operation is defined but could not be
resolved to the requested accuracy; invariant errors signal an internal
consistency failure (a bug, or injected fault).
"""


class GridZetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GridZetaError):
    """Input outside the domain of the operation."""

    exit_code = 2


class PoleError(DomainError):
    """Evaluation at (or numerically indistinguishable from) a pole."""


class BranchCutError(DomainError):
    """Evaluation on a branch cut; the caller must pick a sheet explicitly."""


class BranchPointError(DomainError):
    """Evaluation at a branch point where sheets collide."""


class PrecisionError(GridZetaError):
    """Requested tolerance could not be met."""

    exit_code = 3


class IterationLimitError(PrecisionError):
    """An iteration failed to converge within its step budget."""


class BranchAmbiguityError(PrecisionError):
    """A continuous branch could not be certified (a factor left the
    right half-plane, or a sheet could not be identified)."""


class ConditioningError(PrecisionError):
    """Result too ill-conditioned to trust (e.g. near-singular determinant)."""


class InvariantError(GridZetaError):
    """An internal cross-check that should hold exactly has failed."""

    exit_code = 4
