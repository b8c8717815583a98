"""Exception types shared by the numeric and symbolic layers.

Every failure mode is an ``EvaluationError`` subclass so callers (the check
runner in particular) can distinguish "this input cannot be evaluated" from
programming errors.  Non-finite intermediates are never propagated silently;
they surface as ``NumericOverflowError``.
"""


class EvaluationError(ValueError):
    """Base class for all evaluation failures."""


class DomainError(EvaluationError):
    """Input outside the mathematical domain of the operation."""


class PoleProximityError(EvaluationError):
    """Evaluation point too close to a pole for reliable results."""


class ConvergenceError(EvaluationError):
    """Iteration or refinement budget exhausted before reaching tolerance."""


class NumericOverflowError(EvaluationError):
    """A non-finite value appeared during evaluation."""
