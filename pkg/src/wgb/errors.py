"""Exception types shared across the library."""


class DimensionError(ValueError):
    """Exponent vector / weight vector lengths do not match."""


class FieldMismatchError(ValueError):
    """Operands live over different prime fields."""


class NotInImageError(ValueError):
    """A polynomial is not in the image of the weight substitution map."""


class NotWHomogeneousError(ValueError):
    """An operation required weighted homogeneous input."""


class InsufficientWindowError(ValueError):
    """A truncated series window was too short to decide the question."""


class PositiveDimensionError(ValueError):
    """A zero-dimensional ideal was required."""


class ArityError(ValueError):
    """Wrong number of degrees/weights for the requested operation."""


class EmptySupportError(ValueError):
    """No monomials exist at a requested weighted degree."""


class IncompleteBasisError(RuntimeError):
    """A degree-bounded engine run ended without a completeness certificate.

    Carries the partial basis for diagnosis.
    """

    def __init__(self, message, partial=None, stats=None):
        super().__init__(message)
        self.partial = partial
        self.stats = stats


class BudgetExceededError(RuntimeError):
    """A computation hit its wall-clock budget."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats
