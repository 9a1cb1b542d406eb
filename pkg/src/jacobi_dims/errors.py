"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class UnsupportedWeightError(DomainError):
    """The weight is below the range covered by the dimension formulas."""


class WrongTheoremError(DomainError):
    """The branching scheme does not satisfy the hypotheses of the requested formula."""


class NonIntegralDimensionError(ArithmeticError):
    """A dimension formula produced a non-integral or negative value.

    For schemes coming from actual subgroups this signals a bug. For
    synthetic schemes it usually means no subgroup realises the data.
    """
