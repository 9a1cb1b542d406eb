"""Exact dimension formulas for Jacobi cusp forms on finite-index subgroups of SL(2, Z)."""

from .class_numbers import enumerate_reduced_forms, hurwitz_h1, hurwitz_hn
from .dimensions import (
    DimensionResult,
    dim_corollary_gammaN,
    dim_gammaN_4m_divides_N,
    dim_jacobi,
    dim_theorem1,
    dim_theorem2,
    dim_theorem3,
    dim_theorem4,
    skew_dim_conjecture,
)
from .errors import DomainError, NonIntegralDimensionError, UnsupportedWeightError, WrongTheoremError
from .exact_arith import Rational
from .groups import BranchingScheme, gamma0_scheme, gamma1_scheme, principal_congruence_scheme

__version__ = "0.1.0"
