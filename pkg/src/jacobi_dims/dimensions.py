"""Dimension formulas for spaces of Jacobi cusp forms S_{k,m}(Gamma).

For k >= 3 the formulas give dim S_{k,m}(Gamma). For k = 2 they give
dim S_{k,m}(Gamma) - dim J^skew_{1,m}(Gamma); the skew-holomorphic correction
is not computed here, and results carry ``plain=False``.

The ``*_value`` functions return the raw exact value of each formula for any
input satisfying its type constraints, including synthetic cusp data that no
subgroup realises. The ``dim_*`` functions wrap them in a
:class:`DimensionResult` and insist the value is a valid dimension.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .class_numbers import hurwitz_h1
from .errors import DomainError, NonIntegralDimensionError, UnsupportedWeightError, WrongTheoremError
from .exact_arith import Rational, euler_phi, gcd, kronecker_symbol, psi_index, square_part
from .groups import BranchingScheme, principal_congruence_scheme
from .s_functions import SContext, par_discriminants, s_ell, s_par, s_top

__all__ = [
    "DimensionResult",
    "theorem1_value",
    "theorem2_value",
    "theorem3_value",
    "theorem4_value",
    "dim_theorem1",
    "dim_theorem2",
    "dim_theorem3",
    "dim_theorem4",
    "dim_jacobi",
    "dim_corollary_gammaN",
    "dim_gammaN_4m_divides_N",
    "skew_dim_conjecture",
]

LOW_WEIGHT_CAVEAT = (
    "weights k <= 1 are not covered: the trace formula needs a correction term "
    "there which is non-trivial and not computed by these formulas"
)


@dataclass(frozen=True)
class DimensionResult:
    """An exact dimension value.

    ``plain`` is True when the value is dim S_{k,m}(Gamma) itself (k >= 3) and
    False when it is the difference with the skew-holomorphic space (k = 2).
    """

    value: Rational
    plain: bool

    def __int__(self) -> int:
        return int(self.value)

    def to_dict(self) -> dict:
        return {
            "value": {"num": self.value.numerator, "den": self.value.denominator},
            "plain": self.plain,
        }


def _check_weight_index(k: int, m: int) -> None:
    if k < 2:
        raise UnsupportedWeightError(f"k must be >= 2 ({LOW_WEIGHT_CAVEAT}); got k = {k}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")


def _check_widths(widths: Sequence[int]) -> None:
    if not widths:
        raise DomainError("at least one cusp width is required")
    if any(b < 1 for b in widths):
        raise DomainError(f"cusp widths must be positive, got {list(widths)}")


def _result(value: Rational, k: int) -> DimensionResult:
    if value.denominator != 1:
        raise NonIntegralDimensionError(f"dimension formula gave non-integral value {value}")
    if k >= 3 and value < 0:
        raise NonIntegralDimensionError(f"dimension formula gave negative value {value}")
    return DimensionResult(Rational(value), plain=k >= 3)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@lru_cache(maxsize=65536)
def _theorem1_cusp(k: int, m: int, b: int) -> Rational:
    g = gcd(4 * m, b)
    f = 4 * m // g
    class_sum = sum(
        (kronecker_symbol(delta, b // g) * hurwitz_h1(delta) for delta in par_discriminants(f)),
        Rational(0),
    )
    return Rational(m * b * (2 * k - 3), 12) - Rational(m * square_part(f), f) - Rational(2 * m, f) * class_sum


def theorem1_value(k: int, m: int, widths: Iterable[int]) -> Rational:
    """Torsion-free Gamma, all cusps regular, in the original class-number form.

    m [SL2:Gamma] (2k-3)/24 - sum_p (m/f_p) Q(f_p)
        - sum_p (2m/f_p) sum_delta (delta / (b_p/(4m,b_p))) H(delta),
    with [SL2:Gamma] = 2 sum_p b_p and f_p = 4m/(4m,b_p). Per-cusp terms are
    grouped by width.
    """
    widths = list(widths)
    _check_weight_index(k, m)
    _check_widths(widths)
    return sum((mult * _theorem1_cusp(k, m, b) for b, mult in Counter(widths).items()), Rational(0))


@lru_cache(maxsize=65536)
def _theorem2_cusp(k: int, m: int, b: int) -> Rational:
    return s_top(SContext(k, m, 1), b) + _sign(k) * s_par(SContext(k, m, m), b)


def theorem2_value(k: int, m: int, widths: Iterable[int]) -> Rational:
    """Torsion-free Gamma, all cusps regular: sum over cusps of s^top(1) + (-1)^k s^par(m)."""
    widths = list(widths)
    _check_weight_index(k, m)
    _check_widths(widths)
    return sum((mult * _theorem2_cusp(k, m, b) for b, mult in Counter(widths).items()), Rational(0))


def _theorem3(k: int, m: int, scheme: BranchingScheme, sign: int) -> Rational:
    c1, cm = SContext(k, m, 1), SContext(k, m, m)
    half = Rational(1, 2)
    total = Rational(0)
    for b, mult in Counter(scheme.regular_cusp_widths).items():
        total += mult * half * (s_top(c1, b) + sign * s_top(cm, b) + s_par(c1, b) + sign * s_par(cm, b))
    counts = {-1: scheme.e1, 0: scheme.e0, 1: scheme.e1}
    for t, e in counts.items():
        if e:
            total += Rational(e, 2) * (s_ell(c1, t) + sign * s_ell(cm, t))
    return total


def theorem3_value(k: int, m: int, scheme: BranchingScheme) -> Rational:
    """Gamma containing -1."""
    _check_weight_index(k, m)
    if not scheme.contains_minus_one:
        raise WrongTheoremError("this formula needs a group containing -1")
    return _theorem3(k, m, scheme, _sign(k))


def theorem4_value(k: int, m: int, scheme: BranchingScheme) -> Rational:
    """Gamma not containing -1; cusps may be irregular, elliptic points of order 3 allowed."""
    _check_weight_index(k, m)
    if scheme.contains_minus_one:
        raise WrongTheoremError("this formula needs a group not containing -1")
    c1, cm = SContext(k, m, 1), SContext(k, m, m)
    sign = _sign(k)
    half = Rational(1, 2)
    total = Rational(0)
    for b, mult in Counter(scheme.regular_cusp_widths).items():
        total += mult * (s_top(c1, b) + sign * s_par(cm, b))
    for b, mult in Counter(scheme.irregular_cusp_widths).items():
        total += mult * (
            half * (s_top(c1, 2 * b) + sign * s_par(cm, 2 * b))
            + s_par(c1, b)
            + sign * s_top(cm, b)
            - half * (s_par(c1, 2 * b) + sign * s_top(cm, 2 * b))
        )
    if scheme.e1:
        total += scheme.e1 * (s_ell(c1, -1) + sign * s_ell(cm, 1))
    return total


def dim_theorem1(k: int, m: int, widths: Iterable[int]) -> DimensionResult:
    return _result(theorem1_value(k, m, widths), k)


def dim_theorem2(k: int, m: int, widths: Iterable[int]) -> DimensionResult:
    return _result(theorem2_value(k, m, widths), k)


def dim_theorem3(k: int, m: int, scheme: BranchingScheme) -> DimensionResult:
    return _result(theorem3_value(k, m, scheme), k)


def dim_theorem4(k: int, m: int, scheme: BranchingScheme) -> DimensionResult:
    return _result(theorem4_value(k, m, scheme), k)


def dim_jacobi(k: int, m: int, scheme: BranchingScheme) -> DimensionResult:
    """Dimension of S_{k,m}(Gamma) for the group with branching data ``scheme``.

    >>> from jacobi_dims.groups import principal_congruence_scheme
    >>> dim_jacobi(10, 1, principal_congruence_scheme(1))
    DimensionResult(value=Fraction(1, 1), plain=True)
    """
    if scheme.contains_minus_one:
        return dim_theorem3(k, m, scheme)
    return dim_theorem4(k, m, scheme)


def dim_corollary_gammaN(N: int, k: int, m: int) -> DimensionResult:
    """Closed form for the principal congruence subgroup Gamma(N), N, k >= 3."""
    if N < 3 or k < 3:
        raise DomainError(f"the Gamma(N) closed form needs N >= 3 and k >= 3, got N = {N}, k = {k}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    d = gcd(4 * m, N)
    class_sum = sum(
        (kronecker_symbol(delta, N // d) * hurwitz_h1(delta) for delta in par_discriminants(4 * m // d)),
        Rational(0),
    )
    inner = (
        Rational(m * N * (2 * k - 3), 24)
        - Rational(d * square_part(4 * m // d), 8)
        - Rational(d, 4) * class_sum
    )
    return _result(euler_phi(N) * psi_index(N) * inner, k)


def dim_gammaN_4m_divides_N(N: int, k: int, m: int) -> DimensionResult:
    """Gamma(N) closed form when 4m divides N; the class-number sum drops out."""
    if m < 1 or N % (4 * m):
        raise DomainError(f"4m must divide N, got N = {N}, m = {m}")
    if k < 3:
        raise DomainError(f"k must be >= 3, got {k}")
    value = m * euler_phi(N) * psi_index(N) * (Rational(N * (2 * k - 3), 24) - Rational(1, 2))
    return _result(value, k)


def skew_dim_conjecture(k: int, m: int) -> Rational:
    """Conjectural dim of skew-holomorphic Jacobi cusp forms of weight k, index m on SL(2,Z).

    The full-modular-group formula with every (-1)^k replaced by -(-1)^k. Not
    proven; no integrality is enforced.
    """
    _check_weight_index(k, m)
    return _theorem3(k, m, principal_congruence_scheme(1), -_sign(k))
