"""The building blocks s^top, s^par and s^ell from which the dimension formulas are assembled.

Each function is evaluated at an exact divisor n of the index m (n and m/n
coprime), a weight k >= 2, and either a cusp width b or an elliptic trace t.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .class_numbers import hurwitz_hn
from .errors import DomainError
from .exact_arith import Rational, divisors, gcd, is_squarefree, square_part
from .gegenbauer import p_even

__all__ = [
    "SContext",
    "SFunctionTriple",
    "s_top",
    "s_par",
    "s_ell",
    "s_triple",
    "par_discriminants",
]


@dataclass(frozen=True)
class SContext:
    """Weight k, index m and an exact divisor n of m."""

    k: int
    m: int
    n: int

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"k must be >= 2, got {self.k}")
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        if self.n < 1 or self.m % self.n:
            raise DomainError(f"n = {self.n} does not divide m = {self.m}")
        if gcd(self.n, self.m // self.n) != 1:
            raise DomainError(f"n = {self.n} is not an exact divisor of m = {self.m}")

    @property
    def n_prime(self) -> int:
        return self.m // self.n

    @property
    def sign(self) -> int:
        """(-1)^k."""
        return -1 if self.k % 2 else 1


@dataclass(frozen=True)
class SFunctionTriple:
    top: Rational
    par: Rational
    ell_minus1: Rational
    ell_0: Rational
    ell_plus1: Rational

    def total(self) -> Rational:
        return self.top + self.par + self.ell_minus1 + self.ell_0 + self.ell_plus1


@lru_cache(maxsize=None)
def par_discriminants(X: int) -> tuple[int, ...]:
    """Negative divisors delta of X with X/delta square-free, in decreasing order."""
    return tuple(-d for d in divisors(X) if is_squarefree(X // d))


@lru_cache(maxsize=65536)
def s_top(ctx: SContext, b: int) -> Rational:
    if b < 1:
        raise DomainError(f"cusp width must be >= 1, got {b}")
    n, n1 = ctx.n, ctx.n_prime
    return (
        -p_even(2 * ctx.k - 2, 4) * hurwitz_hn(b * n1, 0)
        - Rational(square_part(n1 * gcd(4 * n1, b * n)), 2)
    )


@lru_cache(maxsize=65536)
def s_par(ctx: SContext, b: int) -> Rational:
    if b < 1:
        raise DomainError(f"cusp width must be >= 1, got {b}")
    n, n1 = ctx.n, ctx.n_prime
    g = gcd(4 * n, b * n1)
    twist = b * n1 // g
    total = sum((hurwitz_hn(twist, delta) for delta in par_discriminants(4 * n // g)), Rational(0))
    return -Rational(g, 2) * p_even(2 * ctx.k - 2, 0) * total


@lru_cache(maxsize=65536)
def s_ell(ctx: SContext, t: int) -> Rational:
    if t not in (-1, 0, 1):
        raise DomainError(f"elliptic trace must be -1, 0 or 1, got {t}")
    if ctx.n % (t + 2):
        return Rational(0)
    return -p_even(2 * ctx.k - 2, t + 2) * hurwitz_hn(ctx.n_prime, t * t - 4)


def s_triple(ctx: SContext, b: int = 1) -> SFunctionTriple:
    return SFunctionTriple(
        top=s_top(ctx, b),
        par=s_par(ctx, b),
        ell_minus1=s_ell(ctx, -1),
        ell_0=s_ell(ctx, 0),
        ell_plus1=s_ell(ctx, 1),
    )
