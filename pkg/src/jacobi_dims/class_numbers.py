"""Hurwitz class numbers by enumeration of reduced forms, and the twisted H_n."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt
from typing import NamedTuple

from .errors import DomainError
from .exact_arith import Rational, core_square_decompose, gcd, kronecker_symbol

__all__ = ["ReducedForm", "enumerate_reduced_forms", "hurwitz_h1", "hurwitz_hn"]

H_ZERO = Rational(-1, 12)


class ReducedForm(NamedTuple):
    """The positive definite form a*x^2 + b*x*y + c*y^2, in reduced position."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self
        if not (a > 0 and abs(b) <= a <= c and self.discriminant < 0):
            return False
        return b >= 0 or (abs(b) != a and a != c)

    def weight(self) -> Rational:
        """Contribution to the Hurwitz count: 1/2 for (t,0,t), 1/3 for (t,t,t)."""
        a, b, c = self
        if a == c and b == 0:
            return Rational(1, 2)
        if a == b == c:
            return Rational(1, 3)
        return Rational(1)


def _check_negative_discriminant(delta: int) -> None:
    if delta >= 0:
        raise DomainError(f"discriminant must be negative, got {delta}")
    if delta % 4 not in (0, 1):
        raise DomainError(f"discriminant must be 0 or 1 mod 4, got {delta}")


def enumerate_reduced_forms(delta: int) -> list[ReducedForm]:
    """One reduced representative for each SL(2,Z)-class of discriminant ``delta``.

    Imprimitive forms are included. Output is sorted by (a, b).
    """
    _check_negative_discriminant(delta)
    D = -delta
    forms = []
    for a in range(1, isqrt(D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b * b + D) % (4 * a):
                continue
            c = (b * b + D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            forms.append(ReducedForm(a, b, c))
    return forms


@lru_cache(maxsize=None)
def hurwitz_h1(delta: int) -> Rational:
    """Hurwitz class number H(delta) for delta <= 0, with H(0) = -1/12."""
    if delta > 0:
        raise DomainError(f"H(delta) needs delta <= 0, got {delta}")
    if delta == 0:
        return H_ZERO
    if delta % 4 in (2, 3):
        return Rational(0)
    return sum((f.weight() for f in enumerate_reduced_forms(delta)), Rational(0))


@lru_cache(maxsize=65536)
def hurwitz_hn(n: int, delta: int) -> Rational:
    """Generalised class number H_n(delta).

    Writing gcd(n, delta) = a^2 b with b square-free, this is
    a^2 b * (delta'/(n/(a^2 b))) * H(delta') with delta' = delta/(a^2 b^2)
    when a^2 b^2 divides delta, and 0 otherwise. gcd(n, 0) = n.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if delta > 0:
        raise DomainError(f"H_n(delta) needs delta <= 0, got {delta}")
    g = gcd(n, delta)
    a, b = core_square_decompose(g)
    scale = a * a * b * b
    if delta % scale:
        return Rational(0)
    reduced = delta // scale
    return g * kronecker_symbol(reduced, n // g) * hurwitz_h1(reduced)
