"""Exact integer and rational helpers.

All fractional quantities are carried as :class:`fractions.Fraction`, exported
here as :data:`Rational`. Fractions are normalised on construction, so equality
is structural and ``value.denominator == 1`` is an integrality test.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "Rational",
    "gcd",
    "factorize",
    "square_part",
    "core_square_decompose",
    "is_squarefree",
    "kronecker_symbol",
    "euler_phi",
    "psi_index",
    "divisors",
]

Rational = Fraction


def gcd(a: int, b: int) -> int:
    """Nonnegative gcd, with gcd(0, 0) == 0."""
    return math.gcd(a, b)


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


@lru_cache(maxsize=4096)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    p = 5
    step = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``|n|`` by trial division, as ``{p: e}``."""
    if n == 0:
        raise DomainError("cannot factor 0")
    return dict(_factor_tuple(abs(n)))


def square_part(n: int) -> int:
    """Largest q with q**2 dividing n."""
    _require_positive(n)
    q = 1
    for p, e in _factor_tuple(n):
        q *= p ** (e // 2)
    return q


def core_square_decompose(n: int) -> tuple[int, int]:
    """Return ``(a, b)`` with ``n == a*a*b`` and b square-free."""
    _require_positive(n)
    a = square_part(n)
    return a, n // (a * a)


def is_squarefree(n: int) -> bool:
    if n == 0:
        raise DomainError("square-freeness of 0 is undefined")
    return all(e == 1 for _, e in _factor_tuple(abs(n)))


def kronecker_symbol(top: int, bottom: int) -> int:
    """Kronecker symbol (top / bottom) for a positive bottom.

    (top / 1) is 1 for every top, including 0.
    """
    _require_positive(bottom, "bottom")
    if gcd(top, bottom) != 1:
        return 0 if bottom > 1 else 1
    result = 1
    # strip factors of 2 from the bottom using the (top/2) rule
    while bottom % 2 == 0:
        bottom //= 2
        if top % 8 in (3, 5):
            result = -result
    # Jacobi symbol for the odd remainder
    a, n = top % bottom, bottom
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def euler_phi(N: int) -> int:
    _require_positive(N, "N")
    result = N
    for p, _ in _factor_tuple(N):
        result = result // p * (p - 1)
    return result


def psi_index(N: int) -> int:
    """N times the product of (1 + 1/p) over primes p dividing N.

    This is the number of points of the projective line over Z/NZ, and
    also the index of Gamma_0(N) in SL(2, Z).
    """
    _require_positive(N, "N")
    result = N
    for p, _ in _factor_tuple(N):
        result = result // p * (p + 1)
    return result


def divisors(n: int) -> list[int]:
    _require_positive(n)
    divs = [1]
    for p, e in _factor_tuple(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
