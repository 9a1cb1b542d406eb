"""Integer values p_j(sqrt(u)) of the polynomials generated by 1/(1 - s x + x^2).

p_j(s) is the coefficient of x^(j-2). Only even j is supported; then p_j(sqrt(u))
is a polynomial in u with integer coefficients, so every value is an integer.
"""

from __future__ import annotations

from .errors import DomainError

__all__ = ["ALLOWED_U", "p_even"]

ALLOWED_U = (0, 1, 2, 3, 4)


def p_even(j: int, u: int) -> int:
    """Return p_j(sqrt(u)) for even j >= 2 and u in {0, 1, 2, 3, 4}.

    Uses p_j = (u - 2) p_{j-2} - p_{j-4}, started from p_0 = -1, p_2 = 1.

    >>> [p_even(2 * k - 2, 4) for k in range(2, 6)]
    [1, 3, 5, 7]
    """
    if j < 2 or j % 2:
        raise DomainError(f"index must be even and >= 2, got {j}")
    if u not in ALLOWED_U:
        raise DomainError(f"u = s^2 must be one of {ALLOWED_U}, got {u}")
    prev, cur = -1, 1
    for _ in range((j - 2) // 2):
        prev, cur = cur, (u - 2) * cur - prev
    return cur
