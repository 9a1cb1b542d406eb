import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_dims.errors import DomainError
from jacobi_dims.exact_arith import (
    Rational,
    core_square_decompose,
    divisors,
    euler_phi,
    gcd,
    is_squarefree,
    kronecker_symbol,
    psi_index,
    square_part,
)
from oracles import is_squarefree_brute, legendre_brute, phi_brute, primes_upto, square_part_brute


@pytest.mark.parametrize("a, b, expected", [(12, 8, 4), (0, 7, 7), (4, 3, 1), (0, 0, 0), (-6, 4, 2)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("n, expected", [(16, 4), (12, square_part_brute(12)), (1, 1), (72, 6)])
def test_square_part(n, expected):
    assert square_part(n) == expected


@pytest.mark.parametrize("n, expected", [(12, (2, 3)), (1, (1, 1)), (8, (2, 2)), (49, (7, 1))])
def test_core_square_decompose(n, expected):
    assert core_square_decompose(n) == expected


@pytest.mark.parametrize("n, expected", [(6, True), (-4, False), (30, True), (1, True), (-1, True), (18, False)])
def test_is_squarefree(n, expected):
    assert is_squarefree(n) is expected


@pytest.mark.parametrize(
    "top, bottom, expected",
    [(0, 1, 1), (-4, 3, -1), (-3, 2, -1), (5, 1, 1), (0, 2, 0), (-1, 2, 1), (3, 2, -1), (2, 6, 0)],
)
def test_kronecker_examples(top, bottom, expected):
    assert kronecker_symbol(top, bottom) == expected


@pytest.mark.parametrize("N, expected", [(1, 1), (8, 4), (3, 2), (12, 4)])
def test_euler_phi(N, expected):
    assert euler_phi(N) == expected


@pytest.mark.parametrize("N, expected", [(1, 1), (4, 6), (6, 12), (11, 12)])
def test_psi_index(N, expected):
    assert psi_index(N) == expected


@pytest.mark.parametrize("n, expected", [(4, [1, 2, 4]), (1, [1]), (12, [1, 2, 3, 4, 6, 12])])
def test_divisors(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize(
    "fn, arg",
    [(square_part, 0), (core_square_decompose, -3), (is_squarefree, 0), (euler_phi, 0), (psi_index, -1), (divisors, 0)],
)
def test_domain_errors(fn, arg):
    with pytest.raises(DomainError):
        fn(arg)


def test_kronecker_rejects_nonpositive_bottom():
    with pytest.raises(DomainError):
        kronecker_symbol(3, 0)


@given(st.integers(1, 10_000))
def test_square_part_properties(n):
    q = square_part(n)
    assert n % (q * q) == 0
    assert is_squarefree(n // (q * q))
    assert square_part(4 * n) == 2 * q


@given(st.integers(1, 10_000))
def test_core_square_decompose_property(n):
    a, b = core_square_decompose(n)
    assert a * a * b == n and is_squarefree(b)


@pytest.mark.parametrize("n", range(1, 300))
def test_arith_against_brute(n):
    assert square_part(n) == square_part_brute(n)
    assert is_squarefree(n) == is_squarefree_brute(n)
    assert euler_phi(n) == phi_brute(n)
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize("p", [p for p in primes_upto(100) if p > 2])
def test_kronecker_is_legendre_for_odd_primes(p):
    for a in range(-3 * p, 3 * p):
        assert kronecker_symbol(a, p) == legendre_brute(a, p)


@given(st.integers(-500, 500), st.integers(1, 200), st.integers(1, 200))
def test_kronecker_multiplicative_in_bottom(a, m, n):
    assert kronecker_symbol(a, m * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n)


@given(st.integers(-500, 500), st.integers(-500, 500), st.integers(1, 200).filter(lambda n: n % 2))
def test_kronecker_multiplicative_in_top_for_odd_bottom(a, b, n):
    assert kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n)


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_kronecker_vanishes_off_coprime(a, n):
    if gcd(a, n) > 1:
        assert kronecker_symbol(a, n) == 0
    else:
        assert kronecker_symbol(a, n) in (-1, 1)


@given(st.integers(-1000, 1000).filter(lambda a: a % 2))
def test_kronecker_two_rule(a):
    assert kronecker_symbol(a, 2) == (1 if a % 8 in (1, 7) else -1)


@given(st.fractions(), st.fractions())
def test_rational_always_reduced(x, y):
    for z in (x + y, x * y, -x):
        assert isinstance(z, Rational)
        assert gcd(z.numerator, z.denominator) == 1 and z.denominator >= 1
