import pytest
import sympy

from jacobi_dims.errors import DomainError
from jacobi_dims.gegenbauer import p_even
from oracles import gegenbauer_series


@pytest.mark.parametrize("k", range(2, 13))
def test_known_values(k):
    assert p_even(2 * k - 2, 4) == 2 * k - 3
    assert p_even(2 * k - 2, 0) == (-1) ** k


@pytest.mark.parametrize("j, u, expected", [(4, 2, 1), (8, 3, -1), (2, 1, 1), (4, 1, 0)])
def test_examples(j, u, expected):
    assert p_even(j, u) == expected


@pytest.mark.parametrize("u", [0, 1, 2, 3, 4])
def test_against_series_division(u):
    for j in range(2, 41, 2):
        rational_part, root_part = gegenbauer_series(j, u)
        assert root_part == 0
        assert p_even(j, u) == rational_part


@pytest.mark.parametrize("u", [1, 2, 3])
def test_against_symbolic_series(u):
    x = sympy.symbols("x")
    series = sympy.series(1 / (1 - sympy.sqrt(u) * x + x**2), x, 0, 15).removeO()
    for j in range(2, 16, 2):
        assert sympy.nsimplify(series.coeff(x, j - 2)) == p_even(j, u)


def test_periodicity():
    for j in range(2, 60, 2):
        # (1 + x) / (1 + x^3) = 1 + x - x^3 - x^4 + x^6 + ...
        assert p_even(j, 1) == [1, 1, 0, -1, -1, 0][(j - 2) % 6]
        assert p_even(j, 2) == [1, 1, -1, -1][((j - 2) // 2) % 4]
        assert p_even(j, 4) == j - 1


@pytest.mark.parametrize("j, u", [(3, 4), (0, 4), (-2, 0), (4, 5), (4, -1)])
def test_domain(j, u):
    with pytest.raises(DomainError):
        p_even(j, u)
