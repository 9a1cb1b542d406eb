import json

import pytest

from jacobi_dims.errors import DomainError
from jacobi_dims.exact_arith import euler_phi, factorize, psi_index
from jacobi_dims.groups import (
    BranchingScheme,
    gamma0_scheme,
    gamma1_scheme,
    principal_congruence_scheme,
    psl_index,
    scheme_from_descriptor,
)
from oracles import coset_branching, gamma0_member, gamma1_member, gamma_member


def sl2_index_gamma(N):
    out = N**3
    for p in factorize(N):
        out = out // (p * p) * (p * p - 1)
    return out


def sl2_index_gamma1(N):
    out = N**2
    for p in factorize(N):
        out = out // (p * p) * (p * p - 1)
    return out


def test_examples():
    assert psl_index(principal_congruence_scheme(1)) == 1
    assert psl_index(principal_congruence_scheme(3)) == 12
    assert psl_index(gamma0_scheme(4)) == 6

    g4 = principal_congruence_scheme(4)
    assert g4.regular_cusp_widths == (4,) * 6 and not g4.contains_minus_one and g4.e0 == g4.e1 == 0
    g1 = principal_congruence_scheme(1)
    assert g1.contains_minus_one and g1.regular_cusp_widths == (1,) and g1.e0 == g1.e1 == 1
    assert principal_congruence_scheme(3).regular_cusp_widths == (3, 3, 3, 3)
    assert principal_congruence_scheme(2) == BranchingScheme(True, (2, 2, 2))

    assert gamma0_scheme(1) == principal_congruence_scheme(1)
    assert gamma0_scheme(4) == BranchingScheme(True, (1, 1, 4))
    assert gamma0_scheme(11) == BranchingScheme(True, (1, 11))

    assert gamma1_scheme(4) == BranchingScheme(False, (1, 4), (1,))
    assert gamma1_scheme(3) == BranchingScheme(False, (1, 3), e1=1)
    g5 = gamma1_scheme(5)
    assert g5.cusp_count == 4 and psl_index(g5) == 12 and not g5.irregular_cusp_widths


@pytest.mark.parametrize("N", range(1, 13))
def test_constructors_match_coset_action(N):
    for member, construct in (
        (gamma_member, principal_congruence_scheme),
        (gamma0_member, gamma0_scheme),
        (gamma1_member, gamma1_scheme),
    ):
        s = construct(N)
        got = (
            s.contains_minus_one,
            list(s.regular_cusp_widths),
            list(s.irregular_cusp_widths),
            s.e0,
            s.e1,
            s.sl_index(),
        )
        assert got == coset_branching(N, member(N))


@pytest.mark.parametrize("N", range(1, 201))
def test_index_formulas(N):
    assert psl_index(gamma0_scheme(N)) == psi_index(N)
    assert gamma1_scheme(N).sl_index() == sl2_index_gamma1(N)
    assert principal_congruence_scheme(N).sl_index() == sl2_index_gamma(N)
    assert sl2_index_gamma(N) == N * euler_phi(N) * psi_index(N)
    if N >= 5:
        assert 2 * psl_index(gamma1_scheme(N)) == sl2_index_gamma1(N)
    # Gamma(N) in Gamma1(N) in Gamma0(N)
    a, b, c = (psl_index(f(N)) for f in (principal_congruence_scheme, gamma1_scheme, gamma0_scheme))
    assert a >= b >= c and a % b == 0 and b % c == 0


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(contains_minus_one=True, regular_cusp_widths=()),
        dict(contains_minus_one=True, regular_cusp_widths=(1,), irregular_cusp_widths=(2,)),
        dict(contains_minus_one=False, regular_cusp_widths=(3,), e0=1),
        dict(contains_minus_one=False, regular_cusp_widths=(0,)),
        dict(contains_minus_one=True, regular_cusp_widths=(1,), e1=-1),
    ],
)
def test_invariants_enforced(kwargs):
    with pytest.raises(DomainError):
        BranchingScheme(**kwargs)


@pytest.mark.parametrize("N", [0, -3])
def test_constructor_domain(N):
    for f in (principal_congruence_scheme, gamma0_scheme, gamma1_scheme):
        with pytest.raises(DomainError):
            f(N)


@pytest.mark.parametrize("descriptor", ["gammaN:7", "gamma0:36", "gamma1:4", "gamma1:12"])
def test_json_round_trip(descriptor):
    s = scheme_from_descriptor(descriptor)
    back = BranchingScheme.from_json(s.to_json())
    assert back == s
    assert json.loads(s.to_json())["regular_widths"] == list(s.regular_cusp_widths)


def test_json_schema_keys():
    d = gamma1_scheme(4).to_dict()
    assert d == {"minus_one": False, "regular_widths": [1, 4], "irregular_widths": [1], "e0": 0, "e1": 0}


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"regular_widths": [1]}',
        '{"minus_one": true, "regular_widths": [1], "bogus": 1}',
        '{"minus_one": true, "regular_widths": 3}',
        '{"minus_one": false, "regular_widths": [1], "e0": 2}',
        '{"minus_one": true, "regular_widths": [1.5]}',
    ],
)
def test_malformed_json(text):
    with pytest.raises(DomainError):
        BranchingScheme.from_json(text)


@pytest.mark.parametrize("descriptor", ["gamma2:3", "gammaN", "gamma0:x", "scheme:/nonexistent/file.json"])
def test_bad_descriptors(descriptor):
    with pytest.raises(DomainError):
        scheme_from_descriptor(descriptor)


def test_scheme_descriptor_reads_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(gamma0_scheme(12).to_json())
    assert scheme_from_descriptor(f"scheme:{path}") == gamma0_scheme(12)
