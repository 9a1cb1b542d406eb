"""Independent checks of the dimension formulas.

* The cotangent/Gauss-sum lemma used to simplify the parabolic terms,
  evaluated numerically and compared with its exact class-number form.
* The decomposition of dim S_{2k-2}(Gamma_0(m)) into s-functions, against
  the classical genus/valence formula.
* The conjectural lifting identity for primes p = 1 mod 12.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .class_numbers import hurwitz_h1
from .dimensions import dim_jacobi, skew_dim_conjecture, theorem1_value, theorem2_value
from .errors import DomainError
from .exact_arith import Rational, divisors, factorize, gcd, is_squarefree, kronecker_symbol
from .groups import gamma0_scheme, principal_congruence_scheme
from .s_functions import SContext, par_discriminants, s_ell, s_par, s_top

__all__ = [
    "LemmaCheckReport",
    "lemma_sum_numeric",
    "lemma_lhs_numeric",
    "lemma_rhs_exact",
    "lemma_check",
    "classical_dim_cusp_forms",
    "s_identity_dim",
    "lifting_identity_check",
    "SuiteReport",
    "run_lemma_suite",
    "run_identity_suite",
    "run_lifting_suite",
    "run_equivalence_suite",
]


@dataclass(frozen=True)
class LemmaCheckReport:
    a: int
    f: int
    lhs_numeric: float
    lhs_imag: float
    rhs_exact: Rational
    abs_error: float

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "f": self.f,
            "lhs_numeric": self.lhs_numeric,
            "lhs_imag": self.lhs_imag,
            "rhs_exact": {"num": self.rhs_exact.numerator, "den": self.rhs_exact.denominator},
            "abs_error": self.abs_error,
        }


def lemma_sum_numeric(a: int, f: int) -> complex:
    """(i/f) * sum_{nu mod f} C(nu/f) * sum_{lambda mod f} e(a nu lambda^2 / f) in floating point.

    C(z) = cot(pi z) off the integers and 0 on them; e(x) = exp(2 pi i x).
    """
    if a < 1 or f < 1:
        raise DomainError(f"a and f must be positive, got a = {a}, f = {f}")
    nu = np.arange(1, f)  # nu = 0 has C = 0
    lam = np.arange(f)
    cot = 1.0 / np.tan(np.pi * nu / f)
    # reduce the exponent mod f before scaling to keep the phases accurate
    phases = (a * np.outer(nu, lam * lam)) % f
    gauss = np.exp(2j * np.pi * phases / f).sum(axis=1)
    return complex(1j / f * np.dot(cot, gauss))


def lemma_lhs_numeric(a: int, f: int) -> float:
    return lemma_sum_numeric(a, f).real


def lemma_rhs_exact(a: int, f: int) -> Rational:
    """-2 (a,f) * sum_delta (delta / (a/(a,f))) H(delta), delta over the parabolic discriminants of f/(a,f)."""
    if a < 1 or f < 1:
        raise DomainError(f"a and f must be positive, got a = {a}, f = {f}")
    g = gcd(a, f)
    total = sum(
        (kronecker_symbol(delta, a // g) * hurwitz_h1(delta) for delta in par_discriminants(f // g)),
        Rational(0),
    )
    return -2 * g * total


def lemma_check(a: int, f: int) -> LemmaCheckReport:
    z = lemma_sum_numeric(a, f)
    rhs = lemma_rhs_exact(a, f)
    return LemmaCheckReport(a, f, z.real, z.imag, rhs, abs(z.real - float(rhs)))


def classical_dim_cusp_forms(w: int, N: int) -> int:
    """dim S_w(Gamma_0(N)) for even w >= 4 from the genus and elliptic/cusp counts.

    Self-contained on purpose: it shares no code with the Jacobi formulas.
    """
    if w < 4 or w % 2:
        raise DomainError(f"weight must be even and >= 4, got {w}")
    if N < 1:
        raise DomainError(f"level must be >= 1, got {N}")
    primes = factorize(N)
    mu = N
    for p in primes:
        mu = mu // p * (p + 1)
    # elliptic points: count solutions of x^2 + 1 = 0 and x^2 + x + 1 = 0 mod N
    nu2 = sum(1 for x in range(N) if (x * x + 1) % N == 0)
    nu3 = sum(1 for x in range(N) if (x * x + x + 1) % N == 0)
    cusps = 0
    for d in range(1, N + 1):
        if N % d == 0:
            h = gcd(d, N // d)
            cusps += sum(1 for x in range(1, h + 1) if gcd(x, h) == 1)
    genus = 1 + Fraction(mu, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(cusps, 2)
    assert genus.denominator == 1
    dim = (w - 1) * (genus - 1) + (w // 2 - 1) * cusps + nu2 * (w // 4) + nu3 * (w // 3)
    return int(dim)


def s_identity_dim(k: int, m: int) -> Rational:
    """dim S_{2k-2}(Gamma_0(m)) assembled from s-functions at n = 1, b = 1.

    Sums s^top + s^par + s^ell(-1) + s^ell(0) + s^ell(1) over divisors m' of m
    with m/m' square-free.
    """
    if k < 3:
        raise DomainError(f"k must be >= 3, got {k}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    total = Rational(0)
    for m1 in divisors(m):
        if not is_squarefree(m // m1):
            continue
        ctx = SContext(k, m1, 1)
        total += s_top(ctx, 1) + s_par(ctx, 1) + sum(s_ell(ctx, t) for t in (-1, 0, 1))
    return total


def _is_prime(p: int) -> bool:
    return p > 1 and factorize(p) == {p: 1}


def lifting_identity_check(p: int, k: int) -> bool:
    """Does dim S_{k,1}(Gamma_0(p)) equal dim S_{k,1} + dim S_{k,p} + (skew dim, conjectural) on SL(2,Z)?"""
    if not _is_prime(p) or p % 12 != 1:
        raise DomainError(f"p must be a prime congruent to 1 mod 12, got {p}")
    if k < 4 or k % 2:
        raise DomainError(f"k must be even and >= 4, got {k}")
    full = principal_congruence_scheme(1)
    lhs = dim_jacobi(k, 1, gamma0_scheme(p)).value
    rhs = dim_jacobi(k, 1, full).value + dim_jacobi(k, p, full).value + skew_dim_conjecture(k, p)
    return lhs == rhs


# ---------------------------------------------------------------------------
# grid suites, shared by the CLI ``check`` command


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    worst_error: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failed": len(self.failures),
            "worst_error": self.worst_error,
            "failures": self.failures[:20],
        }


def run_lemma_suite(max_a: int = 36, max_f: int = 36, tol: float = 1e-7) -> SuiteReport:
    report = SuiteReport("lemma")
    for a in range(1, max_a + 1):
        for f in range(1, max_f + 1):
            r = lemma_check(a, f)
            report.checked += 1
            err = max(r.abs_error, abs(r.lhs_imag))
            report.worst_error = max(report.worst_error, err)
            if not err < tol:
                report.failures.append(r.to_dict())
    return report


def run_identity_suite(max_k: int = 13, max_m: int = 60) -> SuiteReport:
    report = SuiteReport("identity")
    for k in range(3, max_k + 1):
        for m in range(1, max_m + 1):
            lhs = s_identity_dim(k, m)
            rhs = classical_dim_cusp_forms(2 * k - 2, m)
            report.checked += 1
            if lhs != rhs:
                report.failures.append({"k": k, "m": m, "s_sum": str(lhs), "classical": rhs})
                report.worst_error = max(report.worst_error, float(abs(lhs - rhs)))
    return report


def run_lifting_suite(primes=(13, 37, 61), weights=(4, 6, 8, 10, 12)) -> SuiteReport:
    report = SuiteReport("lifting")
    for p in primes:
        for k in weights:
            report.checked += 1
            if not lifting_identity_check(p, k):
                report.failures.append({"p": p, "k": k})
    return report


def run_equivalence_suite(
    max_k: int = 12, max_m: int = 36, max_N: int = 16, synthetic: int = 200, seed: int = 0
) -> SuiteReport:
    """Class-number form vs s-function form of the torsion-free formula."""
    rng = random.Random(seed)
    width_lists = [principal_congruence_scheme(N).regular_cusp_widths for N in range(3, max_N + 1)]
    width_lists += [
        [rng.randint(1, 24) for _ in range(rng.randint(1, 8))] for _ in range(synthetic)
    ]
    report = SuiteReport("equivalence")
    for widths in width_lists:
        for k in range(2, max_k + 1):
            for m in range(1, max_m + 1):
                report.checked += 1
                v1, v2 = theorem1_value(k, m, widths), theorem2_value(k, m, widths)
                if v1 != v2:
                    report.failures.append({"k": k, "m": m, "widths": list(widths), "t1": str(v1), "t2": str(v2)})
    return report
