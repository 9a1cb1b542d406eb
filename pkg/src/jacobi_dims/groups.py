"""Branching schemes of finite-index subgroups of SL(2, Z).

A :class:`BranchingScheme` records exactly what the dimension formulas need:
whether -1 lies in the group, the cusp widths split into regular and
irregular cusps, and the numbers of elliptic orbits of order 2 and 3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import DomainError
from .exact_arith import divisors, euler_phi, factorize, gcd, kronecker_symbol, psi_index

__all__ = [
    "BranchingScheme",
    "psl_index",
    "principal_congruence_scheme",
    "gamma0_scheme",
    "gamma1_scheme",
    "nu2",
    "nu3",
    "scheme_from_descriptor",
]


@dataclass(frozen=True)
class BranchingScheme:
    contains_minus_one: bool
    regular_cusp_widths: tuple[int, ...]
    irregular_cusp_widths: tuple[int, ...] = ()
    e0: int = 0
    e1: int = 0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        # accept any iterable of widths, store sorted tuples
        object.__setattr__(self, "regular_cusp_widths", tuple(sorted(self.regular_cusp_widths)))
        object.__setattr__(self, "irregular_cusp_widths", tuple(sorted(self.irregular_cusp_widths)))
        self.validate()

    def validate(self) -> None:
        widths = self.regular_cusp_widths + self.irregular_cusp_widths
        if not widths:
            raise DomainError("scheme must have at least one cusp")
        if any(not isinstance(b, int) or isinstance(b, bool) or b < 1 for b in widths):
            raise DomainError(f"cusp widths must be positive integers, got {list(widths)}")
        for name in ("e0", "e1"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise DomainError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.contains_minus_one and self.irregular_cusp_widths:
            raise DomainError("a group containing -1 has no irregular cusps")
        if not self.contains_minus_one and self.e0:
            raise DomainError("a group without -1 has e0 = 0 (order-4 elements square to -1)")

    @property
    def cusp_count(self) -> int:
        return len(self.regular_cusp_widths) + len(self.irregular_cusp_widths)

    def psl_index(self) -> int:
        return sum(self.regular_cusp_widths) + sum(self.irregular_cusp_widths)

    def sl_index(self) -> int:
        """[SL(2,Z) : Gamma]."""
        return self.psl_index() * (1 if self.contains_minus_one else 2)

    def to_dict(self) -> dict[str, Any]:
        return {
            "minus_one": self.contains_minus_one,
            "regular_widths": list(self.regular_cusp_widths),
            "irregular_widths": list(self.irregular_cusp_widths),
            "e0": self.e0,
            "e1": self.e1,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Any, label: str = "") -> BranchingScheme:
        if not isinstance(data, dict):
            raise DomainError("scheme JSON must be an object")
        unknown = set(data) - {"minus_one", "regular_widths", "irregular_widths", "e0", "e1"}
        if unknown:
            raise DomainError(f"unknown scheme keys: {sorted(unknown)}")
        if "minus_one" not in data or not isinstance(data["minus_one"], bool):
            raise DomainError("scheme needs a boolean 'minus_one'")
        for key in ("regular_widths", "irregular_widths"):
            if not isinstance(data.get(key, []), list):
                raise DomainError(f"'{key}' must be a list of integers")
        return cls(
            contains_minus_one=data["minus_one"],
            regular_cusp_widths=tuple(data.get("regular_widths", [])),
            irregular_cusp_widths=tuple(data.get("irregular_widths", [])),
            e0=data.get("e0", 0),
            e1=data.get("e1", 0),
            label=label,
        )

    @classmethod
    def from_json(cls, text: str, label: str = "") -> BranchingScheme:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed scheme JSON: {exc}") from None
        return cls.from_dict(data, label=label)


def psl_index(scheme: BranchingScheme) -> int:
    return scheme.psl_index()


def _check_level(N: int) -> None:
    if N < 1:
        raise DomainError(f"level N must be >= 1, got {N}")


def principal_congruence_scheme(N: int) -> BranchingScheme:
    _check_level(N)
    label = f"Gamma({N})"
    if N == 1:
        return BranchingScheme(True, (1,), e0=1, e1=1, label=label)
    if N == 2:
        return BranchingScheme(True, (2, 2, 2), label=label)
    cusps = euler_phi(N) * psi_index(N) // 2
    return BranchingScheme(False, (N,) * cusps, label=label)


def nu2(N: int) -> int:
    """Number of elliptic points of order 2 of Gamma_0(N)."""
    _check_level(N)
    if N % 4 == 0:
        return 0
    out = 1
    for p in factorize(N):
        if p != 2:
            out *= 1 + kronecker_symbol(-1, p)
    return out


def nu3(N: int) -> int:
    """Number of elliptic points of order 3 of Gamma_0(N)."""
    _check_level(N)
    if N % 9 == 0:
        return 0
    out = 1
    for p in factorize(N):
        out *= 1 + kronecker_symbol(-3, p)
    return out


def gamma0_scheme(N: int) -> BranchingScheme:
    _check_level(N)
    widths = []
    for c in divisors(N):
        widths += [N // gcd(c * c, N)] * euler_phi(gcd(c, N // c))
    return BranchingScheme(True, tuple(widths), e0=nu2(N), e1=nu3(N), label=f"Gamma0({N})")


def gamma1_scheme(N: int) -> BranchingScheme:
    _check_level(N)
    label = f"Gamma1({N})"
    if N <= 2:
        s = gamma0_scheme(N)
        return BranchingScheme(True, s.regular_cusp_widths, e0=s.e0, e1=s.e1, label=label)
    if N == 3:
        return BranchingScheme(False, (1, 3), e1=1, label=label)
    if N == 4:
        return BranchingScheme(False, (1, 4), (1,), label=label)
    # cusps a/c with gcd(c, N) = d: phi(d) phi(N/d) / 2 of them, each of width N/d
    widths = []
    for d in divisors(N):
        widths += [N // d] * (euler_phi(d) * euler_phi(N // d) // 2)
    return BranchingScheme(False, tuple(widths), label=label)


def scheme_from_descriptor(descriptor: str) -> BranchingScheme:
    """Parse ``gammaN:<N>``, ``gamma0:<N>``, ``gamma1:<N>`` or ``scheme:<path>``."""
    kind, sep, arg = descriptor.partition(":")
    if not sep:
        raise DomainError(f"group descriptor must look like kind:arg, got {descriptor!r}")
    if kind == "scheme":
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read scheme file {arg!r}: {exc.strerror}") from None
        return BranchingScheme.from_json(text, label=descriptor)
    constructors = {
        "gammaN": principal_congruence_scheme,
        "gamma0": gamma0_scheme,
        "gamma1": gamma1_scheme,
    }
    if kind not in constructors:
        raise DomainError(f"unknown group kind {kind!r}; expected gammaN, gamma0, gamma1 or scheme")
    try:
        N = int(arg)
    except ValueError:
        raise DomainError(f"level must be an integer, got {arg!r}") from None
    return constructors[kind](N)
