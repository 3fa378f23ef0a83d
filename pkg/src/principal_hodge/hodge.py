"""Grading elements, eigenvalue multisets, Hodge numbers and the principal test.

A grading element is ``T = sum n_i T^i`` with ``sigma_i(T^j) = delta_ij``, so a
weight ``lam`` (in simple-root coordinates ``c``) has eigenvalue ``sum c_i n_i``.
Eigenvalues live in ``(1/2)Z`` and are carried as :class:`HalfInt`.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Sequence

from .rootsys import ConfigurationError, RootSystem, Weight, dual_weight
from .weightsys import DEFAULT_DIM_CEILING, WeightSystem, weight_system, weyl_dim

__all__ = [
    "HalfInt",
    "GradingElement",
    "Pairing",
    "Structure",
    "ModuleSpec",
    "EigenReport",
    "Reason",
    "Verdict",
    "eigenvalue",
    "eigen_report",
    "t_compact",
    "rcq_structure",
    "is_principal",
]


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """The number ``twice / 2``."""

    twice: int

    @classmethod
    def of(cls, x: int | Fraction) -> "HalfInt":
        x = Fraction(x)
        if (2 * x).denominator != 1:
            raise ArithmeticError(f"{x} is not a half-integer")
        return cls(int(2 * x))

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice < other.twice

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __str__(self):
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


@dataclass(frozen=True)
class GradingElement:
    n: tuple[int, ...]

    def __post_init__(self):
        n = tuple(int(x) for x in self.n)
        if any(x < 0 for x in n):
            raise ConfigurationError(f"grading element entries must be >= 0, got {n}")
        object.__setattr__(self, "n", n)

    def __len__(self):
        return len(self.n)

    def __str__(self):
        return "(" + ",".join(map(str, self.n)) + ")"


class Pairing(enum.Enum):
    SELF_DUAL_SINGLE = "SelfDualSingle"  # V_C = U, U self-dual
    COMPLEX_PAIR = "ComplexPair"  # V_C = U + U*, U not self-dual
    QUATERNIONIC_PAIR = "QuaternionicPair"  # V_C = U + U, U self-dual


class Structure(enum.Enum):
    REAL = "Real"
    QUATERNIONIC = "Quaternionic"
    COMPLEX = "Complex"


@dataclass(frozen=True)
class ModuleSpec:
    rs: RootSystem
    mu: Weight
    pairing: Pairing

    def __post_init__(self):
        if len(self.mu.dynkin) != self.rs.rank:
            raise ConfigurationError("highest weight has the wrong rank")
        if not self.mu.is_dominant:
            raise ConfigurationError(f"highest weight {self.mu} is not dominant")
        sd = self.self_dual
        if self.pairing is Pairing.COMPLEX_PAIR and sd:
            raise ConfigurationError(f"{self.mu} is self-dual; ComplexPair needs mu* != mu")
        if self.pairing is not Pairing.COMPLEX_PAIR and not sd:
            raise ConfigurationError(f"{self.mu} is not self-dual; use ComplexPair")

    @classmethod
    def natural(cls, rs: RootSystem, mu: Weight) -> "ModuleSpec":
        """SelfDualSingle for self-dual mu, ComplexPair otherwise."""
        p = Pairing.SELF_DUAL_SINGLE if dual_weight(rs, mu) == mu else Pairing.COMPLEX_PAIR
        return cls(rs, mu, p)

    @property
    def self_dual(self) -> bool:
        return dual_weight(self.rs, self.mu) == self.mu

    @property
    def dual(self) -> Weight:
        return dual_weight(self.rs, self.mu)

    @property
    def dim_u(self) -> int:
        return weyl_dim(self.rs, self.mu)

    @property
    def dim_vc(self) -> int:
        return self.dim_u if self.pairing is Pairing.SELF_DUAL_SINGLE else 2 * self.dim_u

    @property
    def target_m(self) -> HalfInt:
        return HalfInt(self.dim_vc - 1)

    def weights(self, dim_ceiling: int = DEFAULT_DIM_CEILING) -> WeightSystem:
        return weight_system(self.rs, self.mu, dim_ceiling)

    def __str__(self):
        return f"{self.rs.lie_type} mu={self.mu} {self.pairing.value}"


@dataclass(frozen=True)
class EigenReport:
    multiset: dict[HalfInt, int]
    m: HalfInt
    hodge_numbers: tuple[int, ...]
    uniform: bool  # every eigenvalue lies in m - Z

    @property
    def dim(self) -> int:
        return sum(self.multiset.values())


class Reason(enum.Enum):
    NON_POSITIVE_N = "NonPositiveN"
    GAP_IN_EIGENVALUES = "GapInEigenvalues"
    MULTIPLICITY_ABOVE_ONE = "MultiplicityAboveOne"
    WRONG_M = "WrongM"
    QUATERNIONIC_SELF_DUAL = "QuaternionicSelfDual"
    SHARED_WEIGHT_WITH_DUAL = "SharedWeightWithDual"


@dataclass(frozen=True)
class Verdict:
    principal: bool
    reasons: tuple[Reason, ...] = ()
    structure: Structure | None = None
    report: EigenReport | None = field(default=None, repr=False)

    @property
    def reason(self) -> Reason | None:
        """The first failed clause."""
        return self.reasons[0] if self.reasons else None

    def __bool__(self):
        return self.principal


def _check_len(rs: RootSystem, g: GradingElement):
    if len(g.n) != rs.rank:
        raise ConfigurationError(f"grading element {g} has length {len(g.n)}, rank is {rs.rank}")


def eigenvalue(rs: RootSystem, lam: Weight, g: GradingElement) -> HalfInt:
    _check_len(rs, g)
    return HalfInt.of(sum((c * n for c, n in zip(lam.root_coords, g.n)), Fraction(0)))


def eigen_report(spec: ModuleSpec, g: GradingElement,
                 dim_ceiling: int = DEFAULT_DIM_CEILING) -> EigenReport:
    rs = spec.rs
    _check_len(rs, g)
    ws = spec.weights(dim_ceiling)
    ms: Counter[HalfInt] = Counter()
    for lam, mult in ws.entries.items():
        ev = eigenvalue(rs, lam, g)
        if spec.pairing is Pairing.SELF_DUAL_SINGLE:
            ms[ev] += mult
        elif spec.pairing is Pairing.COMPLEX_PAIR:
            ms[ev] += mult
            ms[-ev] += mult
        else:
            ms[ev] += 2 * mult
    m = max(ms)
    uniform = all((k.twice - m.twice) % 2 == 0 for k in ms)
    hodge = tuple(ms.get(HalfInt(t), 0) for t in range(m.twice, -m.twice - 1, -2))
    return EigenReport(dict(sorted(ms.items(), reverse=True)), m, hodge, uniform)


def t_compact(g: GradingElement) -> GradingElement:
    return GradingElement(tuple(2 if x % 2 == 0 else 0 for x in g.n))


def rcq_structure(spec: ModuleSpec, g: GradingElement) -> Structure:
    if not spec.self_dual:
        return Structure.COMPLEX
    v = eigenvalue(spec.rs, spec.mu, t_compact(g))
    if not v.is_integer:
        raise ArithmeticError(f"mu(T^cpt) = {v} is not an integer for self-dual {spec.mu}")
    return Structure.REAL if v.twice % 4 == 0 else Structure.QUATERNIONIC


def is_principal(spec: ModuleSpec, g: GradingElement,
                 dim_ceiling: int = DEFAULT_DIM_CEILING) -> Verdict:
    _check_len(spec.rs, g)
    reasons: list[Reason] = []
    if any(x < 1 for x in g.n):
        reasons.append(Reason.NON_POSITIVE_N)
    try:
        rep = eigen_report(spec, g, dim_ceiling)
    except ArithmeticError:
        # some eigenvalue lies outside (1/2)Z: g does not grade V_C by half-integers
        rep = None
        reasons.append(Reason.GAP_IN_EIGENVALUES)
    if rep is not None:
        if any(v > 1 for v in rep.multiset.values()):
            reasons.append(Reason.MULTIPLICITY_ABOVE_ONE)
        if not rep.uniform or 0 in rep.hodge_numbers:
            reasons.append(Reason.GAP_IN_EIGENVALUES)
        if rep.m != spec.target_m:
            reasons.append(Reason.WRONG_M)
    structure = rcq_structure(spec, g)
    if structure is Structure.QUATERNIONIC:
        reasons.append(Reason.QUATERNIONIC_SELF_DUAL)
    if spec.pairing is Pairing.COMPLEX_PAIR:
        lams = set(spec.weights(dim_ceiling).entries)
        if any(-lam in lams for lam in lams):
            reasons.append(Reason.SHARED_WEIGHT_WITH_DUAL)
    return Verdict(not reasons, tuple(reasons), structure, rep)


def grading(n: Sequence[int]) -> GradingElement:
    return GradingElement(tuple(n))
