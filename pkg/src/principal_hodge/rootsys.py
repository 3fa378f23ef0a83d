"""Cartan data for the simple complex Lie algebras (Bourbaki node numbering).

Conventions
-----------
``cartan[i][j] = 2 (a_i, a_j) / (a_i, a_i)``, so column ``j`` holds the Dynkin
labels of the simple root ``a_j`` and ``root_coords = cartan_inv . dynkin``.
All arithmetic is exact (``int`` / ``fractions.Fraction``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Sequence

__all__ = [
    "ResourceError",
    "ConfigurationError",
    "LieType",
    "RootSystem",
    "Weight",
    "build_root_system",
    "fundamental_weight",
    "dual_weight",
    "parse_lie_type",
    "DEFAULT_RANK_CEILING",
]

DEFAULT_RANK_CEILING = 12

FAMILIES = "ABCDEFG"

POSITIVE_ROOT_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


class ConfigurationError(ValueError):
    """Invalid Lie type, rank, index or ceiling value."""


class ResourceError(RuntimeError):
    """A configured ceiling would be exceeded."""


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES:
            raise ConfigurationError(f"unknown family {f!r}")
        if not isinstance(r, int) or r < 1:
            raise ConfigurationError(f"rank must be a positive integer, got {r!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[f]
        if not ok:
            raise ConfigurationError(f"invalid rank {r} for family {f}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_lie_type(family: str, rank: int | str | None = None) -> LieType:
    """Accept ``("B", 3)``, ``("B3",)`` or ``("b", "3")``."""
    family = family.strip().upper()
    if rank is None:
        family, rank = family[0], family[1:]
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise ConfigurationError(f"bad rank {rank!r}") from None
    return LieType(family, rank)


def _chain(r: int) -> list[list[int]]:
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
        if i + 1 < r:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cartan_matrix(t: LieType) -> list[list[int]]:
    f, r = t.family, t.rank
    if f == "A":
        return _chain(r)
    if f == "B":
        a = _chain(r)
        a[r - 1][r - 2] = -2  # a_r short
        return a
    if f == "C":
        a = _chain(r)
        a[r - 2][r - 1] = -2  # a_r long
        return a
    if f == "D":
        a = _chain(r)
        # 1 - ... - (r-2) - (r-1), and (r-2) - r
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
        return a
    if f == "E":
        a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, r)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if f == "F":
        a = _chain(4)
        a[2][1] = -2  # a_1, a_2 long; a_3, a_4 short
        return a
    # G2: a_1 short, a_2 long
    return [[2, -3], [-1, 2]]


def _duality(t: LieType) -> tuple[int, ...]:
    """0-based permutation p with (mu*)_i = mu_{p[i]}."""
    f, r = t.family, t.rank
    ident = list(range(r))
    if f == "A":
        return tuple(reversed(ident))
    if f == "D" and r % 2 == 1:
        ident[r - 2], ident[r - 1] = r - 1, r - 2
    elif f == "E" and r == 6:
        return (5, 1, 4, 3, 2, 0)
    return tuple(ident)


def _invert(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [row[n:] for row in m]


def _symmetrizer(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Smallest positive integers d with d_i a_ij = d_j a_ji; d_i = (a_i, a_i)/2 up to scale."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    den = lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    return tuple(ints)


@dataclass(frozen=True, eq=True)
class Weight:
    """Lattice point; identity and hashing use the integer Dynkin labels only."""

    dynkin: tuple[int, ...]
    root_coords: tuple[Fraction, ...] = field(compare=False, repr=False)

    @property
    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.dynkin)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.dynkin), tuple(-x for x in self.root_coords))

    def __str__(self):
        return "(" + ",".join(map(str, self.dynkin)) + ")"


@dataclass(frozen=True, eq=False)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    cartan_inv: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    weyl_vector_rho: tuple[Fraction, ...]
    duality: tuple[int, ...]
    symmetrizer: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.lie_type == self.lie_type

    def __hash__(self):
        return hash(self.lie_type)

    def __repr__(self):
        return f"RootSystem({self.lie_type})"

    def weight(self, dynkin: Sequence[int]) -> Weight:
        dynkin = tuple(int(x) for x in dynkin)
        if len(dynkin) != self.rank:
            raise ConfigurationError(
                f"{self.lie_type} weights have {self.rank} labels, got {len(dynkin)}")
        den = self._inv_den
        coords = tuple(Fraction(sum(c * x for c, x in zip(row, dynkin)), den)
                       for row in self._inv_scaled)
        return Weight(dynkin, coords)

    @cached_property
    def _inv_den(self) -> int:
        return lcm(*(x.denominator for row in self.cartan_inv for x in row))

    @cached_property
    def _inv_scaled(self) -> tuple[tuple[int, ...], ...]:
        den = self._inv_den
        return tuple(tuple(int(x * den) for x in row) for row in self.cartan_inv)

    def simple_root(self, i: int) -> tuple[int, ...]:
        """Dynkin labels of the simple root a_i (0-based)."""
        return tuple(row[i] for row in self.cartan)

    def root_dynkin(self, root: Sequence[int]) -> tuple[int, ...]:
        """Dynkin labels of a root given in simple-root coordinates."""
        return tuple(sum(row[j] * root[j] for j in range(self.rank)) for row in self.cartan)

    def inner(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """Invariant form on root coordinates, normalised by the symmetrizer."""
        r = self.rank
        d = self.symmetrizer
        return sum((x[i] * d[i] * self.cartan[i][j] * y[j]
                    for i in range(r) for j in range(r)), Fraction(0))


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            labels = [sum(cartan[i][j] * beta[j] for j in range(r)) for i in range(r)]
            for i in range(r):
                # p = length of the a_i-string below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - labels[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda a: (sum(a), a))


@lru_cache(maxsize=None)
def _build(t: LieType) -> RootSystem:
    a = _cartan_matrix(t)
    inv = _invert(a)
    pos = _positive_roots(a)
    r = t.rank
    rho = tuple(sum(inv[i]) for i in range(r))
    return RootSystem(
        lie_type=t,
        cartan=tuple(tuple(row) for row in a),
        cartan_inv=tuple(tuple(row) for row in inv),
        positive_roots=tuple(pos),
        weyl_vector_rho=rho,
        duality=_duality(t),
        symmetrizer=_symmetrizer(a),
    )


def build_root_system(t: LieType | str, rank_ceiling: int = DEFAULT_RANK_CEILING) -> RootSystem:
    if isinstance(t, str):
        t = parse_lie_type(t)
    if t.rank > rank_ceiling:
        raise ResourceError(f"rank {t.rank} exceeds the rank ceiling {rank_ceiling}")
    return _build(t)


def fundamental_weight(rs: RootSystem, k: int) -> Weight:
    """The k-th fundamental weight, 1-based."""
    if not 1 <= k <= rs.rank:
        raise ConfigurationError(f"fundamental weight index {k} out of range 1..{rs.rank}")
    return rs.weight(tuple(int(i == k - 1) for i in range(rs.rank)))


def dual_weight(rs: RootSystem, mu: Weight) -> Weight:
    return rs.weight(tuple(mu.dynkin[p] for p in rs.duality))
