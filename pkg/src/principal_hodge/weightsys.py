"""Weight systems of irreducible highest-weight modules.

Multiplicities come from Freudenthal's recursion over the dominant weights,
followed by Weyl-orbit expansion through simple reflections.  Every weight is
carried together with its lowering vector ``lam`` (``weight = mu - sum lam_i a_i``),
which is the notation the classification code works in.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm, prod
from typing import Iterator, Mapping, Sequence

from .rootsys import (
    ResourceError,
    ConfigurationError,
    LieType,
    RootSystem,
    Weight,
    build_root_system,
    dual_weight,
)

__all__ = [
    "ResourceError",
    "WeightSystem",
    "MFCatalogEntry",
    "weyl_dim",
    "weight_system",
    "is_weight_multiplicity_free",
    "mf_catalog",
    "spin_weight_oracle",
    "lowering_to_weight",
    "DEFAULT_DIM_CEILING",
    "DEFAULT_SYM_DEGREE_CEILING",
]

DEFAULT_DIM_CEILING = 100_000
DEFAULT_SYM_DEGREE_CEILING = 64



@dataclass(frozen=True)
class WeightSystem:
    rs: RootSystem
    highest_weight: Weight
    entries: Mapping[Weight, int]

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    def lowering(self, lam: Weight) -> tuple[int, ...]:
        """Integer vector l with lam = mu - sum l_i a_i."""
        return tuple(int(a - b) for a, b in zip(self.highest_weight.root_coords, lam.root_coords))

    def sorted_weights(self) -> list[Weight]:
        return sorted(self.entries, key=lambda w: w.dynkin)

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.entries)


@dataclass(frozen=True)
class MFCatalogEntry:
    lie_type: LieType
    highest_weight: Weight
    description: str
    self_dual: bool

    @property
    def dynkin(self) -> tuple[int, ...]:
        return self.highest_weight.dynkin


def _require_dominant(mu: Weight):
    if not mu.is_dominant:
        raise ConfigurationError(f"highest weight {mu} is not dominant")


def weyl_dim(rs: RootSystem, mu: Weight) -> int:
    _require_dominant(mu)
    d = rs.symmetrizer
    num = den = 1
    for alpha in rs.positive_roots:
        # (lambda, alpha^vee) up to the common factor (alpha, alpha)/2
        num *= sum(k * di * (m + 1) for k, di, m in zip(alpha, d, mu.dynkin))
        den *= sum(k * di for k, di in zip(alpha, d))
    q, rem = divmod(num, den)
    assert rem == 0, "Weyl dimension formula gave a non-integer"
    return q


class _Form:
    """Integer-scaled invariant form on Dynkin coordinates."""

    def __init__(self, rs: RootSystem):
        r = rs.rank
        # (w_i, w_j) = cartan_inv[j][i] * d_j
        g = [[rs.cartan_inv[j][i] * rs.symmetrizer[j] for j in range(r)] for i in range(r)]
        self.scale = lcm(*(x.denominator for row in g for x in row))
        self.g = [[int(x * self.scale) for x in row] for row in g]
        self.r = r

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        g = self.g
        return sum(x[i] * g[i][j] * y[j] for i in range(self.r) for j in range(self.r) if x[i] and y[j])


def _reflect(rs: RootSystem, dyn: tuple[int, ...], i: int) -> tuple[int, ...]:
    c = dyn[i]
    if c == 0:
        return dyn
    return tuple(x - c * row[i] for x, row in zip(dyn, rs.cartan))


def _dominant_rep(rs: RootSystem, dyn: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        for i, x in enumerate(dyn):
            if x < 0:
                dyn = _reflect(rs, dyn, i)
                break
        else:
            return dyn


def _dominant_weights(rs: RootSystem, mu: tuple[int, ...]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Dominant weights below mu, mapped to their lowering vectors."""
    roots = [(rs.root_dynkin(a), a) for a in rs.positive_roots]
    found = {mu: (0,) * rs.rank}
    frontier = [mu]
    while frontier:
        nxt = []
        for lam in frontier:
            low = found[lam]
            for adyn, acoef in roots:
                nu = tuple(x - y for x, y in zip(lam, adyn))
                if min(nu) < 0 or nu in found:
                    continue
                found[nu] = tuple(x + y for x, y in zip(low, acoef))
                nxt.append(nu)
        frontier = nxt
    return found


def _freudenthal(rs: RootSystem, mu: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    dom = _dominant_weights(rs, mu)
    form = _Form(rs)
    rho = (1,) * rs.rank
    roots = [rs.root_dynkin(a) for a in rs.positive_roots]

    def shifted_norm(x):
        y = tuple(a + b for a, b in zip(x, rho))
        return form(y, y)

    top = shifted_norm(mu)
    mult = {mu: 1}
    for lam in sorted(dom, key=lambda w: sum(dom[w])):
        if lam == mu:
            continue
        acc = 0
        for adyn in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(lam, adyn))
                m = mult.get(_dominant_rep(rs, nu))
                if m is None:
                    break
                acc += m * form(nu, adyn)
                k += 1
        denom = top - shifted_norm(lam)
        q, rem = divmod(2 * acc, denom)
        assert rem == 0 and denom > 0, "Freudenthal recursion produced a non-integer"
        mult[lam] = q
    return {k: v for k, v in mult.items() if v}


def _orbit(rs: RootSystem, dyn: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen = {dyn}
    stack = [dyn]
    while stack:
        w = stack.pop()
        for i in range(rs.rank):
            v = _reflect(rs, w, i)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


@lru_cache(maxsize=256)
def _weight_system_cached(t: LieType, mu: tuple[int, ...]) -> WeightSystem:
    rs = build_root_system(t, rank_ceiling=t.rank)
    entries: dict[Weight, int] = {}
    for dom, m in _freudenthal(rs, mu).items():
        for w in _orbit(rs, dom):
            entries[rs.weight(w)] = m
    return WeightSystem(rs, rs.weight(mu), entries)


def weight_system(rs: RootSystem, mu: Weight, dim_ceiling: int = DEFAULT_DIM_CEILING) -> WeightSystem:
    d = weyl_dim(rs, mu)
    if d > dim_ceiling:
        raise ResourceError(
            f"{rs.lie_type} module {mu} has dimension {d}, above the dimension ceiling {dim_ceiling}")
    return _weight_system_cached(rs.lie_type, mu.dynkin)


def is_weight_multiplicity_free(ws: WeightSystem) -> bool:
    return all(m == 1 for m in ws.entries.values())


def mf_catalog(t: LieType, sym_degree_ceiling: int = DEFAULT_SYM_DEGREE_CEILING) -> list[MFCatalogEntry]:
    """Irreducible weight multiplicity-free modules, by highest weight."""
    rs = build_root_system(t, rank_ceiling=t.rank)
    r = t.rank

    def w(k, p=1):
        return rs.weight(tuple(p if i == k - 1 else 0 for i in range(r)))

    listed: list[tuple[Weight, str]] = []
    if t.family == "A":
        listed += [(w(k), f"wedge:{k}") for k in range(1, r + 1)]
        for a in range(2, sym_degree_ceiling + 1):
            listed.append((w(1, a), f"sym:{a}"))
            listed.append((w(r, a), f"sym*:{a}"))
    elif t.family == "B":
        listed += [(w(1), "standard"), (w(r), "spin")]
    elif t.family == "C":
        listed.append((w(1), "standard"))
        if r in (2, 3):
            listed.append((w(r), f"wedge:{r}"))
    elif t.family == "D":
        listed += [(w(1), "standard"), (w(r - 1), "spin-"), (w(r), "spin")]
    elif t.family == "E" and r == 6:
        listed += [(w(1), "minuscule"), (w(6), "minuscule*")]
    elif t.family == "E" and r == 7:
        listed.append((w(7), "minuscule"))
    elif t.family == "G":
        listed.append((w(1), "standard"))

    out, seen = [], set()
    for mu, label in listed:
        if mu in seen:
            continue
        seen.add(mu)
        out.append(MFCatalogEntry(t, mu, label, dual_weight(rs, mu) == mu))
    return out


def spin_weight_oracle(t: LieType, which: str = "B_spin") -> list[tuple[int, ...]]:
    """Lowering vectors of a spin module, from the closed-form parameterisations.

    ``which`` is ``B_spin`` (mu = w_r of B_r), ``D_last`` (mu = w_r of D_r) or
    ``D_second_last`` (mu = w_{r-1} of D_r).
    """
    r = t.rank
    if which == "B_spin":
        if t.family != "B":
            raise ConfigurationError("B_spin oracle needs family B")
        out = []
        for steps in itertools.product((0, 1), repeat=r):
            out.append(tuple(itertools.accumulate(steps)))
        return sorted(out)
    if which not in ("D_last", "D_second_last"):
        raise ConfigurationError(f"unknown spin oracle {which!r}")
    if t.family != "D" or r < 3:
        raise ConfigurationError(f"{which} oracle needs family D")
    out = []
    for steps in itertools.product((0, 1), repeat=r - 2):
        head = tuple(itertools.accumulate(steps))
        x = head[-1]
        for a, b in itertools.product((0, 1), repeat=2):
            # a = top difference, b = last + second_last - x
            if (a + b + x) % 2:
                continue
            hi = (a + b + x) // 2
            lo = hi - a
            tail = (lo, hi) if which == "D_last" else (hi, lo)
            out.append(head + tail)
    return sorted(out)


def lowering_to_weight(rs: RootSystem, mu: Weight, lam: Sequence[int]) -> Weight:
    dyn = list(mu.dynkin)
    for j, k in enumerate(lam):
        if k:
            for i in range(rs.rank):
                dyn[i] -= k * rs.cartan[i][j]
    return rs.weight(dyn)


def sym_dim(r: int, p: int) -> int:
    """dim Sym^p C^{r+1}."""
    return comb(p + r, r)

