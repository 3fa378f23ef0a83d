"""Exhaustive, pruned search for principal grading elements.

Every weight of ``V_C`` is written as ``top - depth`` where ``depth`` is an
integer-valued nonnegative linear form in the unknowns.  With ``M = dim V_C - 1``
the grading is principal exactly when the depths are a permutation of
``0..M`` (and the real/complex gate holds).  The search assigns one unknown at a
time and prunes with

* the linear constraint ``mu(T) = m`` (and ``mu*(T) = m - delta`` for pairs),
* distinctness and range of the depths already determined,
* coverage: every depth below the smallest undetermined lower bound must
  already be taken,
* a gap rule bounding the unknowns that can still reach the first free depth.

Leaves are re-checked from scratch with :func:`hodge.is_principal`.
"""
from __future__ import annotations

import functools
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .hodge import (GradingElement, HalfInt, ModuleSpec, Pairing, Reason, Structure,
                    Verdict, is_principal)
from .rootsys import ConfigurationError, LieType, RootSystem, Weight, build_root_system, dual_weight
from .weightsys import (DEFAULT_DIM_CEILING, DEFAULT_SYM_DEGREE_CEILING, MFCatalogEntry,
                        ResourceError, mf_catalog, weyl_dim)

__all__ = [
    "SearchOptions",
    "SearchProblem",
    "Solution",
    "SearchResult",
    "FilterResult",
    "enumerate_gradings",
    "type_a_filters",
    "principal_gradings",
    "search_principal",
    "naive_search",
    "diagram_automorphisms",
]


@dataclass(frozen=True)
class SearchOptions:
    dim_ceiling: int = DEFAULT_DIM_CEILING
    sym_degree_ceiling: int = DEFAULT_SYM_DEGREE_CEILING
    use_filters: bool = True
    # False: accept gradings with the principal eigenvalue pattern even when
    # the self-dual module is quaternionic (used for the h=(2,...,2) remarks)
    require_structure: bool = True
    dedupe: bool = False
    threads: int = 1


@dataclass(frozen=True)
class SearchProblem:
    spec: ModuleSpec
    canonicalize: bool = True

    @property
    def target_m(self) -> HalfInt:
        return self.spec.target_m


@dataclass(frozen=True, order=True)
class Solution:
    lie_type: LieType
    dynkin: tuple[int, ...]
    n: tuple[int, ...]
    pairing: Pairing = field(compare=False)
    structure: Structure = field(compare=False)

    @property
    def key(self) -> tuple[str, tuple[int, ...], tuple[int, ...]]:
        return (str(self.lie_type), self.dynkin, self.n)


@dataclass(frozen=True)
class FilterResult:
    ok: bool
    lemma: str | None = None
    detail: str = ""
    fixed: tuple[tuple[int, int], ...] = ()  # (0-based index, value) restrictions

    def __bool__(self):
        return self.ok


@dataclass
class SearchResult:
    solutions: list[Solution] = field(default_factory=list)
    filtered: list[tuple[MFCatalogEntry | Weight, FilterResult]] = field(default_factory=list)
    skipped: list[tuple[MFCatalogEntry | Weight, str]] = field(default_factory=list)

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)

    @property
    def keys(self) -> set:
        return {s.key for s in self.solutions}


# --------------------------------------------------------------------------
# linear-constraint stream


def _coords(spec: ModuleSpec) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    c = spec.mu.root_coords
    if any(x <= 0 for x in c):
        raise ConfigurationError(
            f"{spec.mu} has a non-positive simple-root coordinate; the constraint mu(T) = m is unbounded")
    return c, spec.dual.root_coords


def enumerate_gradings(problem: SearchProblem) -> Iterator[GradingElement]:
    """All n >= 1 whose top eigenvalue equals the target m, lexicographically descending.

    With ``canonicalize`` the highest weight mu itself carries the top
    eigenvalue; otherwise gradings where only mu* reaches m are included too.
    """
    spec = problem.spec
    c, cs = _coords(spec)
    m = problem.target_m.to_fraction()
    r = len(c)

    def solve(coef):
        # n >= 1 with coef . n = m, descending lexicographic
        def rec(i, budget):
            if i == r - 1:
                q = budget / coef[i]
                if q.denominator == 1 and q >= 1:
                    yield (int(q),)
                return
            rest = sum(coef[i + 1:])
            hi = (budget - rest) // coef[i]
            for v in range(int(hi), 0, -1):
                for tail in rec(i + 1, budget - v * coef[i]):
                    yield (v,) + tail
        return rec(0, m)

    def value(coef, n):
        return sum((a * b for a, b in zip(coef, n)), Fraction(0))

    first = (n for n in solve(c) if value(cs, n) <= m)
    if problem.canonicalize or spec.self_dual:
        yield from (GradingElement(n) for n in first)
        return
    second = (n for n in solve(cs) if value(c, n) < m)
    merged = sorted(set(first) | set(second), reverse=True)
    yield from (GradingElement(n) for n in merged)


# --------------------------------------------------------------------------
# necessary conditions


def _liv_fixed(spec: ModuleSpec) -> tuple[tuple[int, int], ...]:
    """Real U with mu = p w_i: the two top eigenvalues m, m - n_i force n_i = 1."""
    support = [i for i, x in enumerate(spec.mu.dynkin) if x]
    if spec.pairing is Pairing.SELF_DUAL_SINGLE and len(support) == 1:
        return ((support[0], 1),)
    return ()


def type_a_filters(t: LieType, mu: Weight, pairing: Pairing) -> FilterResult:
    if t.family != "A":
        raise ConfigurationError("type_a_filters needs family A")
    r = t.rank
    rs = build_root_system(t, rank_ceiling=r)
    if (r + 1) % 2:
        return FilterResult(False, "L:r+1", f"r+1 = {r + 1} is odd")
    support = [i for i, x in enumerate(mu.dynkin) if x]
    fixed = _liv_fixed(ModuleSpec(rs, mu, pairing))
    if len(support) != 1:
        return FilterResult(True, fixed=fixed)
    (i,) = support
    p = mu.dynkin[i]
    if pairing is Pairing.COMPLEX_PAIR and r > 1 and i in (0, r - 1):
        # Sym^p or its dual
        two_p = 2 * p
        if math.factorial(r + 1) % two_p:
            return FilterResult(False, "L:Ar_pw1", f"(r+1)! = {math.factorial(r + 1)} is not divisible by 2p = {two_p}")
        if two_p % (r + 1) == 0:
            return FilterResult(False, "L:Ar_pw1", f"2p = {two_p} is divisible by r+1 = {r + 1}")
        # 2 dim U - 1 = 2 p w_1(T) with w_1(T) in Z/(r+1)
        lhs = (2 * weyl_dim(rs, mu) - 1) * (r + 1)
        if lhs % two_p:
            return FilterResult(False, "L:Ar_pw1",
                                f"(2 dim U - 1)(r+1) = {lhs} is not divisible by 2p = {two_p}")
    if pairing is Pairing.COMPLEX_PAIR and p == 1 and (i + 1) % 2 == 0:
        k2 = i + 1
        if k2 <= r and 2 * k2 != r + 1 and (r + 1) % 4:
            return FilterResult(False, "L:Ar_w2k", f"wedge {k2} pair needs r+1 = {r + 1} divisible by 4")
    return FilterResult(True, fixed=fixed)


# --------------------------------------------------------------------------
# pruned search


@dataclass
class _System:
    W: np.ndarray  # rows x unknowns; depth of a weight = W . x
    partner: np.ndarray  # row of the negated weight; its depth is M - depth
    A: np.ndarray  # equality rows A . x = b
    b: np.ndarray
    lower: np.ndarray
    M: int


def _scale(vals: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(v.denominator for v in vals))
    return [int(v * den) for v in vals], den


def _build_system(spec: ModuleSpec, dim_ceiling: int) -> _System:
    ws = spec.weights(dim_ceiling)
    r = spec.rs.rank
    M = spec.dim_vc - 1
    c, cs = _coords(spec)
    lams = list(ws.entries)
    low = [ws.lowering(lam) for lam in lams]
    if spec.pairing is Pairing.SELF_DUAL_SINGLE:
        index = {lam: k for k, lam in enumerate(lams)}
        partner = np.array([index[-lam] for lam in lams], dtype=np.int64)
        W = np.array(low, dtype=np.int64)
        cc, den = _scale([2 * x for x in c])
        A = np.array([cc], dtype=np.int64)
        b = np.array([den * M], dtype=np.int64)
        return _System(W, partner, A, b, np.ones(r, dtype=np.int64), M)
    if spec.pairing is not Pairing.COMPLEX_PAIR:
        raise ConfigurationError("the principal search needs SelfDualSingle or ComplexPair")
    # extra unknown delta = m - m*; the weight -lam of U* has depth delta + (c + c* - low) . n
    top = [int(a + b) for a, b in zip(c, cs)]
    rows = [tuple(l) + (0,) for l in low]
    rows += [tuple(t - x for t, x in zip(top, l)) + (1,) for l in low]
    N = len(low)
    partner = np.concatenate([np.arange(N, 2 * N), np.arange(N)]).astype(np.int64)
    W = np.array(rows, dtype=np.int64)
    cc, den = _scale([2 * x for x in c] + [Fraction(0)])
    cd, den2 = _scale([2 * x for x in cs] + [Fraction(2)])
    A = np.array([cc, cd], dtype=np.int64)
    b = np.array([den * M, den2 * M], dtype=np.int64)
    # delta >= 1: with delta = 0 both mu and mu* would carry the eigenvalue m
    return _System(W, partner, A, b, np.ones(r + 1, dtype=np.int64), M)


def _forced_collision(W: np.ndarray, free: np.ndarray, lb: np.ndarray, hash_w: np.ndarray) -> bool:
    """Two rows with equal free coefficients and equal partial depth collide for any completion."""
    if not free.any():
        return False
    h = (W[:, free] @ hash_w[free]) * (1 << 22) + lb
    order = np.argsort(h, kind="stable")
    hs = h[order]
    dup = np.flatnonzero(hs[1:] == hs[:-1])
    for i in dup:
        a, b = order[i], order[i + 1]
        if lb[a] == lb[b] and np.array_equal(W[a, free], W[b, free]):
            return True
    return False


def _solve(sys: _System, fixed: dict[int, int]) -> Iterator[tuple[int, ...]]:
    W, A, b, M, partner = sys.W, sys.A, sys.b, sys.M, sys.partner
    R, nv = W.shape
    x = sys.lower.copy()
    assigned = np.zeros(nv, dtype=bool)
    for j, v in fixed.items():
        x[j] = v
        assigned[j] = True
    pin = np.full(R, -1, dtype=np.int64)  # rows committed to a depth by branching
    support = W > 0
    Wf = np.where(support, W, 1)
    hash_w = np.random.default_rng(0).integers(1, 1 << 20, size=nv, dtype=np.int64)

    def assign(choices):
        for j, v in choices:
            lo = int(x[j])
            assigned[j] = True
            x[j] = v
            yield from rec()
            x[j] = lo
            assigned[j] = False

    def pin_rows(rows, depth):
        for k in rows:
            pin[k] = depth
            yield from rec()
            pin[k] = -1

    def rec():
        free = ~assigned
        lb = W @ x
        if (lb > M).any():
            return
        fsup = support[:, free]
        nfree = fsup.sum(axis=1)
        known = nfree == 0
        own = np.where(known, lb, pin)
        if (known & (pin >= 0) & (pin != lb)).any():
            return
        pown = own[partner]
        both = (own >= 0) & (pown >= 0)
        if (own[both] + pown[both] != M).any():
            return
        det = np.where(own >= 0, own, np.where(pown >= 0, M - pown, -1))
        determined = det >= 0
        if (det[determined] < lb[determined]).any() or (det > M).any():
            return
        vals = det[determined]
        covered = np.zeros(M + 2, dtype=bool)
        covered[vals] = True
        if int(covered.sum()) != vals.size:
            return  # repeated depth
        if _forced_collision(W, free, lb, hash_w):
            return
        res = b - A @ x
        if (res < 0).any():
            return
        for row, rv in zip(A, res):
            g = math.gcd(*(int(a) for a in row[free])) if free.any() else 0
            if (g == 0 and rv != 0) or (g and rv % g):
                return
        if not free.any():
            if vals.size == M + 1:
                yield tuple(int(v) for v in x)
            return

        # determined rows with free unknowns behave like extra equalities
        pending = np.flatnonzero(determined & ~known)
        slack = det[pending] - lb[pending]
        for k, sl in zip(pending, slack):
            g = math.gcd(*(int(a) for a in W[k][free]))
            if sl % g:
                return
        single = pending[nfree[pending] == 1]
        if single.size:
            k = int(single[0])
            j = int(np.flatnonzero(support[k] & free)[0])
            yield from assign([(j, int(x[j]) + int(det[k] - lb[k]) // int(W[k, j]))])
            return

        free_idx = np.flatnonzero(free)
        ub = x[free_idx] + M
        for row, rv in zip(A, res):
            cols = row[free_idx]
            ub = np.where(cols > 0, np.minimum(ub, x[free_idx] + rv // np.where(cols > 0, cols, 1)), ub)
        if pending.size:
            Wp = W[pending][:, free_idx]
            lim = np.where(Wp > 0, slack[:, None] // Wf[pending][:, free_idx], M)
            ub = np.minimum(ub, x[free_idx] + lim.min(axis=0))
        if (ub < x[free_idx]).any():
            return

        open_rows = ~determined
        # Hall-type count: depths <= X still free need as many open rows with lb <= X
        need = np.cumsum(~covered[:M + 1])
        have = np.cumsum(np.bincount(lb[open_rows], minlength=M + 1)[:M + 1])
        if (need > have).any():
            return
        gap = int(np.argmin(covered[:M + 1]))
        cand = np.flatnonzero(open_rows & (lb <= gap))
        if not cand.size:
            return
        # gap rule: if every candidate uses unknown j, j cannot overshoot the gap
        cf = fsup[cand]
        every = cf.all(axis=0)
        if every.any():
            step = (gap - lb[cand])[:, None] // Wf[cand][:, free_idx]
            ub = np.where(every, np.minimum(ub, x[free_idx] + step.max(axis=0)), ub)
        width = ub - x[free_idx] + 1
        jj = int(np.argmin(width))
        # Some open row must sit exactly at the gap; branching on which one is
        # exhaustive, and distinct rows cannot share a depth.
        if cand.size <= width[jj]:
            yield from pin_rows([int(k) for k in cand], gap)
        else:
            j = int(free_idx[jj])
            yield from assign([(j, v) for v in range(int(x[j]), int(ub[jj]) + 1)])

    yield from rec()


def _accept(verdict: Verdict, require_structure: bool) -> bool:
    if require_structure:
        return verdict.principal
    return set(verdict.reasons) <= {Reason.QUATERNIONIC_SELF_DUAL}


def principal_gradings(spec: ModuleSpec, options: SearchOptions = SearchOptions(),
                       fixed: Iterable[tuple[int, int]] = ()) -> list[Solution]:
    """Principal gradings of one module with mu(T) = m, verified leaf by leaf."""
    sys = _build_system(spec, options.dim_ceiling)
    out = []
    for x in _solve(sys, dict(fixed)):
        g = GradingElement(x[:spec.rs.rank])
        v = is_principal(spec, g, options.dim_ceiling)
        if _accept(v, options.require_structure):
            out.append(Solution(spec.rs.lie_type, spec.mu.dynkin, g.n, spec.pairing, v.structure))
    return sorted(set(out))


# --------------------------------------------------------------------------
# diagram automorphisms and the catalog-level search


def diagram_automorphisms(rs: RootSystem) -> list[tuple[int, ...]]:
    """Non-trivial Dynkin diagram automorphisms used for deduplication (0-based permutations)."""
    t = rs.lie_type
    r = t.rank
    if t.family == "A" and r > 1:
        return [tuple(reversed(range(r)))]
    if t.family == "D":
        p = list(range(r))
        p[r - 2], p[r - 1] = r - 1, r - 2
        return [tuple(p)]
    if t.family == "E" and r == 6:
        return [rs.duality]
    return []


def _dedupe(rs: RootSystem, sols: list[Solution]) -> list[Solution]:
    autos = diagram_automorphisms(rs)
    keep = []
    seen = set()
    for s in sorted(sols):
        images = {(s.dynkin, s.n)}
        for p in autos:
            images.add((tuple(s.dynkin[i] for i in p), tuple(s.n[i] for i in p)))
        if images & seen:
            continue
        seen |= images
        keep.append(s)
    return keep


@functools.lru_cache(maxsize=1024)
def _search_one(t: LieType, dynkin: tuple[int, ...], options: SearchOptions):
    rs = build_root_system(t, rank_ceiling=t.rank)
    mu = rs.weight(dynkin)
    spec = ModuleSpec.natural(rs, mu)
    fixed = _liv_fixed(spec) if options.use_filters else ()
    if options.use_filters and t.family == "A":
        f = type_a_filters(t, mu, spec.pairing)
        if not f:
            return "filtered", f
        fixed = f.fixed
    if spec.dim_vc > options.dim_ceiling:
        return "skipped", f"dim V_C = {spec.dim_vc} exceeds the dimension ceiling {options.dim_ceiling}"
    return "ok", tuple(principal_gradings(spec, options, fixed))


def search_principal(t: LieType | str, selection=None,
                     options: SearchOptions = SearchOptions(),
                     rank_ceiling: int | None = None) -> SearchResult:
    """Principal gradings for the weight multiplicity-free modules of one type.

    ``selection`` is None (whole catalog), a :class:`Weight`, a dynkin tuple, or
    an iterable of those.  Complex modules report the orientation in which the
    selected highest weight carries the top eigenvalue.
    """
    rs = build_root_system(t, **({"rank_ceiling": rank_ceiling} if rank_ceiling else {}))
    t = rs.lie_type
    if selection is None:
        items: list = list(mf_catalog(t, options.sym_degree_ceiling))
    elif isinstance(selection, (Weight, MFCatalogEntry)) or (
            isinstance(selection, tuple) and all(isinstance(v, int) for v in selection)):
        items = [selection]
    else:
        items = list(selection)
    jobs = []
    for it in items:
        dyn = it.dynkin if isinstance(it, (Weight, MFCatalogEntry)) else tuple(int(v) for v in it)
        mu = rs.weight(dyn)
        if not mu.is_dominant:
            raise ConfigurationError(f"highest weight {mu} is not dominant")
        jobs.append((it, dyn))
    if options.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=options.threads) as ex:
            outs = list(ex.map(_search_one, [t] * len(jobs), [d for _, d in jobs],
                               [options] * len(jobs)))
    else:
        outs = [_search_one(t, d, options) for _, d in jobs]
    result = SearchResult()
    for (it, _), (status, payload) in zip(jobs, outs):
        if status == "skipped":
            result.skipped.append((it, payload))
        elif status == "filtered":
            result.filtered.append((it, payload))
        else:
            result.solutions.extend(payload)
    result.solutions = sorted(set(result.solutions))
    if options.dedupe:
        result.solutions = _dedupe(rs, result.solutions)
    return result


# --------------------------------------------------------------------------
# naive oracle


def naive_search(spec: ModuleSpec, dim_ceiling: int = DEFAULT_DIM_CEILING,
                 require_structure: bool = True) -> list[tuple[int, ...]]:
    """Unpruned box search over 1 <= n_i <= 2m with mu(T) = m.

    Shares no code with the pruned search or with :mod:`hodge`: eigenvalues are
    computed as integer matrix products of scaled root coordinates.
    """
    ws = spec.weights(dim_ceiling)
    r = spec.rs.rank
    M = spec.dim_vc - 1
    lams = list(ws.entries)
    coords = [l.root_coords for l in lams]
    if spec.pairing is Pairing.COMPLEX_PAIR:
        coords += [tuple(-v for v in co) for co in coords]
    den = math.lcm(*(v.denominator for co in coords for v in co))
    E = np.array([[int(2 * v * den) for v in co] for co in coords], dtype=np.int64)  # 2*den*coords
    top = np.array([int(2 * v * den) for v in spec.mu.root_coords], dtype=np.int64)
    target = np.arange(M, -M - 1, -2, dtype=np.int64) * den
    shared = spec.pairing is Pairing.COMPLEX_PAIR and any(
        tuple(-v for v in l.dynkin) in {k.dynkin for k in lams} for l in lams)
    found = []
    box = np.arange(1, M + 1, dtype=np.int64)

    def blocks():
        # every n_1..n_{r-1} in the box; n_r is solved from mu(T) = m
        if r == 1:
            yield np.zeros((1, 0), dtype=np.int64)
            return
        head = max(r - 3, 0)
        inner = np.array(np.meshgrid(*[box] * (r - 1 - head), indexing="ij")).reshape(r - 1 - head, -1).T
        for h in itertools.product(box.tolist(), repeat=head):
            yield np.hstack([np.tile(np.array(h, dtype=np.int64), (len(inner), 1)), inner])

    for block in blocks():
        rest = M * den - block @ top[:-1]
        ok = (rest % top[-1] == 0)
        last = rest // top[-1]
        ok &= (last >= 1) & (last <= M)
        cand = np.hstack([block[ok], last[ok][:, None]])
        if not len(cand):
            continue
        evs = np.sort(cand @ E.T, axis=1)[:, ::-1]
        for n in cand[(evs == target).all(axis=1)]:
            if require_structure:
                if spec.pairing is Pairing.COMPLEX_PAIR and shared:
                    continue
                if spec.pairing is Pairing.SELF_DUAL_SINGLE:
                    tc = int(sum(top[i] for i in range(r) if n[i] % 2 == 0))  # den * mu(T^cpt)
                    if tc % den or (tc // den) % 2:
                        continue
            found.append(tuple(int(v) for v in n))
    return sorted(found)
