"""Embedded classification tables and the verifier that recomputes them.

Each table names a problem (a family of modules), the expected set of
solutions written out independently of the search, and a function that
recomputes the found set.  Entries are ``(type, dynkin, n, tag)``; ``tag`` is
empty for ordinary principal solutions and carries extra data (structure
labels, Hodge numbers) where a table asserts more than principality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .classify import SearchOptions, search_principal
from .hodge import ModuleSpec, Pairing, eigen_report, grading, is_principal
from .rootsys import DEFAULT_RANK_CEILING, ConfigurationError, LieType, ResourceError, build_root_system
from .weightsys import (DEFAULT_SYM_DEGREE_CEILING, is_weight_multiplicity_free, mf_catalog,
                        weight_system, weyl_dim)

__all__ = ["GoldenTable", "TableReport", "VerifyReport", "golden_tables", "table_ids",
           "verify_paper", "unit", "Entry"]

Entry = tuple[str, tuple[int, ...], tuple[int, ...], str]


def unit(r: int, k: int, a: int = 1) -> tuple[int, ...]:
    """``a`` times the k-th fundamental weight (1-based) in dynkin coordinates."""
    return tuple(a if i == k - 1 else 0 for i in range(r))


@dataclass(frozen=True)
class GoldenTable:
    id: str
    title: str
    expected: Callable[["_Ctx"], set[Entry]]
    compute: Callable[["_Ctx"], set[Entry]]
    paper_typo: str | None = None


@dataclass(frozen=True)
class _Ctx:
    rank_ceiling: int
    options: SearchOptions


@dataclass
class TableReport:
    id: str
    title: str
    status: str
    found: list[Entry]
    expected: list[Entry]
    missing: list[Entry]
    extra: list[Entry]
    paper_typo: str | None = None

    def to_json(self) -> dict:
        def enc(es):
            return [{"type": t, "mu": list(mu), "n": list(n), **({"tag": tag} if tag else {})}
                    for t, mu, n, tag in es]
        out = {"id": self.id, "title": self.title, "status": self.status,
               "found": enc(self.found), "expected": enc(self.expected),
               "missing": enc(self.missing), "extra": enc(self.extra)}
        if self.paper_typo:
            out["paper_typo"] = self.paper_typo
        return out


@dataclass
class VerifyReport:
    tables: list[TableReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(t.status == "PASS" for t in self.tables)

    @property
    def passed(self) -> int:
        return sum(t.status == "PASS" for t in self.tables)

    def to_json(self) -> dict:
        return {"passed": self.passed, "total": len(self.tables),
                "tables": [t.to_json() for t in self.tables]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        def fmt(e: Entry) -> str:
            t, mu, n, tag = e
            s = f"{t} mu=({','.join(map(str, mu))})"
            if n:
                s += f" n=({','.join(map(str, n))})"
            return s + (f" [{tag}]" if tag else "")

        lines = []
        for t in self.tables:
            head = f"{t.status} {t.id}: {t.title} ({len(t.found)} found)"
            if t.paper_typo:
                head += f" [paper_typo: {t.paper_typo}]"
            lines.append(head)
            for e in t.missing:
                lines.append(f"  missing {fmt(e)}")
            for e in t.extra:
                lines.append(f"  extra   {fmt(e)}")
        lines.append(f"{self.passed}/{len(self.tables)} tables PASS")
        return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# helpers


def _search(t: str, sel, ctx: _Ctx, **overrides) -> set[Entry]:
    opts = ctx.options
    if overrides:
        opts = SearchOptions(**{**opts.__dict__, **overrides})
    res = search_principal(t, sel, opts, rank_ceiling=max(ctx.rank_ceiling, DEFAULT_RANK_CEILING))
    if res.skipped:
        raise ResourceError(
            f"{t}: entries skipped by the dimension ceiling: {[str(x) for x, _ in res.skipped]}")
    return {(str(s.lie_type), s.dynkin, s.n, "") for s in res.solutions}


def _ranks(lo: int, ctx: _Ctx, parity: int | None = None) -> range | list[int]:
    rs = range(lo, ctx.rank_ceiling + 1)
    return [r for r in rs if parity is None or r % 2 == parity]


def _powers(top: int, tail: tuple[int, ...]) -> tuple[int, ...]:
    """(2^top, 2^(top-1), ..., 2) followed by ``tail``."""
    return tuple(2 ** k for k in range(top, 0, -1)) + tail


def _hodge_tag(spec: ModuleSpec, n: tuple[int, ...], ctx: _Ctx) -> str:
    h = eigen_report(spec, grading(n), ctx.options.dim_ceiling).hodge_numbers
    return "h=(2,...,2)" if set(h) == {2} else "h=(" + ",".join(map(str, h)) + ")"


def _pattern_with_hodge(t: str, mu: tuple[int, ...], ctx: _Ctx) -> set[Entry]:
    """Gradings with the principal eigenvalue pattern on U, tagged by structure and the
    Hodge numbers of the quaternionic pair U + U."""
    rs = build_root_system(t, rank_ceiling=max(ctx.rank_ceiling, DEFAULT_RANK_CEILING))
    single = ModuleSpec(rs, rs.weight(mu), Pairing.SELF_DUAL_SINGLE)
    pair = ModuleSpec(rs, rs.weight(mu), Pairing.QUATERNIONIC_PAIR)
    out = set()
    for e in _search(t, mu, ctx, require_structure=False):
        v = is_principal(single, grading(e[2]), ctx.options.dim_ceiling)
        out.add((e[0], e[1], e[2], f"{v.structure.value}; {_hodge_tag(pair, e[2], ctx)}"))
    return out


# --------------------------------------------------------------------------
# the catalog table: brute-force multiplicity-freeness over small weights

_MF_SCAN = [("A", r) for r in range(1, 5)] + [("B", r) for r in range(2, 5)] + \
           [("C", r) for r in range(2, 5)] + [("D", r) for r in range(4, 6)] + \
           [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]
_MF_LABEL_SUM = 3
_MF_DIM = 5000


def _small_dominant(r: int, total: int):
    def rec(prefix, left):
        if len(prefix) == r:
            yield tuple(prefix)
            return
        for a in range(left + 1):
            yield from rec(prefix + [a], left - a)
    for mu in rec([], total):
        if any(mu):
            yield mu


def _mf_expected(ctx: _Ctx) -> set[Entry]:
    out = set()
    for fam, r in _MF_SCAN:
        t = LieType(fam, r)
        rs = build_root_system(t)
        for e in mf_catalog(t, _MF_LABEL_SUM):
            if sum(e.dynkin) <= _MF_LABEL_SUM and weyl_dim(rs, e.highest_weight) <= _MF_DIM:
                out.add((str(t), e.dynkin, (), ""))
    return out


def _mf_found(ctx: _Ctx) -> set[Entry]:
    out = set()
    for fam, r in _MF_SCAN:
        t = LieType(fam, r)
        rs = build_root_system(t)
        for mu in _small_dominant(r, _MF_LABEL_SUM):
            w = rs.weight(mu)
            if weyl_dim(rs, w) <= _MF_DIM and is_weight_multiplicity_free(weight_system(rs, w)):
                out.add((str(t), mu, (), ""))
    return out


# --------------------------------------------------------------------------
# table definitions


def _tables() -> list[GoldenTable]:
    T = GoldenTable
    tabs = [
        T("T:mf", "multiplicity-free catalog equals brute-force scan of small dominant weights",
          _mf_expected, _mf_found),
        T("C:E8F4", "E8 and F4 have empty catalogs and no principal gradings",
          lambda c: set(),
          lambda c: {("catalog", e.dynkin, (), str(e.lie_type))
                     for t in (LieType("E", 8), LieType("F", 4)) for e in mf_catalog(t)}
          | _search("E8", None, c) | _search("F4", None, c)),
        T("T:C(a)", "symplectic standard module: n = (1,...,1) for every rank",
          lambda c: {(f"C{r}", unit(r, 1), (1,) * r, "") for r in _ranks(2, c)},
          lambda c: set().union(*(_search(f"C{r}", unit(r, 1), c) for r in _ranks(2, c)))),
        T("T:C(b)", "C2 with highest weight w2: n = (1,1)",
          lambda c: {("C2", (0, 1), (1, 1), "")},
          lambda c: _search("C2", (0, 1), c)),
        T("T:C(c)", "C3 with highest weight w3: n = (3,1,1)",
          lambda c: {("C3", (0, 0, 1), (3, 1, 1), "")},
          lambda c: _search("C3", (0, 0, 1), c),
          paper_typo="printed as 3T^1 + T^2 + T^1; the last term is T^3"),
        T("T:B(a)", "odd orthogonal standard module: n = (1,...,1) for every rank",
          lambda c: {(f"B{r}", unit(r, 1), (1,) * r, "") for r in _ranks(2, c)},
          lambda c: set().union(*(_search(f"B{r}", unit(r, 1), c) for r in _ranks(2, c)))),
        T("T:B(b)", "B spin: n = (2^(r-2),...,2,1,1) exactly when (r-2)(r-1) is divisible by 4",
          lambda c: {(f"B{r}", unit(r, r), _powers(r - 2, (1, 1)), "")
                     for r in _ranks(2, c) if (r - 2) * (r - 1) % 4 == 0},
          lambda c: set().union(*(_search(f"B{r}", unit(r, r), c) for r in _ranks(2, c)))),
        T("T:B(examples)", "B spin, ranks 2-5: principal eigenvalue pattern and its structure",
          lambda c: {("B2", (0, 1), (1, 1), "Real"), ("B3", (0, 0, 1), (2, 1, 1), "Quaternionic"),
                     ("B4", (0, 0, 0, 1), (4, 2, 1, 1), "Quaternionic"),
                     ("B5", (0, 0, 0, 0, 1), (8, 4, 2, 1, 1), "Real")},
          lambda c: {e[:3] + (e[3].split(";")[0],)
                     for r in range(2, 6) for e in _pattern_with_hodge(f"B{r}", unit(r, r), c)}),
        T("T:D(std)", "even orthogonal standard module: no principal grading",
          lambda c: set(),
          lambda c: set().union(*(_search(f"D{r}", unit(r, 1), c) for r in _ranks(4, c)))),
        T("E:Dstd", "even orthogonal standard module: the two quaternionic gradings with h=(2,...,2)",
          lambda c: {(f"D{r}", unit(r, 1), (1,) * (r - 2) + tail, "Quaternionic; h=(2,...,2)")
                     for r in _ranks(4, c) for tail in ((1, 2), (2, 1))},
          lambda c: set().union(*(_pattern_with_hodge(f"D{r}", unit(r, 1), c) for r in _ranks(4, c)))),
        T("T:D(a)", "D spin, even rank: n = (2^(r-3),...,2,1,1,1) exactly when (r-3)(r-2) is divisible by 4",
          lambda c: {(f"D{r}", unit(r, k), _powers(r - 3, (1, 1, 1)), "")
                     for r in _ranks(4, c, 0) if (r - 3) * (r - 2) % 4 == 0 for k in (r - 1, r)},
          lambda c: set().union(*(_search(f"D{r}", [unit(r, r - 1), unit(r, r)], c)
                                  for r in _ranks(4, c, 0)))),
        T("T:D(b)", "D spin, odd rank: n = (2^(r-2),...,2,1,3) and (2^(r-2),...,2,3,1)",
          lambda c: {(f"D{r}", unit(r, r), _powers(r - 2, (1, 3)), "") for r in _ranks(5, c, 1)}
          | {(f"D{r}", unit(r, r - 1), _powers(r - 2, (3, 1)), "") for r in _ranks(5, c, 1)},
          lambda c: set().union(*(_search(f"D{r}", [unit(r, r - 1), unit(r, r)], c)
                                  for r in _ranks(5, c, 1)))),
        T("T:E", "E6 and E7: no principal grading",
          lambda c: set(),
          lambda c: _search("E6", None, c) | _search("E7", None, c)),
        T("T:G2", "G2 on C^7: n = (1,1)",
          lambda c: {("G2", (1, 0), (1, 1), "")},
          lambda c: _search("G2", None, c)),
        T("P:rank1", "sl2 on Sym^p for every p up to the degree ceiling: n = (1)",
          lambda c: {("A1", (p,), (1,), "") for p in range(1, c.options.sym_degree_ceiling + 1)},
          lambda c: _search("A1", None, c)),
        T("P:rank3", "sl4, whole catalog: n = (3,2,1) on C^4 + dual and (1,2,3) on the dual orientation",
          lambda c: {("A3", (1, 0, 0), (3, 2, 1), ""), ("A3", (0, 0, 1), (1, 2, 3), "")},
          lambda c: _search("A3", None, c),
          paper_typo="printed as 3T^1 + 2T^2 + T^1; the last term is T^3"),
        T("E:ext5", "wedge^2 C^4: both gradings with the principal pattern are quaternionic, "
          "and U + U has h=(2,...,2)",
          lambda c: {("A3", (0, 1, 0), (1, 1, 2), "Quaternionic; h=(2,...,2)"),
                     ("A3", (0, 1, 0), (2, 1, 1), "Quaternionic; h=(2,...,2)")},
          lambda c: _pattern_with_hodge("A3", (0, 1, 0), c)),
        T("P:rank5", "sl6, whole catalog: two gradings on C^6 + dual, two on wedge^3 C^6",
          lambda c: {("A5", unit(5, 1), (2, 4, 1, 1, 2), ""), ("A5", unit(5, 5), (2, 1, 1, 4, 2), ""),
                     ("A5", unit(5, 3), (3, 2, 1, 1, 7), ""), ("A5", unit(5, 3), (7, 1, 1, 2, 3), "")},
          lambda c: _search("A5", None, c)),
    ]
    rank7 = [(1, 5, 1, 3, 1, 1, 1), (2, 3, 2, 2, 2, 1, 2), (3, 1, 3, 2, 1, 3, 1), (3, 2, 1, 2, 3, 2, 1)]
    rank9 = [(1, 2, 6, 2, 1, 1, 1, 1, 2), (1, 3, 4, 2, 2, 1, 1, 2, 1), (1, 4, 2, 3, 1, 2, 2, 1, 1),
             (2, 1, 5, 2, 2, 1, 1, 1, 3), (2, 2, 3, 3, 1, 2, 1, 2, 2), (2, 3, 1, 4, 1, 1, 3, 1, 2),
             (2, 4, 1, 1, 1, 5, 1, 1, 2), (3, 1, 2, 4, 1, 1, 2, 3, 1), (3, 2, 2, 1, 1, 4, 2, 2, 1),
             (4, 1, 1, 2, 1, 3, 4, 1, 1)]
    for r, tuples in ((7, rank7), (9, rank9)):
        t = f"A{r}"
        note = f"tuples printed with an index running to {r + 1}; read as length-{r} vectors"
        tabs.append(T(f"S:Aeg-rank{r}", f"sl{r + 1} on C^{r + 1} + dual, mu = w1",
                      lambda c, t=t, r=r, ts=tuples: {(t, unit(r, 1), n, "") for n in ts},
                      lambda c, t=t, r=r: _search(t, unit(r, 1), c), paper_typo=note))
        tabs.append(T(f"S:Aeg-rank{r}-dual", f"sl{r + 1} on C^{r + 1} + dual, mu = w{r}: reversed tuples",
                      lambda c, t=t, r=r, ts=tuples: {(t, unit(r, r), n[::-1], "") for n in ts},
                      lambda c, t=t, r=r: _search(t, unit(r, r), c), paper_typo=note))
    return tabs


def golden_tables() -> list[GoldenTable]:
    return _tables()


def table_ids() -> list[str]:
    return [t.id for t in _tables()]


def _matches(tid: str, scope: str) -> bool:
    return tid == scope or tid.startswith(scope + "(") or tid.startswith(scope + "-")


def select_tables(scope: str | Iterable[str] = "all") -> list[GoldenTable]:
    scopes = [scope] if isinstance(scope, str) else list(scope)
    tabs = _tables()
    if "all" in scopes:
        return tabs
    out = []
    for s in scopes:
        hit = [t for t in tabs if _matches(t.id, s)]
        if not hit:
            raise ConfigurationError(f"unknown table id {s!r}; known: {', '.join(t.id for t in tabs)}")
        out.extend(t for t in hit if t not in out)
    return out


def verify_paper(scope: str | Iterable[str] = "all", options: SearchOptions = SearchOptions(),
                 rank_ceiling: int = DEFAULT_RANK_CEILING) -> VerifyReport:
    """Recompute every selected table and diff it against its expected set."""
    if options.sym_degree_ceiling > DEFAULT_SYM_DEGREE_CEILING * 4:
        raise ConfigurationError("degree ceiling too large for verification")
    ctx = _Ctx(rank_ceiling, options)
    report = VerifyReport()
    for tab in select_tables(scope):
        expected = tab.expected(ctx)
        found = tab.compute(ctx)
        missing, extra = sorted(expected - found), sorted(found - expected)
        report.tables.append(TableReport(
            tab.id, tab.title, "PASS" if not missing and not extra else "FAIL",
            sorted(found), sorted(expected), missing, extra, tab.paper_typo))
    return report
