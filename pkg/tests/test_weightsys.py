import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from oracles import d_spin_brute_force, lowering_closure, type_a_multiplicities
from principal_hodge import (ConfigurationError, LieType, ResourceError, build_root_system, dual_weight,
                             fundamental_weight, is_weight_multiplicity_free, mf_catalog,
                             spin_weight_oracle, weight_system, weyl_dim)
from principal_hodge.weightsys import lowering_to_weight


def ws_of(t, dyn):
    rs = build_root_system(t)
    return rs, weight_system(rs, rs.weight(dyn))


def test_weyl_dim_examples():
    c3 = build_root_system("C3")
    assert weyl_dim(c3, fundamental_weight(c3, 3)) == 14
    for r in range(2, 9):
        b = build_root_system(LieType("B", r))
        assert weyl_dim(b, fundamental_weight(b, r)) == 2 ** r
    e7 = build_root_system("E7")
    assert weyl_dim(e7, fundamental_weight(e7, 7)) == 56
    assert weyl_dim(e7, e7.weight((0,) * 7)) == 1
    with pytest.raises(ConfigurationError):
        weyl_dim(c3, c3.weight((-1, 0, 0)))


def test_wedge2_c4_lowering_list():
    rs, ws = ws_of("A3", (0, 1, 0))
    assert {ws.lowering(w) for w in ws} == {(0, 0, 0), (0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1), (1, 2, 1)}
    assert is_weight_multiplicity_free(ws)


def test_c3_w3_lowering_list():
    rs, ws = ws_of("C3", (0, 0, 1))
    expected = {(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 2, 1), (0, 2, 2), (1, 1, 1), (1, 2, 1),
                (1, 2, 2), (1, 3, 2), (2, 2, 1), (2, 2, 2), (2, 3, 2), (2, 4, 2), (2, 4, 3)}
    assert {ws.lowering(w) for w in ws} == expected


def test_g2_standard_lowering_list():
    rs, ws = ws_of("G2", (1, 0))
    assert {ws.lowering(w) for w in ws} == {(0, 0), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (4, 2)}


def test_adjoint_a2_is_not_multiplicity_free():
    rs, ws = ws_of("A2", (1, 1))
    assert ws.entries[rs.weight((0, 0))] == 2
    assert not is_weight_multiplicity_free(ws)
    # independent check: SSYT count and the support from root strings
    assert type_a_multiplicities((1, 1))[(0, 0)] == 2
    assert {w.dynkin for w in ws} == lowering_closure(rs.cartan, (1, 1))


def test_trivial_and_spin_are_multiplicity_free():
    rs, ws = ws_of("B4", (0, 0, 0, 1))
    assert is_weight_multiplicity_free(ws)
    rs, ws = ws_of("E6", (0,) * 6)
    assert is_weight_multiplicity_free(ws) and ws.dim == 1


def test_dimension_ceiling():
    e8 = build_root_system("E8")
    with pytest.raises(ResourceError, match="ceiling"):
        weight_system(e8, fundamental_weight(e8, 1), dim_ceiling=1000)


@pytest.mark.parametrize("dyn", [(1, 0), (2, 0), (1, 1), (3, 0), (2, 1), (1, 0, 0), (0, 1, 0), (1, 1, 0),
                                 (2, 0, 1), (1, 0, 1), (0, 2, 0), (1, 0, 0, 1), (0, 1, 1, 0), (2, 0, 0, 0)])
def test_type_a_multiplicities_match_tableaux(dyn):
    rs, ws = ws_of(LieType("A", len(dyn)), dyn)
    assert {w.dynkin: m for w, m in ws.entries.items()} == type_a_multiplicities(dyn)


@st.composite
def small_module(draw):
    fam, r = draw(st.sampled_from([("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3),
                                   ("D", 4), ("G", 2)]))
    dyn = tuple(draw(st.lists(st.integers(0, 2), min_size=r, max_size=r)))
    t = LieType(fam, r)
    rs = build_root_system(t)
    assume(weyl_dim(rs, rs.weight(dyn)) <= 2000)
    return t, dyn


@given(small_module())
def test_weight_system_invariants(mod):
    t, dyn = mod
    rs, ws = ws_of(t, dyn)
    mu = rs.weight(dyn)
    assert ws.entries[mu] == 1
    assert ws.dim == weyl_dim(rs, mu)
    for i in range(t.rank):
        assert sum(m * w.root_coords[i] for w, m in ws.entries.items()) == 0
    for w in ws:
        low = ws.lowering(w)
        assert all(isinstance(x, int) and x >= 0 for x in low)
        assert lowering_to_weight(rs, mu, low) == w
    assert {w.dynkin for w in ws} == lowering_closure(rs.cartan, dyn)


@given(small_module())
def test_negation_symmetry(mod):
    t, dyn = mod
    rs, ws = ws_of(t, dyn)
    neg = {(-w).dynkin for w in ws}
    dual = weight_system(rs, dual_weight(rs, rs.weight(dyn)))
    assert neg == {w.dynkin for w in dual}


def test_catalog_contents():
    assert mf_catalog(LieType("F", 4)) == [] and mf_catalog(LieType("E", 8)) == []
    assert [e.dynkin for e in mf_catalog(LieType("C", 4))] == [(1, 0, 0, 0)]
    assert [e.dynkin for e in mf_catalog(LieType("C", 3))] == [(1, 0, 0), (0, 0, 1)]
    assert {e.dynkin for e in mf_catalog(LieType("D", 6))} == {
        (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)}
    assert {e.dynkin for e in mf_catalog(LieType("E", 6))} == {(1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)}
    assert [e.dynkin for e in mf_catalog(LieType("E", 7))] == [(0,) * 6 + (1,)]
    assert [e.dynkin for e in mf_catalog(LieType("G", 2))] == [(1, 0)]
    a1 = mf_catalog(LieType("A", 1), sym_degree_ceiling=10)
    assert [e.dynkin for e in a1] == [(p,) for p in range(1, 11)]
    a3 = mf_catalog(LieType("A", 3), sym_degree_ceiling=5)
    assert len(a3) == 3 + 2 * 4


@pytest.mark.parametrize("t", [LieType(f, r) for f, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4))
                               for r in range(lo, 7)] + [LieType("E", 6), LieType("E", 7), LieType("G", 2)],
                         ids=str)
def test_catalog_entries_are_multiplicity_free(t):
    rs = build_root_system(t)
    for e in mf_catalog(t, sym_degree_ceiling=6):
        ws = weight_system(rs, e.highest_weight)
        assert is_weight_multiplicity_free(ws)
        assert e.self_dual == (dual_weight(rs, e.highest_weight) == e.highest_weight)


def test_spin_oracle_examples():
    assert spin_weight_oracle(LieType("B", 2)) == [(0, 0), (0, 1), (1, 1), (1, 2)]
    assert spin_weight_oracle(LieType("B", 3)) == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2),
                                                   (1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]
    d5 = spin_weight_oracle(LieType("D", 5), "D_last")
    assert len(d5) == 16 and (0, 0, 0, 0, 0) in d5 and (0, 0, 0, 0, 1) in d5
    with pytest.raises(ConfigurationError):
        spin_weight_oracle(LieType("C", 3))


@pytest.mark.parametrize("r", range(4, 8))
@pytest.mark.parametrize("last", [True, False])
def test_d_spin_oracle_matches_brute_force(r, last):
    t = LieType("D", r)
    assert spin_weight_oracle(t, "D_last" if last else "D_second_last") == d_spin_brute_force(r, last)


@pytest.mark.parametrize("r", range(2, 8))
def test_b_spin_oracle_matches_weight_system(r):
    rs, ws = ws_of(LieType("B", r), (0,) * (r - 1) + (1,))
    assert sorted(ws.lowering(w) for w in ws) == spin_weight_oracle(LieType("B", r))
