from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from principal_hodge import (ConfigurationError, ResourceError, LieType, build_root_system, dual_weight,
                             fundamental_weight, parse_lie_type)
from principal_hodge.rootsys import POSITIVE_ROOT_COUNT

F = Fraction


def all_types(max_rank=12):
    for fam in "ABCD":
        lo = {"A": 1, "B": 2, "C": 2, "D": 3}[fam]
        for r in range(lo, max_rank + 1):
            yield LieType(fam, r)
    yield from (LieType("E", 6), LieType("E", 7), LieType("E", 8), LieType("F", 4), LieType("G", 2))


TYPES = list(all_types())


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_cartan_inverse_is_exact(t):
    rs = build_root_system(t)
    r = t.rank
    for i in range(r):
        for j in range(r):
            v = sum(rs.cartan[i][k] * rs.cartan_inv[k][j] for k in range(r))
            assert v == (1 if i == j else 0)
        assert rs.cartan[i][i] == 2
        assert all(rs.cartan[i][j] in (0, -1, -2, -3) for j in range(r) if j != i)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_positive_root_count_and_rho(t):
    rs = build_root_system(t)
    assert len(rs.positive_roots) == POSITIVE_ROOT_COUNT[t.family](t.rank)
    total = [sum(a[i] for a in rs.positive_roots) for i in range(t.rank)]
    assert [F(x) for x in total] == [2 * x for x in rs.weyl_vector_rho]


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_duality_is_an_involution(t):
    rs = build_root_system(t)
    d = rs.duality
    assert all(d[d[i]] == i for i in range(t.rank))
    identity = t.family in "BCFG" or t == LieType("A", 1) or (t.family == "E" and t.rank in (7, 8)) or (
        t.family == "D" and t.rank % 2 == 0)
    assert (d == tuple(range(t.rank))) == identity


def test_known_root_counts():
    assert len(build_root_system("A3").positive_roots) == 6
    assert len(build_root_system("E7").positive_roots) == 63
    assert len(build_root_system("G2").positive_roots) == 6
    assert len(build_root_system("B5").positive_roots) == 25
    assert len(build_root_system("C4").positive_roots) == 16


def test_fundamental_weight_anchors():
    c3 = build_root_system("C3")
    assert fundamental_weight(c3, 3).root_coords == (1, 2, F(3, 2))
    e6 = build_root_system("E6")
    assert fundamental_weight(e6, 1).root_coords == (F(4, 3), 1, F(5, 3), 2, F(4, 3), F(2, 3))
    for r in range(1, 8):
        a = build_root_system(LieType("A", r))
        assert fundamental_weight(a, 1).root_coords == tuple(F(r + 1 - i, r + 1) for i in range(1, r + 1))
    b5 = build_root_system("B5")
    assert fundamental_weight(b5, 5).root_coords == tuple(F(i, 2) for i in range(1, 6))


def test_duality_examples():
    a3 = build_root_system("A3")
    assert a3.duality == (2, 1, 0)
    a5 = build_root_system("A5")
    assert dual_weight(a5, fundamental_weight(a5, 2)) == fundamental_weight(a5, 4)
    d5 = build_root_system("D5")
    assert d5.duality == (0, 1, 2, 4, 3)
    e7 = build_root_system("E7")
    assert dual_weight(e7, fundamental_weight(e7, 7)) == fundamental_weight(e7, 7)


@pytest.mark.parametrize("bad", [("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("X", 2)])
def test_invalid_types_are_rejected(bad):
    with pytest.raises(ConfigurationError):
        LieType(*bad)


def test_rank_ceiling_and_index_errors():
    with pytest.raises(ResourceError):
        build_root_system("A13")
    assert build_root_system("A13", rank_ceiling=13).rank == 13
    with pytest.raises(ConfigurationError):
        fundamental_weight(build_root_system("A2"), 3)
    assert parse_lie_type("b", "3") == LieType("B", 3) == parse_lie_type("B3")


@given(st.sampled_from(TYPES), st.data())
def test_weight_bases_are_consistent(t, data):
    rs = build_root_system(t)
    dyn = data.draw(st.lists(st.integers(-4, 4), min_size=t.rank, max_size=t.rank))
    w = rs.weight(dyn)
    # dynkin = cartan^T-free check: labels of sum c_j a_j are sum_j c_j cartan[i][j]
    back = tuple(sum(rs.cartan[i][j] * w.root_coords[j] for j in range(t.rank)) for i in range(t.rank))
    assert back == w.dynkin
    assert dual_weight(rs, dual_weight(rs, w)) == w
    if t.family in "BCG":
        assert dual_weight(rs, w) == w
    if t.family == "A":
        assert dual_weight(rs, w).dynkin == tuple(reversed(w.dynkin))
