from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from principal_hodge import (ConfigurationError, GradingElement, HalfInt, LieType, ModuleSpec, Pairing,
                             Structure, build_root_system, eigen_report, eigenvalue, is_principal,
                             rcq_structure, t_compact, weight_system)
from principal_hodge.hodge import Reason, grading


def spec(t, dyn, pairing=None):
    rs = build_root_system(t)
    mu = rs.weight(dyn)
    return ModuleSpec(rs, mu, pairing) if pairing else ModuleSpec.natural(rs, mu)


def test_halfint_arithmetic_and_rendering():
    a, b = HalfInt(13), HalfInt.of(Fraction(-3, 2))
    assert str(a) == "13/2" and str(HalfInt(4)) == "2" and str(b) == "-3/2"
    assert a + b == HalfInt(10) and a - b == HalfInt(16) and -a == HalfInt(-13)
    assert b < a and HalfInt(4).is_integer and not a.is_integer
    assert a.to_fraction() == Fraction(13, 2)
    with pytest.raises(ArithmeticError):
        HalfInt.of(Fraction(1, 3))


def test_grading_element_validation():
    assert str(GradingElement((1, 2))) == "(1,2)"
    with pytest.raises(ConfigurationError):
        GradingElement((1, -1))


def test_module_spec_pairing_validation():
    with pytest.raises(ConfigurationError):
        spec("A2", (1, 0), Pairing.SELF_DUAL_SINGLE)
    with pytest.raises(ConfigurationError):
        spec("B3", (0, 0, 1), Pairing.COMPLEX_PAIR)
    assert spec("A2", (1, 0)).pairing is Pairing.COMPLEX_PAIR
    assert spec("A3", (0, 1, 0)).dim_vc == 6
    assert spec("A3", (1, 0, 0)).dim_vc == 8 and spec("A3", (1, 0, 0)).target_m == HalfInt(7)
    assert spec("A3", (0, 1, 0), Pairing.QUATERNIONIC_PAIR).dim_vc == 12


def test_eigenvalue_examples():
    s = spec("C3", (0, 0, 1))
    assert eigenvalue(s.rs, s.mu, grading((3, 1, 1))) == HalfInt(13)
    s = spec("B5", (0, 0, 0, 0, 1))
    assert eigenvalue(s.rs, s.mu, grading((8, 4, 2, 1, 1))) == HalfInt(31)
    assert eigenvalue(s.rs, s.rs.weight((0,) * 5), grading((5, 4, 3, 2, 1))) == HalfInt(0)
    with pytest.raises(ConfigurationError):
        eigenvalue(s.rs, s.mu, grading((1, 1)))


def test_eigen_report_examples():
    rep = eigen_report(spec("B2", (0, 1)), grading((1, 1)))
    assert rep.hodge_numbers == (1, 1, 1, 1) and rep.m == HalfInt(3)
    rep = eigen_report(spec("A1", (1,)), grading((1,)))
    assert rep.hodge_numbers == (1, 1) and rep.m == HalfInt(1)
    for r in range(4, 8):
        std = spec(LieType("D", r), (1,) + (0,) * (r - 1), Pairing.QUATERNIONIC_PAIR)
        for tail in ((1, 2), (2, 1)):
            rep = eigen_report(std, grading((1,) * (r - 2) + tail))
            assert set(rep.hodge_numbers) == {2} and rep.dim == 4 * r


def test_t_compact_examples():
    assert t_compact(grading((4, 2, 1, 1))).n == (2, 2, 0, 0)
    assert t_compact(grading((1, 1, 1))).n == (0, 0, 0)
    assert t_compact(grading((8, 4, 2, 1, 1))).n == (2, 2, 2, 0, 0)


def test_structure_examples():
    assert rcq_structure(spec("B4", (0, 0, 0, 1)), grading((4, 2, 1, 1))) is Structure.QUATERNIONIC
    assert rcq_structure(spec("B5", (0, 0, 0, 0, 1)), grading((8, 4, 2, 1, 1))) is Structure.REAL
    assert rcq_structure(spec("A2", (1, 0)), grading((5, 7))) is Structure.COMPLEX


def test_principal_examples():
    v = is_principal(spec("G2", (1, 0)), grading((1, 1)))
    assert v and v.structure is Structure.REAL and v.reasons == ()
    v = is_principal(spec("A3", (0, 1, 0)), grading((1, 1, 2)))
    assert not v and v.reason is Reason.QUATERNIONIC_SELF_DUAL
    for r in range(2, 8):
        assert is_principal(spec(LieType("C", r), (1,) + (0,) * (r - 1)), grading((1,) * r))


def test_failure_reasons():
    g2 = spec("G2", (1, 0))
    assert is_principal(g2, grading((0, 1))).reason is Reason.NON_POSITIVE_N
    assert Reason.WRONG_M in is_principal(g2, grading((2, 2))).reasons
    assert Reason.GAP_IN_EIGENVALUES in is_principal(g2, grading((2, 2))).reasons
    assert is_principal(spec("B3", (0, 0, 1)), grading((1, 1, 1))).reason is Reason.MULTIPLICITY_ABOVE_ONE
    # D5 half-spin weights are disjoint from their negatives; Sym^2 C^4 has e1+e2 = -(e3+e4)
    d5 = spec("D5", (0, 0, 0, 0, 1))
    assert Reason.SHARED_WEIGHT_WITH_DUAL not in is_principal(d5, grading((8, 4, 2, 1, 3))).reasons
    a3 = spec("A3", (2, 0, 0))
    assert Reason.SHARED_WEIGHT_WITH_DUAL in is_principal(a3, grading((1, 1, 1))).reasons


MODULES = [("A1", (3,)), ("A2", (1, 0)), ("A3", (0, 1, 0)), ("A3", (1, 0, 0)), ("B3", (0, 0, 1)),
           ("C3", (0, 0, 1)), ("D4", (1, 0, 0, 0)), ("D5", (0, 0, 0, 0, 1)), ("G2", (1, 0))]


@given(st.sampled_from(MODULES), st.data())
def test_report_properties(mod, data):
    s = spec(*mod)
    r = s.rs.rank
    n = tuple(data.draw(st.lists(st.integers(0, 6), min_size=r, max_size=r)))
    g = grading(n)
    try:
        rep = eigen_report(s, g)
    except ArithmeticError:
        # only possible when some weight has a non-half-integer eigenvalue
        assert s.rs.lie_type.family in "ADE"
        assert is_principal(s, g).reason in (Reason.NON_POSITIVE_N, Reason.GAP_IN_EIGENVALUES)
        return
    assert rep.dim == s.dim_vc
    if s.self_dual or s.pairing is Pairing.COMPLEX_PAIR:
        assert all(rep.multiset.get(-k, 0) == v for k, v in rep.multiset.items())
    top = eigenvalue(s.rs, s.mu, g)
    assert all(eigenvalue(s.rs, w, g) <= top for w in weight_system(s.rs, s.mu))
    doubled = eigen_report(s, grading(tuple(2 * x for x in n)))
    assert doubled.multiset == {HalfInt(2 * k.twice): v for k, v in rep.multiset.items()}
    if s.pairing is Pairing.COMPLEX_PAIR:
        mult = {}
        for w in weight_system(s.rs, s.mu):
            mult[eigenvalue(s.rs, w, g)] = mult.get(eigenvalue(s.rs, w, g), 0) + 1
        assert all(v == mult.get(k, 0) + mult.get(-k, 0) for k, v in rep.multiset.items())
    v = is_principal(s, g)
    if v:
        assert v.structure in (Structure.REAL, Structure.COMPLEX)
        m = s.target_m.twice
        assert list(rep.multiset) == [HalfInt(t) for t in range(m, -m - 1, -2)]
        evs = [k.twice for k in rep.multiset]
        for x in n:
            assert any(a - b == 2 * x for a, b in zip(evs, evs[1:])) or any(
                a - b == 2 * x for a in evs for b in evs)
