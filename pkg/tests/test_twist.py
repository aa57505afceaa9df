import pytest
from hypothesis import assume, given, settings, strategies as st

from trihopf.analysis import symplectic_twist
from trihopf.group import TwoCocycle, abelian_group, cocycle_from_bilinear, dual_group, symplectic_form
from trihopf.hopf import group_algebra, verify_hopf
from trihopf.pointed_super import sweedler, sweedler_r, sweedler_twist
from trihopf.rmatrix import r_u, triangular_report
from trihopf.scalar import field
from trihopf.twist import (TwistError, abelian_twist, conjugation_iso_report, extract_quasitwist,
                           find_gauge, gauge, movshev_coalgebra, movshev_dual_algebra,
                           movshev_stabilizer, twist_hopf, twist_r, twisted_group_dual_coalgebra,
                           verify_gcoalgebra, verify_twist)

F3 = field(3)


@pytest.fixture(scope="module")
def symplectic():
    G, J = symplectic_twist(3, F3)
    H = group_algebra(G, F3)
    return G, H, verify_twist(H, J)


def test_twisted_group_algebra_is_triangular(symplectic):
    G, H, T = symplectic
    HJ = twist_hopf(H, T)
    rep = triangular_report(HJ, twist_r(T))
    assert rep.ok and rep.info["rank"] == 9 and rep.info["drinfeld_is_one"]


def test_not_a_twist_is_rejected():
    H = group_algebra(abelian_group(2, 2), field(2))
    F = H.F
    with pytest.raises(TwistError) as e:
        verify_twist(H, {(0, 0): F(2)})
    assert e.value.kind == "not a quasitwist"


def test_singular_quasitwist_is_rejected():
    H = group_algebra(abelian_group(2), field(2))
    F = H.F
    # (1+g)/2 ⊗ ... style: J = 1⊗1 - e⊗e with e the idempotent (1-g)/2 kills e⊗e
    half = F(1) / F(2)
    e = {0: half, 1: -half}
    J = {(0, 0): F.one}
    for a, x in e.items():
        for b, y in e.items():
            J[(a, b)] = J.get((a, b), F.zero) - x * y
    with pytest.raises(TwistError):
        verify_twist(H, J)


def test_abelian_twist_from_cocycle(symplectic):
    G, H, T = symplectic
    Ad, chars = dual_group(G)
    _, w = symplectic_form(3, F3)
    c = cocycle_from_bilinear(w)
    A = abelian_twist(H, G, TwoCocycle(Ad, c.values), chars)
    assert verify_hopf(twist_hopf(H, A)).ok


def test_movshev_dual_and_stabilizer(symplectic):
    G, H, T = symplectic
    from trihopf.algebra import block_profile
    B = movshev_dual_algebra(G, F3, T.J)
    assert block_profile(B).dims == (3,)
    st_ = movshev_stabilizer(G, F3, T.J)
    assert st_.subgroup.order == 9 and st_.report.ok


def test_extraction_round_trip(symplectic):
    G, H, T = symplectic
    C = movshev_coalgebra(G, F3, T.J)
    assert verify_gcoalgebra(C).ok
    ex = extract_quasitwist(C)
    assert ex.report.ok
    verify_twist(H, ex.J)


def test_extraction_from_twisted_group_dual():
    G, w = symplectic_form(3, F3)
    C = twisted_group_dual_coalgebra(G, F3, cocycle_from_bilinear(w))
    assert verify_gcoalgebra(C).ok
    assert extract_quasitwist(C).report.ok


def test_gauge_search_finds_grouplike_gauge(symplectic):
    G, H, T = symplectic
    Tx = gauge(T, {4: F3.one})
    res = find_gauge(H, T.J, Tx.J, group=G)
    assert res.status == "found"


def test_gauge_search_budget_is_inconclusive():
    S = sweedler()
    res = find_gauge(S, sweedler_twist(S, 1).J, sweedler_twist(S, 2).J, budget=5)
    assert res.status == "inconclusive"


sparse = st.dictionaries(st.integers(min_value=0, max_value=8), st.integers(min_value=-2, max_value=2),
                         min_size=1, max_size=3)


@settings(max_examples=12)
@given(sparse)
def test_gauge_property_on_symplectic_twist(symplectic, cs):
    """J^x is a twist and a ↦ x a x⁻¹ carries (A^J, R^J) onto (A^{J^x}, R^{J^x})."""
    G, H, T = symplectic
    x = {i: F3(c) for i, c in cs.items() if c}
    e = H.eps(x)
    assume(e)
    x = {i: c / e for i, c in x.items()}
    try:
        H.algebra.inverse(x)
    except (ZeroDivisionError, ArithmeticError, ValueError):
        assume(False)
    Tx = gauge(T, x)
    HJ, HJx = twist_hopf(H, T, verify=False), twist_hopf(H, Tx, verify=False)
    assert conjugation_iso_report(HJ, twist_r(T), HJx, twist_r(Tx), x).ok


@given(st.lists(st.integers(min_value=-2, max_value=2), min_size=4, max_size=4),
       st.integers(min_value=-2, max_value=2))
def test_gauge_property_on_sweedler(cs, lam):
    S = sweedler()
    F = S.F
    x = {i: F(c) for i, c in enumerate(cs) if c}
    e = S.eps(x)
    assume(e)
    x = {i: c / e for i, c in x.items()}
    try:
        S.algebra.inverse(x)
    except (ZeroDivisionError, ArithmeticError, ValueError):
        assume(False)
    T = sweedler_twist(S, lam)
    Tx = gauge(T, x)
    Rg = r_u(S, {1: F.one})
    HJ, HJx = twist_hopf(S, T), twist_hopf(S, Tx)
    assert conjugation_iso_report(HJ, twist_r(T, Rg), HJx, twist_r(Tx, Rg), x).ok
    assert triangular_report(HJx, twist_r(Tx, Rg)).ok


def test_sweedler_twist_gives_r_lambda():
    S = sweedler()
    F = S.F
    for lam in (0, 1, 2, -1):
        R = twist_r(sweedler_twist(S, lam), r_u(S, {1: F.one}))
        assert R == sweedler_r(S, lam)
