import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trihopf.group import BilinearForm, abelian_group, cyclic_group
from trihopf.hopf import presentations_equal, verify_hopf
from trihopf.linalg import vsub
from trihopf.pointed_super import (Datum, DatumError, SuperGroupDatum, biproduct_check, bosonize,
                                   build_hd, even_twist_correspondence, exp_twist, exp_twist_report,
                                   exterior_datum, h_n_datum, hd_report, minimal_triangular_structures,
                                   r_correspondence_report, s4_check, sign_datum, super_cocommutative,
                                   super_r_to_ordinary, ordinary_r_to_super, supergroup_algebra,
                                   sweedler, sweedler_parameter, twist_square_report, unbosonize,
                                   z4z4_datum)
from trihopf.scalar import field
from trihopf.twist import twist_hopf, twist_r


@pytest.mark.parametrize("n,dim", [(0, 2), (1, 4), (2, 8), (3, 16)])
def test_h_n(n, dim):
    d = h_n_datum(n)
    H = build_hd(d)
    assert H.dim == dim
    assert hd_report(d, H).ok
    s4 = s4_check(H)
    assert s4.ok and s4.info["S2_is_identity"] == (n == 0)
    assert biproduct_check(d, H).ok


def test_datum_rejects_bad_multiplicity():
    F = field(2)
    G = cyclic_group(2)
    form = BilinearForm(G, [[F.one, F.one], [F.one, -F.one]])
    with pytest.raises(DatumError) as e:
        Datum(G, form, {0: 1})
    assert "I_F" in e.value.condition


def test_datum_rejects_degenerate_form():
    F = field(2)
    G = cyclic_group(2)
    with pytest.raises(DatumError):
        Datum(G, BilinearForm(G, [[F.one, F.one], [F.one, F.one]]), {})


def test_datum_json_round_trip():
    d = h_n_datum(2)
    e = Datum.from_json(json.loads(json.dumps(d.to_json())))
    assert presentations_equal(build_hd(d), build_hd(e))


def test_z4z4_is_hopf_without_triangular_structure():
    d = z4z4_datum()
    H = build_hd(d)
    assert H.dim == 32 and hd_report(d, H).ok
    with pytest.raises(DatumError, match="S\\(k\\) is empty"):
        minimal_triangular_structures(d, H=H)


@given(st.integers(min_value=-3, max_value=3).filter(bool))
def test_t_datum_on_sweedler(m):
    d = h_n_datum(1)
    H = build_hd(d)
    T = minimal_triangular_structures(d, M={1: [[m]]}, H=H)
    assert T.report.ok
    assert sweedler_parameter(H, T.R) == -m


def test_t_datum_rejects_singular_m():
    d = h_n_datum(2)
    with pytest.raises(DatumError, match="invertible"):
        minimal_triangular_structures(d, M={1: [[1, 1], [1, 1]]})


def test_t_datum_rejects_nonsymmetric_m():
    d = h_n_datum(2)
    with pytest.raises(DatumError):
        minimal_triangular_structures(d, M={1: [[1, 2], [0, 1]]})


def test_h2_t_datum():
    d = h_n_datum(2)
    T = minimal_triangular_structures(d, M={1: [[1, 1], [1, 2]]})
    assert T.report.ok and T.report.info["rank"] == 8


# ---------------------------------------------------------------- super side

def z4_datum():
    """Z4 acting on C² by diag(i, -i); the element of order two is the parity."""
    F = field(4)
    i = F.zeta()
    act = [[[i ** k, F.zero], [F.zero, (-i) ** k]] for k in range(4)]
    return SuperGroupDatum(cyclic_group(4), 2, act, F, "Z4 on C2"), 2


def z2_datum(V):
    F = field(2)
    ident = [[F.one if a == b else F.zero for b in range(V)] for a in range(V)]
    neg = [[-x for x in row] for row in ident]
    return SuperGroupDatum(cyclic_group(2), V, [ident, neg], F, f"Z2 on C{V}"), 1


SUPER = {"sign": lambda: (sign_datum(), 1), "z2_c2": lambda: z2_datum(2), "z2_c3": lambda: z2_datum(3),
         "z4_c2": z4_datum}


@pytest.mark.parametrize("name", sorted(SUPER))
def test_bosonization_round_trip(name):
    sgd, g = SUPER[name]()
    Hs = supergroup_algebra(sgd)
    assert verify_hopf(Hs).ok and super_cocommutative(Hs)
    A = bosonize(Hs, g)
    assert verify_hopf(A).ok and not A.is_super
    back = unbosonize(A, g)
    assert presentations_equal(back, Hs)
    assert presentations_equal(bosonize(back, g), A)


def test_bosonization_of_sign_datum_is_sweedler():
    assert presentations_equal(bosonize(supergroup_algebra(sign_datum()), 1), sweedler())


def test_unbosonize_needs_homogeneous_basis():
    from trihopf.group import symmetric_group
    from trihopf.hopf import group_algebra
    G, perms = symmetric_group(3)
    H = group_algebra(G, field(3))
    t = perms.index((1, 0, 2))
    # conjugation by a transposition permutes group elements instead of scaling them
    with pytest.raises(ValueError, match="eigenvector"):
        unbosonize(H, t)
    S = sweedler()
    with pytest.raises(ValueError):
        unbosonize(S, {2: S.F.one})


def symmetric_r(V, draw_vals):
    r = {}
    k = 0
    for a in range(V):
        for b in range(a, V):
            v = draw_vals[k]
            k += 1
            if v:
                r[(a, b)] = v
                r[(b, a)] = v
    return r


def _odd(sgd, r):
    return {(sgd.odd_index(a), sgd.odd_index(b)): sgd.F(Fraction(c)) for (a, b), c in r.items()}


@settings(max_examples=15)
@given(st.sampled_from(sorted(SUPER)), st.lists(st.integers(min_value=-2, max_value=2), min_size=6, max_size=6))
def test_r_correspondence_round_trip(name, vals):
    sgd, g = SUPER[name]()
    if name == "z4_c2":
        # Z4-invariance forces r to pair the two weight spaces
        vals = [0, vals[1], 0] + vals[3:]
    Hs = supergroup_algebra(sgd, verify=False)
    r = _odd(sgd, symmetric_r(sgd.V, vals))
    T = exp_twist(Hs, r)
    HJ = twist_hopf(Hs, T, verify=False)
    Rs = twist_r(T)
    rep = r_correspondence_report(HJ, Rs, g)
    assert rep.ok, [c.axiom for c in rep.failures()]
    A, R = super_r_to_ordinary(HJ, Rs, g)
    Hs2, Rs2 = ordinary_r_to_super(A, R, g)
    assert presentations_equal(Hs2, HJ) and Rs2 == Rs


@given(st.sampled_from(sorted(SUPER)), st.lists(st.integers(min_value=-3, max_value=3), min_size=6, max_size=6))
def test_exp_twist_inverse(name, vals):
    sgd, _ = SUPER[name]()
    Hs = supergroup_algebra(sgd, verify=False)
    r = _odd(sgd, symmetric_r(sgd.V, vals))
    neg = {k: -c for k, c in r.items()}
    assert not vsub(Hs.tmul(exp_twist(Hs, r).J, exp_twist(Hs, neg).J), Hs.one2())


@pytest.mark.parametrize("V", [1, 2, 3])
def test_minimal_iff_nondegenerate(V):
    Hs = supergroup_algebra(exterior_datum(V))
    F = Hs.F
    full = {(1 << a, 1 << a): F.one for a in range(V)}
    half = {(1, 1): F.one}
    for r in (full, half):
        rep = exp_twist_report(Hs, r)
        assert rep.ok
    assert exp_twist_report(Hs, full).info["rank"] == Hs.dim
    assert exp_twist_report(Hs, half).info["rank"] == 2


def test_exp_twist_rejects_non_symmetric():
    Hs = supergroup_algebra(exterior_datum(2))
    with pytest.raises(ValueError, match="symmetric"):
        exp_twist(Hs, {(1, 2): Hs.F.one})


def test_twisting_commutes_with_bosonization():
    sgd, g = z2_datum(2)
    Hs = supergroup_algebra(sgd)
    F = Hs.F
    a, b = sgd.odd_index(0), sgd.odd_index(1)
    T = exp_twist(Hs, {(a, b): F.one, (b, a): F.one})
    assert twist_square_report(Hs, T, g).ok
    A, J = even_twist_correspondence(Hs, T, g)
    assert verify_hopf(twist_hopf(A, J)).ok
