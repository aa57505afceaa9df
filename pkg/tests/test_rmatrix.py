import pytest

from trihopf.group import cyclic_group
from trihopf.hopf import TensorSquareElement, group_algebra
from trihopf.pointed_super import sweedler, sweedler_parameter, sweedler_r
from trihopf.rmatrix import (check_f_r_iso, drinfeld_element, is_triangular, minimal_part, r_u,
                             tensor_rank, triangular_report, verify_quasitriangular)
from trihopf.scalar import field


@pytest.fixture(scope="module")
def S():
    return sweedler()


def test_trivial_r_on_group_algebra():
    H = group_algebra(cyclic_group(3), field(3))
    R = TensorSquareElement.one(H)
    rep = triangular_report(H, R)
    assert rep.ok and rep.info["rank"] == 1 and rep.info["drinfeld_is_one"]


def test_r_u_for_central_involution():
    H = group_algebra(cyclic_group(2), field(2))
    R = r_u(H, {1: H.F.one})
    assert verify_quasitriangular(H, R).ok and is_triangular(H, R)
    assert tensor_rank(H, R) == 2


@pytest.mark.parametrize("lam", [0, 1, 2, -1, 3, "1/2"])
def test_sweedler_family(S, lam):
    from fractions import Fraction
    lam = S.F(Fraction(lam))
    R = sweedler_r(S, lam)
    assert triangular_report(S, R).ok
    d = drinfeld_element(S, R)
    assert d.u == {1: S.F.one}
    assert sweedler_parameter(S, R) == lam
    _, rank = minimal_part(S, R)
    assert rank == (2 if lam == 0 else 4)


def test_f_r_is_an_isomorphism_for_minimal_r(S):
    assert check_f_r_iso(S, sweedler_r(S, 1)).ok


def test_non_r_matrix_fails_quasitriangularity(S):
    R = TensorSquareElement.one(S)
    rep = verify_quasitriangular(S, R)
    assert not rep.ok
    rep = triangular_report(S, R)
    assert not rep.ok and rep.info["rank"] is None
