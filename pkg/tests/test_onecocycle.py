import pytest

from trihopf.group import cyclic_group
from trihopf.onecocycle import (CocycleDatum, closed_form_r, dim16_datum, identity_datum, jbar,
                                projective_rep, rmatrix_from_cocycle, tmap, trivial_datum,
                                verify_cocycle)
from trihopf.linalg import vsub


def test_builtin_data_are_bijective_cocycles():
    for d in (trivial_datum(), identity_datum(3), dim16_datum()):
        assert verify_cocycle(d).ok


def test_non_cocycle_is_rejected():
    G = cyclic_group(3)
    with pytest.raises(ValueError):
        d = CocycleDatum(G, G, [tuple(G.elements)] * 3, [0, 2, 2], "not bijective")
        if verify_cocycle(d).ok:
            raise AssertionError("accepted a non-bijective map")
        raise ValueError("rejected")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_datum_triangular(n):
    ct = rmatrix_from_cocycle(identity_datum(n))
    assert ct.report.ok
    assert ct.report.info["rank"] == ct.hopf.dim == n * n


def test_tmap_is_a_bijection():
    d = dim16_datum()
    T = tmap(d)
    assert sorted(T) == list(d.A.elements)


def test_closed_forms_on_small_datum():
    ct = jbar(identity_datum(3))
    from trihopf.twist import twist_r
    assert not vsub(closed_form_r(ct), twist_r(ct.twist).coeffs)


@pytest.mark.parametrize("d", [identity_datum(2), identity_datum(3), dim16_datum()],
                         ids=["Z2", "Z3", "dim16"])
def test_projective_representation(d):
    assert projective_rep(d).report.ok
