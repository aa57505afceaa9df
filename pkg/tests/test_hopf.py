import json

import pytest

from trihopf.group import abelian_group, cyclic_group, symmetric_group
from trihopf.hopf import (HopfPresentation, SubHopf, check_hopf_map, co_opposite, dual_hopf,
                          group_algebra, grouplike_count, grouplikes, presentations_equal,
                          skew_primitives, verify_hopf)
from trihopf.pointed_super import build_hd, h_n_datum, sweedler
from trihopf.scalar import field


@pytest.fixture(scope="module")
def s3_algebra():
    G, _ = symmetric_group(3)
    return group_algebra(G, field(3))


def test_group_algebra_is_hopf(s3_algebra):
    rep = verify_hopf(s3_algebra)
    assert rep.ok and s3_algebra.is_cocommutative() and not s3_algebra.is_commutative()


def test_dual_is_an_involution(s3_algebra):
    D = dual_hopf(s3_algebra)
    assert D.is_commutative() and not D.is_cocommutative()
    assert presentations_equal(dual_hopf(D), s3_algebra)


def test_grouplikes(s3_algebra):
    assert grouplikes(s3_algebra).as_basis_indices() == list(range(6))
    assert grouplike_count(dual_hopf(s3_algebra)) == 2   # characters of S3
    assert grouplike_count(sweedler()) == 2


def test_skew_primitives_of_group_algebra():
    H = group_algebra(cyclic_group(3), field(3))
    F = H.F
    g, h = {1: F.one}, {2: F.one}
    sp = skew_primitives(H, g, h)
    assert len(sp) == 1
    assert sp[0] == {1: F.one, 2: -F.one} or sp[0] == {1: -F.one, 2: F.one}


def test_sweedler_skew_primitive():
    H = sweedler()
    F = H.F
    sp = skew_primitives(H, {0: F.one}, {1: F.one})
    # x itself and 1 - g
    assert len(sp) == 2


def test_json_round_trip():
    H = build_hd(h_n_datum(2))
    data = json.loads(json.dumps(H.to_json()))
    assert presentations_equal(HopfPresentation.from_json(data), H)


def test_from_json_reports_missing_keys():
    with pytest.raises(ValueError, match="antipode"):
        HopfPresentation.from_json({"dim": 1, "mult": [], "unit": [], "comult": [], "counit": []})


def test_embedded_presentation_still_hopf():
    H = sweedler().embedded(12)
    assert H.F.n == 12 and verify_hopf(H).ok


def test_co_opposite_and_hopf_map():
    H = sweedler()
    C = co_opposite(H)
    assert verify_hopf(C).ok
    ident = [{i: H.F.one} for i in range(H.dim)]
    assert check_hopf_map(ident, H, H, "id").ok
    assert not check_hopf_map(ident, H, C, "id").ok


def test_sub_hopf():
    H = group_algebra(abelian_group(2, 2), field(2))
    F = H.F
    sub = SubHopf(H, [{0: F.one}, {1: F.one}])
    assert sub.dim == 2 and verify_hopf(sub.hopf).ok


def test_broken_antipode_is_caught():
    H = sweedler()
    bad = HopfPresentation(H.algebra, H.comult, H.counit, [{0: H.F.one}] * 4)
    rep = verify_hopf(bad)
    assert not rep.ok
    assert any("antipode" in c.axiom.lower() or "S" in c.axiom for c in rep.failures())
