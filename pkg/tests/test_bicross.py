import pytest

from trihopf.algebra import block_profile
from trihopf.bicross import (ExactFactorization, biperfect_group_test, biperfect_test, bicrossproduct,
                             duality_check, expected_block_dims, find_exact_factorizations)
from trihopf.gallery import s3_factorization
from trihopf.group import abelian_group, cyclic_group, symmetric_group
from trihopf.hopf import dual_hopf, group_algebra, presentations_equal
from trihopf.scalar import field


def test_s3_factorizations():
    G, _ = symmetric_group(3)
    facts = find_exact_factorizations(G)
    # (1, G), (G, 1), A3 with each of three transpositions, in both orders
    assert len(facts) == 8


def test_not_exact():
    G, _ = symmetric_group(3)
    A3 = G.commutator_subgroup()
    with pytest.raises(ValueError):
        ExactFactorization(G, A3, A3)


def test_s3_bicrossproduct():
    f = s3_factorization()
    B = bicrossproduct(f)
    assert B.report.ok and B.hopf.dim == 6
    assert duality_check(f).ok
    res = biperfect_test(f)
    assert res["consistent"] and not res["biperfect"]
    assert list(block_profile(B.hopf.algebra).dims) == expected_block_dims(f, B.hopf.F)


@pytest.mark.parametrize("n", [3, 4])
def test_degenerate_factorizations(n):
    G, _ = symmetric_group(n)
    F = field(G.exponent())
    KG = group_algebra(G, F, verify=False)
    assert presentations_equal(bicrossproduct(ExactFactorization(G, G.whole(), G.trivial()), F).hopf, KG)
    assert presentations_equal(bicrossproduct(ExactFactorization(G, G.trivial(), G.whole()), F).hopf,
                               dual_hopf(KG, verify=False))


def test_s4_factorization_formulas():
    G, perms = symmetric_group(4)
    f = next(f for f in find_exact_factorizations(G) if f.G1.order == 6 and f.G2.order == 4
             and f.G2.as_group().exponent() == 4)
    B = bicrossproduct(f)
    assert B.report.ok
    assert duality_check(f).ok
    assert biperfect_test(f)["consistent"]
    assert list(block_profile(B.hopf.algebra).dims) == expected_block_dims(f, B.hopf.F)


def test_group_only_test_on_abelian_group():
    G = abelian_group(2, 3)
    f = find_exact_factorizations(G)[1]
    assert not biperfect_group_test(G, f.G1, f.G2)


def test_cyclic_factorization():
    G = cyclic_group(6)
    f = ExactFactorization(G, G.subgroup([0, 2, 4]), G.subgroup([0, 3]))
    B = bicrossproduct(f)
    assert B.report.ok and B.hopf.is_commutative() and B.hopf.is_cocommutative()
