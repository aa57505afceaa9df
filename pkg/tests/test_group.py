import pytest

from trihopf.group import (BilinearForm, GroupAxiomError, FiniteGroup, abelian_group, character_group,
                           cyclic_group, double_cosets, dual_group, is_nondegenerate, is_perfect,
                           is_self_normalizing, left_cosets, semidirect_product,
                           standard_symplectic_form, symmetric_group, cocycle_from_bilinear)
from trihopf.scalar import field


def test_cyclic_group():
    G = cyclic_group(4)
    assert G.order == 4 and G.exponent() == 4 and G.is_abelian()
    assert [G.element_order(a) for a in G.elements] == [1, 4, 2, 4]


def test_symmetric_group_subgroups():
    G, perms = symmetric_group(3)
    assert G.order == 6 and not G.is_abelian()
    orders = sorted(H.order for H in G.subgroups())
    assert orders == [1, 2, 2, 2, 3, 6]
    assert G.commutator_subgroup().order == 3


def test_subgroup_counts_s4():
    G, _ = symmetric_group(4)
    assert len(G.subgroups()) == 30


def test_rejects_non_group():
    with pytest.raises(GroupAxiomError):
        FiniteGroup([[0, 1], [1, 1]])


def test_characters_of_z4():
    G = cyclic_group(4)
    F = field(4)
    chars = character_group(G)
    assert len(chars) == 4
    for ch in chars:
        for a in G.elements:
            for b in G.elements:
                assert ch.value(G.mul(a, b), F) == ch.value(a, F) * ch.value(b, F)
    D, _ = dual_group(G)
    assert D.order == 4 and D.exponent() == 4


def test_cosets():
    G, perms = symmetric_group(3)
    H = G.subgroup([0, perms.index((1, 0, 2))])
    assert len(left_cosets(G, H)) == 3
    assert sorted(len(z) for z in double_cosets(G, H)) == [2, 4]


def test_symplectic_form_is_nondegenerate():
    G, w = standard_symplectic_form(3, field(3))
    assert is_nondegenerate(cocycle_from_bilinear(w))
    F = field(3)
    trivial = BilinearForm(G, [[F.one] * 9 for _ in range(9)])
    assert not is_nondegenerate(cocycle_from_bilinear(trivial))


def test_semidirect_product():
    Q, A = cyclic_group(2), abelian_group(3, 3)
    flip = [tuple(A.elements), tuple(3 * (a // 3) + (-(a % 3)) % 3 for a in A.elements)]
    G = semidirect_product(Q, A, flip)
    assert G.order == 18 and not G.is_abelian()


def test_perfect_and_self_normalizing():
    G, _ = symmetric_group(3)
    assert not is_perfect(G.whole())
    assert is_perfect(G.trivial())
    A3 = G.commutator_subgroup()
    assert not is_self_normalizing(G, A3)
