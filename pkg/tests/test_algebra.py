import pytest

from trihopf.algebra import (StructureAlgebra, block_profile, block_profile_closure, center,
                             central_idempotents, group_algebra_structure, jacobson_radical,
                             primitive_idempotent, simple_modules, tensor_product_algebra,
                             twisted_group_algebra, verify_algebra)
from trihopf.group import (abelian_group, cocycle_from_bilinear, cyclic_group, standard_symplectic_form,
                           symmetric_group)
from trihopf.linalg import NonSplitError
from trihopf.pointed_super import sweedler
from trihopf.scalar import field


def test_group_algebra_of_s3():
    G, _ = symmetric_group(3)
    A = group_algebra_structure(G, field(3))
    assert verify_algebra(A).ok
    assert block_profile(A).dims == (1, 1, 2)
    assert block_profile_closure(A).dims == (1, 1, 2)
    assert len(center(A)) == 3
    assert len(central_idempotents(A)) == 3


def test_abelian_group_algebra_needs_roots():
    G = cyclic_group(3)
    assert block_profile(group_algebra_structure(G, field(3))).dims == (1, 1, 1)
    with pytest.raises(NonSplitError):
        block_profile(group_algebra_structure(G, field(1)))
    # the closure route sees the same dims without splitting fields
    assert block_profile_closure(group_algebra_structure(G, field(1))).dims == (1, 1, 1)


def test_nondegenerate_cocycle_gives_matrix_algebra():
    G, w = standard_symplectic_form(3, field(3))
    A = twisted_group_algebra(G, cocycle_from_bilinear(w))
    assert verify_algebra(A).ok
    assert block_profile(A).dims == (3,)


def test_radical_of_sweedler():
    A = sweedler().algebra
    assert len(jacobson_radical(A)) == 2
    assert block_profile(A).dims == (1, 1)


def test_simple_modules_are_modules():
    G, _ = symmetric_group(3)
    A = group_algebra_structure(G, field(3))
    mods = simple_modules(A)
    assert sorted(m.dim_v for m in mods) == [1, 1, 2]
    assert all(m.verify().ok for m in mods)


def test_primitive_idempotent():
    G, _ = symmetric_group(3)
    A = group_algebra_structure(G, field(3))
    e = primitive_idempotent(A)
    assert A.mul(e, e) == e


def test_tensor_product_dims():
    A = group_algebra_structure(cyclic_group(2), field(2))
    B = group_algebra_structure(abelian_group(2, 2), field(2))
    T = tensor_product_algebra(A, B)
    assert T.dim == 8 and verify_algebra(T).ok


def test_broken_associativity_has_witness():
    F = field(1)
    A = group_algebra_structure(cyclic_group(3), F)
    table = [[dict(e) for e in row] for row in A.table]
    table[1][1] = {0: F.one}
    rep = verify_algebra(StructureAlgebra(F, table, A.unit))
    assert not rep.ok
    assert all(c.witness is not None for c in rep.failures())
