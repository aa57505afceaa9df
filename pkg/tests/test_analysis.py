import itertools

import pytest

from trihopf.algebra import simple_modules
from trihopf.analysis import (categorical_dimension, character_representation, chevalley_check,
                              cotriangular_example, direct_sum, dual_double_coset_decomposition,
                              fg_embedding, kaplansky_check, regular_representation,
                              tensor_representation, trivial_representation)
from trihopf.group import symmetric_group
from trihopf.hopf import TensorSquareElement, group_algebra
from trihopf.pointed_super import build_hd, h_n_datum, sweedler, sweedler_r
from trihopf.scalar import field


@pytest.fixture(scope="module")
def example():
    return cotriangular_example(3, -1)


def test_double_coset_blocks(example):
    G, H, J, F = example
    dec = dual_double_coset_decomposition(G, H, J, F)
    assert dec.report.ok
    assert [c.dims for c in dec.cosets] == [[1] * 9, [3]]
    assert dec.report.info["fine_bijection"].startswith("not asserted")


def test_double_coset_blocks_orientation_preserving():
    G, H, J, F = cotriangular_example(3, 1)
    dec = dual_double_coset_decomposition(G, H, J, F)
    assert dec.report.ok
    assert [c.dims for c in dec.cosets] == [[1] * 9, [1] * 9]


@pytest.mark.parametrize("g", [0, 9])
def test_embedding_into_dual(example, g):
    G, H, J, F = example
    assert fg_embedding(G, H, J, g, F).ok


def test_chevalley():
    for H, rad in ((sweedler(), 2), (build_hd(h_n_datum(2)), 6)):
        ch = chevalley_check(H)
        assert ch.radical_dim == rad and ch.is_hopf_ideal and ch.tensor_test


def test_kaplansky_group_algebra():
    G, _ = symmetric_group(3)
    rep = kaplansky_check(group_algebra(G, field(3)))
    assert rep.ok and rep.info["dual_block_dims"] == [1] * 6


def _reps(H):
    return simple_modules(H.algebra) + [trivial_representation(H), regular_representation(H)]


def _cases():
    S = sweedler()
    yield "sweedler", S, sweedler_r(S, 1)
    G, _ = symmetric_group(3)
    K = group_algebra(G, field(3))
    yield "s3", K, TensorSquareElement.one(K)


@pytest.mark.parametrize("name,H,R", list(_cases()), ids=lambda v: v if isinstance(v, str) else "")
def test_categorical_dimension_additive_and_multiplicative(name, H, R):
    reps = _reps(H)
    dims = [categorical_dimension(H, R, V) for V in reps]
    assert all(d.is_integer() for d in dims)
    for (V, dv), (W, dw) in itertools.combinations_with_replacement(list(zip(reps, dims))[:4], 2):
        assert categorical_dimension(H, R, direct_sum(V, W)) == dv + dw
        assert categorical_dimension(H, R, tensor_representation(H, V, W)) == dv * dw


def test_sweedler_categorical_dimensions():
    S = sweedler()
    R = sweedler_r(S, 1)
    sign = character_representation(S, [1, -1, 0, 0])
    assert categorical_dimension(S, R, sign) == -1
    assert categorical_dimension(S, R, trivial_representation(S)) == 1
    assert categorical_dimension(S, R, regular_representation(S)) == 0
