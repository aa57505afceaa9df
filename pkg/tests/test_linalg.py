from fractions import Fraction

from hypothesis import given, strategies as st

from trihopf.linalg import (Span, charpoly, mat_det, mat_identity, mat_inverse, mat_mul, mat_rank,
                            nullspace, poly_eval, roots_in_field, solve)
from trihopf.scalar import field

F = field(3)
small = st.integers(min_value=-3, max_value=3)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda M: [[F(x) for x in row] for row in M])


@given(square(4))
def test_inverse_iff_nonzero_det(M):
    d = mat_det(M, F)
    if d:
        assert mat_mul(M, mat_inverse(M, F), F) == mat_identity(4, F)
        assert mat_rank(M, F) == 4
    else:
        assert mat_rank(M, F) < 4


@given(square(3))
def test_cayley_hamilton(M):
    p = charpoly(M, F)
    acc = [[F.zero] * 3 for _ in range(3)]
    power = mat_identity(3, F)
    for c in p:
        acc = [[acc[i][j] + c * power[i][j] for j in range(3)] for i in range(3)]
        power = mat_mul(power, M, F)
    assert acc == [[F.zero] * 3 for _ in range(3)]


@given(square(4))
def test_nullspace_and_rank(M):
    rows = [{j: x for j, x in enumerate(r) if x} for r in M]
    ns = nullspace(rows, range(4), F)
    assert len(ns) + Span(F, rows).dim == 4
    for x in ns:
        for r in rows:
            assert sum((c * x.get(j, F.zero) for j, c in r.items()), F.zero) == F.zero


@given(square(3), st.lists(small, min_size=3, max_size=3))
def test_solve(M, b):
    rows = [{j: x for j, x in enumerate(r) if x} for r in M]
    rhs = [F(v) for v in b]
    x = solve(rows, rhs, range(3), F)
    if x is None:
        assert Span(F, rows).dim < 3
    else:
        for r, v in zip(rows, rhs):
            assert sum((c * x.get(j, F.zero) for j, c in r.items()), F.zero) == v


def test_roots_of_cyclotomic_polynomial():
    # x^2 + x + 1 splits over Q(zeta_3) with the two primitive cube roots
    roots = roots_in_field([F.one, F.one, F.one], F)
    assert sorted(map(repr, roots)) == sorted(map(repr, [F.zeta(1), F.zeta(2)]))
    for r in roots:
        assert poly_eval([F.one, F.one, F.one], r) == F.zero


def test_rational_roots():
    Q = field(1)
    p = [Q(-6), Q(Fraction(11)), Q(-6), Q.one]   # (x-1)(x-2)(x-3)
    assert sorted(r.to_fraction() for r in roots_in_field(p, Q)) == [1, 2, 3]
