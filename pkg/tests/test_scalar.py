from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trihopf.scalar import ConductorMismatch, field, root_of_unity, scalar_from_json

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12]


def elements(n):
    F = field(n)
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coeff, min_size=F.phi, max_size=F.phi).map(F.from_coeffs)


@st.composite
def triple(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    e = elements(n)
    return draw(e), draw(e), draw(e)


@given(triple())
def test_ring_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == a.field.zero


@given(triple())
def test_inverse(t):
    a, _, _ = t
    if a:
        assert a * a.inv() == a.field.one
        assert (a / a) == a.field.one


@pytest.mark.parametrize("n", CONDUCTORS)
def test_roots_of_unity(n):
    z = root_of_unity(1, n)
    assert z ** n == field(n).one
    assert all(z ** k != field(n).one for k in range(1, n))
    assert sum((z ** k for k in range(n)), field(n).zero) == (field(n).one if n == 1 else field(n).zero)


def test_known_values():
    F = field(4)
    i = F.zeta()
    assert i * i == F(-1)
    F3 = field(3)
    w = F3.zeta()
    assert w * w + w + 1 == F3.zero
    assert F3(Fraction(1, 2)) * 2 == F3.one


@given(triple())
def test_embedding_is_a_ring_map(t):
    a, b, _ = t
    m = 24 if 24 % a.field.n == 0 else a.field.n * 5
    assert (a * b).embed(m) == a.embed(m) * b.embed(m)
    assert (a + b).embed(m) == a.embed(m) + b.embed(m)


def test_embed_sends_roots_to_roots():
    assert field(4).zeta().embed(12) == field(12).zeta(3)
    with pytest.raises(ConductorMismatch):
        field(4).zeta().embed(6)


def test_mixing_conductors_is_an_error():
    with pytest.raises(ConductorMismatch):
        field(3).zeta() + field(4).zeta()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        field(5).zero.inv()


@given(triple())
def test_json_round_trip(t):
    a, _, _ = t
    assert scalar_from_json(a.to_json(), a.field.n) == a


def test_json_rejects_floats():
    with pytest.raises(ValueError):
        scalar_from_json(0.5, 3)
