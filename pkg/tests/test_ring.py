import numpy as np
import pytest
from hypothesis import given, strategies as st

from fewweight.field import build_field
from fewweight.ring import (RingElem, gray_inverse, gray_map, hamming_weight, ring_add,
                            ring_mul, swt, tr_ring, tr_ring_direct)

F = build_field(3, 3)
elem = st.builds(RingElem, st.integers(0, F.q - 1), st.integers(0, F.q - 1))


@given(elem, elem, elem)
def test_ring_axioms(x, y, z):
    assert ring_mul(F, x, ring_add(F, y, z)) == ring_add(F, ring_mul(F, x, y), ring_mul(F, x, z))
    assert ring_mul(F, ring_mul(F, x, y), z) == ring_mul(F, x, ring_mul(F, y, z))
    assert ring_mul(F, x, y) == ring_mul(F, y, x)


def test_u_squared_is_zero():
    u = RingElem(0, 1)
    assert ring_mul(F, u, u) == RingElem(0, 0)


@given(elem)
def test_trace_matches_frobenius_definition(x):
    assert tr_ring(F, x) == tr_ring_direct(F, x)


@given(elem, elem)
def test_trace_is_additive(x, y):
    lhs = tr_ring(F, ring_add(F, x, y))
    a, b = tr_ring(F, x), tr_ring(F, y)
    assert lhs == RingElem((a.a + b.a) % 3, (a.b + b.b) % 3)


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=30))
def test_gray_map_is_an_isometry_and_invertible(v):
    v = [RingElem(*t) for t in v]
    w = gray_map(v)
    assert len(w) == 2 * len(v)
    assert swt(w) == hamming_weight(v)
    assert gray_inverse(w) == v


def test_gray_map_layout():
    w = gray_map([RingElem(1, 2), RingElem(0, 1)])
    assert w.tolist() == [1, 0, 2, 1]


def test_swt_rejects_odd_length():
    with pytest.raises(ValueError):
        swt(np.zeros(3, dtype=int))
    with pytest.raises(ValueError):
        gray_inverse([1, 2, 3])
