import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fewweight.field import (FieldError, build_field, cyclotomic_number_order2, legendre,
                             is_primitive_polynomial, primitive_polynomials)

SMALL = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2), (3, 4)]


@pytest.fixture(scope="module", params=SMALL, ids=lambda pm: f"p{pm[0]}m{pm[1]}")
def ctx(request):
    return build_field(*request.param)


def test_lexicographic_modulus_and_generator():
    ctx = build_field(3, 2)
    assert list(ctx.modulus) == [2, 1, 1]
    assert ctx.g == 3
    # x * x = x^2 = -x - 2 = 2x + 1 -> digits (1, 2) -> 1 + 2*3
    assert ctx.mul(3, 3) == 7
    assert ctx.trace(3) == 2 and ctx.trace(1) == 2


def test_first_primitive_polynomials():
    assert next(primitive_polynomials(3, 2)) == [2, 1, 1]
    assert next(primitive_polynomials(5, 1)) == [2, 1]
    assert not is_primitive_polynomial([1, 0, 1], 3)  # x^2 + 1 is irreducible, not primitive


def test_generator_order(ctx):
    powers = ctx.antilog[: ctx.order]
    assert sorted(powers.tolist()) == list(range(1, ctx.q))
    assert ctx.power(ctx.g, ctx.order) == 1


def test_log_antilog_roundtrip(ctx):
    e = np.arange(1, ctx.q)
    assert np.array_equal(ctx.antilog[ctx.log[e]], e)
    assert ctx.log[0] == -1


def test_inverse(ctx):
    for v in range(1, ctx.q):
        assert ctx.mul(v, ctx.inv(v)) == 1
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_trace_matches_frobenius_sum(ctx):
    for v in range(ctx.q):
        assert ctx.trace(v) == ctx.trace_direct(v)


def test_trace_is_onto_and_balanced(ctx):
    counts = np.bincount(ctx.trace_tab, minlength=ctx.p)
    assert (counts == ctx.q // ctx.p).all()


def test_eta_is_a_character(ctx):
    e = ctx.elements[1:]
    a, b = np.meshgrid(e, e, indexing="ij")
    assert np.array_equal(ctx.eta(ctx.mul(a, b)), ctx.eta(a) * ctx.eta(b))
    assert ctx.eta(0) == 0
    assert int(np.sum(ctx.eta(e))) == 0


def test_eta_on_prime_subfield(ctx):
    for y in range(1, ctx.p):
        expect = 1 if ctx.m % 2 == 0 else legendre(y, ctx.p)
        assert ctx.eta(ctx.embed(y)) == expect


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_field_axioms_f81(u, v, w):
    f = build_field(3, 4)
    assert f.mul(u, f.add(v, w)) == f.add(f.mul(u, v), f.mul(u, w))
    assert f.mul(f.mul(u, v), w) == f.mul(u, f.mul(v, w))
    assert f.add(f.add(u, v), w) == f.add(u, f.add(v, w))
    assert f.sub(f.add(u, v), v) == u
    assert f.add(u, f.neg(u)) == 0
    assert f.frobenius(f.add(u, v)) == f.add(f.frobenius(u), f.frobenius(v))


@pytest.mark.parametrize("q_pm", [(3, 2), (3, 3), (5, 2), (7, 1), (3, 4), (11, 1)])
def test_cyclotomic_numbers_order2(q_pm):
    ctx = build_field(*q_pm)
    for i, j in itertools.product(range(2), repeat=2):
        assert cyclotomic_number_order2(ctx.q, i, j) == ctx.cyclotomic_number(2, i, j)


def test_cyclotomic_classes_partition():
    ctx = build_field(3, 3)
    classes = [set(ctx.cyclotomic_class(2, i).tolist()) for i in range(2)]
    assert classes[0] | classes[1] == set(range(1, ctx.q))
    assert not classes[0] & classes[1]


@pytest.mark.parametrize("p,m", [(4, 3), (2, 3), (9, 1), (1, 2), (3, 0), (3, -1)])
def test_invalid_parameters(p, m):
    with pytest.raises(FieldError):
        build_field(p, m)


def test_order_cap():
    with pytest.raises(FieldError):
        build_field(3, 30)


def test_rejects_non_primitive_modulus():
    with pytest.raises(FieldError):
        build_field(3, 2, modulus=[1, 0, 1])


def test_alternative_modulus_same_field_counts():
    mods = list(itertools.islice(primitive_polynomials(3, 4), 2))
    a, b = (build_field(3, 4, modulus=f) for f in mods)
    assert list(a.modulus) != list(b.modulus)
    assert np.count_nonzero(a.trace_of_square == 0) == np.count_nonzero(b.trace_of_square == 0)
