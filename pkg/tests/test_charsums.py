import itertools

import numpy as np
import pytest

from fewweight import charsums as cs
from fewweight.field import build_field
from fewweight.scalar import AlgebraicScalar
from fewweight.verify import values_agree

FIELDS = [(3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (5, 3), (7, 2), (11, 2)]


@pytest.fixture(scope="module", params=FIELDS, ids=lambda pm: f"p{pm[0]}m{pm[1]}")
def ctx(request):
    return build_field(*request.param)


def test_gauss_sum_known_values():
    assert cs.gauss_sum_exact(3, 1) == AlgebraicScalar.imag_unit(3) * AlgebraicScalar.sqrt_p(3)
    assert cs.gauss_sum_exact(3, 4) == -9
    assert cs.gauss_sum_exact(5, 2) == -5
    assert cs.gauss_sum_exact(5, 1) == AlgebraicScalar.sqrt_p(5)


def test_gauss_sum_matches_bruteforce(ctx):
    G = cs.gauss_sum_exact(ctx.p, ctx.m)
    assert values_agree(G, cs.gauss_sum_bruteforce(ctx))
    assert G * G.conjugate() == ctx.q


def test_quadratic_sums(ctx):
    rng = np.random.default_rng(1)
    for a2 in range(1, min(ctx.q, 40)):
        a1, a0 = (int(v) for v in rng.integers(0, ctx.q, 2))
        assert cs.quad_sum(ctx, a2, a1, a0).match


def test_n_c(ctx):
    for c in range(ctx.p):
        assert cs.n_c(ctx, c) == cs.n_c_bruteforce(ctx, c)
    assert sum(cs.n_c(ctx, c) for c in range(ctx.p)) == ctx.q


def test_k_xi_and_n_xi(ctx):
    for xi in range(1, min(ctx.q, 60)):
        assert values_agree(cs.k_xi(ctx, xi), cs.k_xi_bruteforce(ctx, xi))
        assert cs.n_xi(ctx, xi) == cs.n_xi_bruteforce(ctx, xi)


def test_n2(ctx):
    for c1, c2 in itertools.product(range(ctx.p), repeat=2):
        assert cs.n2(ctx, c1, c2) == cs.n2_bruteforce(ctx, c1, c2)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_l_j(p):
    for j in (1, -1):
        assert cs.l_j(p, j) == cs.l_j_bruteforce(p, j)


def test_psi1_psi2_psi3(ctx):
    for c in range(ctx.p):
        assert values_agree(cs.psi1(ctx, c), cs.psi1_bruteforce(ctx, c))
    for c1, c3 in itertools.product(range(ctx.p), repeat=2):
        assert values_agree(cs.psi2(ctx, c1, c3), cs.psi2_bruteforce(ctx, c1, c3))
        assert values_agree(cs.psi3(ctx, c1, c3), cs.psi3_bruteforce(ctx, c1, c3))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_prime_field_triple_sums(p):
    for c in itertools.product(range(1, p), repeat=3):
        assert values_agree(cs.delta(p, *c), cs.delta_bruteforce(p, *c))
        assert values_agree(cs.rho(p, *c), cs.rho_bruteforce(p, *c))
        assert values_agree(cs.sigma(p, *c), cs.sigma_bruteforce(p, *c))


def test_triple_sums_reject_zero():
    with pytest.raises(ValueError):
        cs.delta(5, 0, 1, 1)


def test_psi4(ctx):
    for c in itertools.product(range(ctx.p), repeat=3):
        assert values_agree(cs.psi4(ctx, *c), cs.psi4_bruteforce(ctx, *c)), c


@pytest.mark.parametrize("pm", [(3, 1), (3, 2), (3, 3), (5, 1)])
def test_psi4_against_naive_five_fold_sum(pm):
    ctx = build_field(*pm)
    for c in itertools.product(range(ctx.p), repeat=3):
        assert values_agree(cs.psi4(ctx, *c), cs.psi4_naive(ctx, *c))


def test_psi4_naive_refuses_large_fields():
    with pytest.raises(ValueError):
        cs.psi4_naive(build_field(7, 3), 1, 1, 1)


def test_omega4_random_independent_pairs(ctx):
    if ctx.m < 2:
        pytest.skip("no independent pairs over F_p")
    rng = np.random.default_rng(7)
    seen = 0
    while seen < 25:
        a, b = (int(v) for v in rng.integers(1, ctx.q, 2))
        if not cs.is_independent_pair(ctx, a, b):
            continue
        assert values_agree(cs.omega4(ctx, a, b), cs.omega4_bruteforce(ctx, a, b))
        seen += 1


def test_omega4_rejects_dependent_pair():
    ctx = build_field(3, 3)
    with pytest.raises(ValueError):
        cs.omega4(ctx, 5, ctx.mul(5, 2))
