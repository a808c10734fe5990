import itertools

import numpy as np
import pytest

from fewweight import counts
from fewweight.field import build_field
from fewweight.verify import run_verification

GRID = [(3, 3), (3, 4), (3, 5), (5, 3), (7, 3), (5, 4)]


@pytest.fixture(scope="module", params=[(3, 3), (3, 4), (5, 3), (7, 3)],
                ids=lambda pm: f"p{pm[0]}m{pm[1]}")
def ctx(request):
    return build_field(*request.param)


def test_n3_tables_against_enumeration(ctx):
    for c in itertools.product(range(ctx.p), repeat=3):
        oracle = counts.n3_bruteforce(ctx, *c)
        assert counts.n3(ctx, *c) == oracle
        assert counts.n3_from_sums(ctx, *c) == oracle


def test_n3_total(ctx):
    total = sum(counts.n3(ctx, *c) for c in itertools.product(range(ctx.p), repeat=3))
    assert total == ctx.q ** 2


def test_aleph_dispatch_all_pairs(ctx):
    if ctx.q > 81:
        pytest.skip("exhaustive pair scan kept to q <= 81 here")
    M = counts.aleph_matrix(ctx)
    for a, b in itertools.product(range(ctx.q), repeat=2):
        assert counts.aleph(ctx, a, b, method="closed") == M[a, b]


def test_aleph_dispatch_random_pairs(ctx):
    rng = np.random.default_rng(3)
    for a, b in rng.integers(0, ctx.q, size=(300, 2)):
        a, b = int(a), int(b)
        assert counts.aleph_closed(ctx, a, b) == counts.aleph_bruteforce(ctx, a, b)


def test_aleph_matrix_rows_subset(ctx):
    rows = np.array([0, 1, 5])
    assert np.array_equal(counts.aleph_matrix(ctx, rows=rows), counts.aleph_matrix(ctx)[rows])


def test_omega_on_independent_pairs(ctx):
    rng = np.random.default_rng(11)
    done = 0
    while done < 40:
        a, b = (int(v) for v in rng.integers(1, ctx.q, 2))
        if counts.aleph_case(ctx, a, b) != "independent":
            continue
        assert counts.omega(ctx, a, b) == counts.omega_bruteforce(ctx, a, b)
        done += 1


def test_aleph_case_labels():
    ctx = build_field(3, 3)
    assert counts.aleph_case(ctx, 0, 0) == "a=b=0"
    assert counts.aleph_case(ctx, 4, 0) == "b=0"
    assert counts.aleph_case(ctx, 0, 4) == "a=0"
    assert counts.aleph_case(ctx, 4, ctx.mul(4, 2)) == "a=wb"


@pytest.mark.parametrize("pm", GRID, ids=lambda pm: f"p{pm[0]}m{pm[1]}")
def test_pair_class_census(pm):
    census = counts.pair_class_census(build_field(*pm))
    assert census.match
    assert census.total == (pm[0] ** pm[1]) ** 2


def test_census_p3_m4_empty_class():
    c = counts.pair_class_census(build_field(3, 4))
    assert c.counted["N1"] == 0 and c.predicted["N1"] == 0
    assert c.counted["N7"] == 1


def test_empty_omega_class_reported_vacuous():
    reps = run_verification(3, 4, lemmas=["17"])
    by_case = {r.case: r for r in reps}
    vac = by_case["even m, α=β=γ=0"]
    assert vac.status == "vacuous"
    assert "-3" in vac.note
    assert sum(r.status == "match" for r in reps) == 4
    assert not any(r.status == "mismatch" for r in reps)
