import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclic3.arith import admissible_primes, build_context
from cyclic3.asymptotics import (
    TABLE_COLUMNS,
    NotOnCircle,
    bound_suite,
    circumcenter,
    limit_triangle,
    pairwise_bound,
    scalenity,
    table,
    third_branch_ratios,
)
from cyclic3.solver import canonical_solution, h_values, branch_parameters

W3 = np.exp(2j * np.pi / 3)


def test_equilateral_scalenity_zero():
    assert scalenity([1, W3, W3**2]) == pytest.approx(0, abs=1e-15)


def test_scalenity_p7():
    ctx = build_context(7)
    assert scalenity(canonical_solution(ctx, 1)) == pytest.approx(1.1235, abs=1e-3)
    assert scalenity(canonical_solution(ctx, 2)) == pytest.approx(0.7129, abs=1e-3)


@given(st.sampled_from(admissible_primes(7, 2000)))
def test_unimodular_fast_path_matches_h_form(p):
    ctx = build_context(p)
    for i in (1, 2):
        c = canonical_solution(ctx, i)
        h = np.array(h_values(branch_parameters(ctx, i), ctx.theta))
        # h_j is defined up to a cyclic relabelling, which max ignores
        assert scalenity(c) == pytest.approx(0.5 * np.max(np.abs(1 + h)), abs=1e-10)
        assert scalenity(c) > 0


@given(st.complex_numbers(max_magnitude=10), st.floats(0.1, 5),
       st.lists(st.floats(0, 2 * math.pi), min_size=3, max_size=3, unique=True))
def test_general_circle_matches_unimodular_formula(center, radius, phis):
    pts = np.sort(np.array(phis))
    if min(np.diff(np.r_[pts, pts[0] + 2 * math.pi])) < 1e-2:
        return
    on_unit = np.exp(1j * pts)
    moved = center + radius * on_unit
    assert abs(circumcenter(moved) - center) < 1e-7 * max(1, abs(center)) / min(1, radius)
    assert scalenity(moved) == pytest.approx(scalenity(on_unit), abs=1e-6)


def test_collinear_rejected():
    with pytest.raises(NotOnCircle):
        scalenity([0, 1 + 1j, 2 + 2j])


def test_limit_triangle_examples():
    assert limit_triangle(0)[0] == pytest.approx(1)
    assert limit_triangle(math.pi / 6)[0] == pytest.approx(np.exp(1j * math.pi / 3))
    th = build_context(1003273).theta
    assert np.angle(-limit_triangle(th)[0]) == pytest.approx(2 * th - math.pi, abs=1e-12)
    assert 2 * th - math.pi == pytest.approx(-2.43251, abs=1e-5)


@given(st.floats(0, math.pi / 3))
def test_limit_triangle_equilateral(theta):
    d = limit_triangle(theta)
    assert np.allclose(np.abs(d), 1)
    assert scalenity(d) <= 1e-12


@given(st.sampled_from(admissible_primes(7, 10_000)))
def test_bounds_hold(p):
    rep = bound_suite(build_context(p))
    assert rep.ok, rep.checks()
    assert rep.scal1 > 0 and rep.scal2 > 0


def test_bound_report_names_failures():
    rep = bound_suite(build_context(7))
    names = set(rep.checks())
    assert names == {"scal_c1", "scal_c2", "c1_plus_d", "c2_minus_d", "c1_plus_c2"}
    assert rep.failures() == []


@pytest.mark.parametrize("p,scal", [(1003273, 0.002810), (100205473, 0.000281)])
def test_large_p_scalenity(p, scal):
    rep = bound_suite(build_context(p))
    assert rep.scal1 == pytest.approx(scal, abs=1e-5)
    assert rep.ok


def test_pairwise_bound_close_theta():
    primes = admissible_primes(7, 6000)
    ctxs = [build_context(p) for p in primes]
    ctxs.sort(key=lambda c: c.theta)
    pairs = [(a, b) for a, b in zip(ctxs, ctxs[1:]) if abs(a.theta - b.theta) <= 1e-3]
    assert len(pairs) > 50
    for a, b in pairs:
        for branch in (1, 2):
            chk = pairwise_bound(a, b, branch)
            assert chk.ok
            if branch == 1:
                assert chk.distance <= 2e-3 + 3 / math.sqrt(a.p) + 3 / math.sqrt(b.p)


def test_pairwise_bound_random_pairs():
    primes = admissible_primes(500, 3000)
    rng = np.random.default_rng(3)
    for a, b in rng.choice(primes, size=(40, 2)):
        chk = pairwise_bound(build_context(int(a)), build_context(int(b)))
        assert chk.ok


def test_third_branch_examples():
    rep = third_branch_ratios(build_context(7))
    assert np.allclose(rep.ratios, (-0.4619, 3.5577, 1.0352), atol=1e-3)
    rep = third_branch_ratios(build_context(181))
    assert np.allclose(rep.ratios, (-0.5266, 4.3326, 0.6872), atol=1e-3)
    rep = third_branch_ratios(build_context(61))
    assert abs(rep.ratios[1]) == pytest.approx(6.52, abs=1e-2)


@pytest.mark.parametrize("p", [250004500027, 250018500349, 67521601729])
def test_third_branch_reciprocal_limit(p):
    """sqrt(p)/c_j approaches -2 cos(theta - 2 pi j/3) for large p."""
    rep = third_branch_ratios(build_context(p))
    for r, lim in zip(rep.ratios, rep.limit_reciprocals):
        assert abs(1 / r - lim) < 1e-4


def test_third_branch_min_ratio_large_p():
    for p in admissible_primes(5000, 6000):
        assert third_branch_ratios(build_context(p)).margin > -0.05


def test_table_columns():
    for which in range(1, 6):
        rows = table(which, [7] if which < 4 else [1003273])
        assert tuple(rows[0]) == TABLE_COLUMNS[which]
    with pytest.raises(ValueError):
        table(6, [7])


def test_table1_row_p19():
    row = table(1, [19])[0]
    assert (row["A"], row["B"]) == (7, 1)
    assert round(row["theta"], 4) == 0.2129


def test_table2_row_p97():
    row = table(2, [97])[0]
    for key, ref in zip(("c0", "c1", "c2"),
                        (0.9887 + 0.1498j, -0.4791 + 0.8778j, -0.2383 - 0.9712j)):
        assert abs(row[key] - ref) < 1.5e-4


def test_table5_row_gauss_pair():
    row = table(5, [250004500027])[0]
    assert (row["A"], row["B"]) == (1000009, 1)
    assert round(row["theta"], 6) == 0.000002


def test_table_rows_are_deterministic():
    a = table(3, [7, 13, 19])
    b = table(3, [7, 13, 19])
    assert a == b


def test_first_and_second_approximately_antipodal():
    for p in itertools.islice(admissible_primes(9000, 10_000), 10):
        ctx = build_context(p)
        c1 = canonical_solution(ctx, 1).as_array()
        c2 = canonical_solution(ctx, 2).as_array()
        assert np.max(np.abs(c1 + c2)) <= 36 / (5 * math.sqrt(p))
