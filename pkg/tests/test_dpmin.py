import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dpcolor.chrompoly import BudgetExceeded, chromatic_value
from dpcolor.cover import Cover, brute_force_count, count_colorings, path_case_cover, twisted_edge_cover
from dpcolor.dpmin import (
    dp_exact,
    dp_formula,
    dp_value,
    edge_delete_extremal_cover,
    edge_delete_extremal_value,
    greedy_lower_bound,
    join_lower_bound,
    monte_carlo_bound,
    path_delete_quantities,
    required_configurations,
    strict_gap_witness,
    theta_shape,
)
from dpcolor.graph import Graph, GraphError, complete, cycle, join_with_complete, path, theta, tree_from_parents, unicyclic

from conftest import graphs


def ungauged_minimum(g, m):
    """Minimum over every cover, with no gauge fixing at all."""
    perms = list(itertools.permutations(range(m)))
    return min(count_colorings(Cover(g, m, choice)) for choice in itertools.product(perms, repeat=g.num_edges))


@pytest.mark.parametrize(
    "g, m",
    [(cycle(3), 3), (cycle(4), 3), (cycle(5), 3), (theta(3, 3), 3), (path(4), 3), (complete(4), 2)],
)
def test_gauge_fixed_equals_full_enumeration(g, m):
    assert dp_exact(g, m).minimum == ungauged_minimum(g, m)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=6, connected=True))
def test_full_enumeration_at_m2(g):
    if g.num_edges > 10:
        return
    assert dp_exact(g, 2).minimum == ungauged_minimum(g, 2)


@pytest.mark.parametrize(
    "g, m, expected",
    [(cycle(4), 3, 15), (cycle(3), 3, 6), (theta(3, 4), 3, 15), (theta(4, 4), 3, 36), (cycle(6), 3, 63), (cycle(5), 3, 30)],
)
def test_dp_exact_examples(g, m, expected):
    res = dp_exact(g, m)
    assert res.minimum == expected
    assert count_colorings(res.witness) == expected == brute_force_count(res.witness)
    assert res.configurations_enumerated == required_configurations(g, m)
    assert res.exhaustive


def test_theta_needs_36_configurations():
    assert required_configurations(theta(3, 4), 3) == 36
    assert dp_exact(theta(4, 4), 3).configurations_enumerated == 36


def test_budget_error_reports_required_count():
    with pytest.raises(BudgetExceeded) as info:
        dp_exact(complete(5), 3, budget=10)
    assert info.value.required == 46656
    assert "46656" in str(info.value)


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        dp_exact(Graph(4, [(0, 1), (2, 3)]), 2)


def test_tree_needs_no_search():
    g = tree_from_parents([0, 0, 1, 1])
    res = dp_exact(g, 3)
    assert res.minimum == chromatic_value(g, 3) and res.configurations_enumerated == 1


@pytest.mark.parametrize("workers", [2, 3, 8])
def test_workers_do_not_change_result(workers):
    g = theta(3, 4)
    assert dp_exact(g, 4, workers=workers) == dp_exact(g, 4)


def test_backtracking_path_agrees(monkeypatch):
    import dpcolor.dpmin as mod

    g = theta(3, 5)
    vec = dp_exact(g, 3)
    monkeypatch.setattr(mod, "_VECTOR_BYTES", 0)
    assert dp_exact(g, 3) == vec


# -- formulas -----------------------------------------------------------------

FORMULA_CASES = [
    (cycle(n), m) for n in range(3, 8) for m in (2, 3, 4)
] + [
    (unicyclic(4, [0]), 3),
    (unicyclic(4, [0, 4]), 3),
    (unicyclic(5, [0]), 3),
    (unicyclic(6, [0, 0, 1]), 3),
] + [
    (theta(a, b), m) for a, b in [(3, 3), (3, 4), (4, 4), (3, 5), (4, 5), (5, 5), (3, 6), (4, 6)] for m in (3, 4)
    if (a + b - 2) <= 8 and (m < 4 or a + b <= 9)
] + [
    (complete(4), 3), (complete(4), 5), (path(5), 3), (join_with_complete(path(3), 1), 4),
]


@pytest.mark.parametrize("g, m", FORMULA_CASES)
def test_formula_matches_exhaustive(g, m):
    f = dp_formula(g, m)
    assert f, f.provenance
    assert f.value == dp_exact(g, m).minimum


@pytest.mark.parametrize(
    "g, m, expected",
    [(unicyclic(4, [0]), 3, 30), (theta(4, 4), 3, 36), (complete(4), 5, 120), (cycle(6), 2, 0)],
)
def test_formula_examples(g, m, expected):
    assert dp_formula(g, m).value == expected


def test_formula_provenance_labels():
    assert dp_formula(complete(4), 4).provenance.startswith("theorem:chordal")
    assert "onecycle" in dp_formula(cycle(4), 3).provenance
    assert "cyclepluschord" in dp_formula(theta(3, 4), 3).provenance


def test_formula_absent():
    f = dp_formula(join_with_complete(cycle(4), 1), 4)
    assert not f and f.value is None
    low = dp_formula(theta(4, 4), 2)
    assert low.value is None and "needs m" in low.provenance


def test_theta_shape():
    assert theta_shape(theta(5, 3)) == (3, 5)
    assert theta_shape(cycle(5)) is None
    assert theta_shape(complete(4)) is None


def test_dp_value_prefers_both_and_falls_back():
    assert dp_value(cycle(4), 3)[:2] == (15, "both")
    value, prov, exact = dp_value(complete(5), 5, budget=10)
    assert value == 120 and exact is None and "chordal" in prov
    with pytest.raises(BudgetExceeded):
        dp_value(join_with_complete(cycle(5), 1), 5, budget=10)


# -- bounds -------------------------------------------------------------------


def test_greedy_examples():
    assert greedy_lower_bound(cycle(4), 3) == 12
    assert greedy_lower_bound(complete(4), 5) == 120
    g = tree_from_parents([0, 1, 1, 2])
    assert greedy_lower_bound(g, 4) == chromatic_value(g, 4)
    with pytest.raises(ValueError):
        greedy_lower_bound(cycle(4), 2)


def test_monte_carlo_c4():
    rep = monte_carlo_bound(cycle(4), 3, 10_000, 7)
    assert rep.expected_mean == 16
    assert rep.within_band and rep.min_sampled >= 15
    assert rep.greedy_lower == 12 and rep.chromatic_upper == 18


def test_monte_carlo_k2():
    rep = monte_carlo_bound(complete(2), 2, 50, 3)
    assert set(rep.counts) == {2} and rep.monte_carlo_mean == 2 == rep.expected_mean


def test_monte_carlo_reproducible():
    a = monte_carlo_bound(theta(3, 4), 3, 200, 5)
    b = monte_carlo_bound(theta(3, 4), 3, 200, 5)
    assert a == b


# -- edge and path deletion ---------------------------------------------------


@pytest.mark.parametrize("n, m, expected", [(3, 3, 6), (4, 3, 15), (5, 2, 0), (5, 3, 30), (6, 3, 63)])
def test_edge_delete_values(n, m, expected):
    g = cycle(n)
    assert edge_delete_extremal_value(g, m, (0, 1)) == expected
    assert count_colorings(edge_delete_extremal_cover(g, m, (0, 1))) == expected


@pytest.mark.parametrize("g, m", [(cycle(4), 3), (theta(3, 4), 3), (cycle(6), 4), (theta(4, 4), 3)])
def test_strict_gap_witness(g, m):
    e, value = strict_gap_witness(g, m)
    p = chromatic_value(g, m)
    assert value < p
    assert count_colorings(twisted_edge_cover(g, m, e)) == value
    assert dp_exact(g, m).minimum <= value


def test_strict_gap_examples():
    assert strict_gap_witness(cycle(4), 3) == ((0, 1), 15)
    e, _ = strict_gap_witness(theta(3, 4), 3)
    assert e not in [(0, 2), (1, 2)]  # not on the triangle
    assert strict_gap_witness(cycle(5), 3) is None


@pytest.mark.parametrize("n", [4, 6, 8])
@pytest.mark.parametrize("m", range(3, 9))
def test_even_cycle_gap_finite(n, m):
    # finite instances of the strict gap for even girth
    e, value = strict_gap_witness(cycle(n), m)
    assert value == (m - 1) ** n - 1 < chromatic_value(cycle(n), m)


def test_path_delete_theta34():
    q = path_delete_quantities(theta(3, 4), 3, 0, 1, 3)
    assert q.A == tuple(map(Fraction, (30, 33, 27, 21, 24)))
    assert q.max_case == 2 and q.bound == 15
    for i in range(1, 6):
        assert count_colorings(path_case_cover(theta(3, 4), 3, 0, 1, 3, i)) == q.predicted[i - 1]


def test_path_delete_tree():
    g = path(4)
    q = path_delete_quantities(g, 3, 0, 1, 2)
    assert q.A[0] == q.p_g0 - q.p_g
    assert q.predicted[0] == count_colorings(path_case_cover(g, 3, 0, 1, 2, 1)) == chromatic_value(g, 3)


def test_path_delete_errors():
    with pytest.raises(ValueError):
        path_delete_quantities(cycle(4), 2, 0, 1, 2)
    with pytest.raises(GraphError):
        path_delete_quantities(cycle(3), 3, 0, 1, 2)


# -- joins ----------------------------------------------------------------------


def test_join_examples():
    assert join_lower_bound(cycle(4), 1, 6) == 1532
    assert join_lower_bound(cycle(4), 1, 7) == 4376
    with pytest.raises(ValueError, match="m >= col"):
        join_lower_bound(cycle(4), 1, 5)
    with pytest.raises(ValueError, match="col"):
        join_lower_bound(path(4), 1, 8)


def test_join_bound_holds_exhaustively_small():
    # K_1 v C_4 at m = 6 is too big to sweep; the bound must still sit below P
    b = join_lower_bound(cycle(4), 1, 6)
    assert b <= chromatic_value(join_with_complete(cycle(4), 1), 6)


def test_join_p2():
    b = join_lower_bound(cycle(4), 2, 8)
    assert 0 < b <= chromatic_value(join_with_complete(cycle(4), 2), 8)
