import json

import pytest

from dpcolor import dpmin, verify
from dpcolor.dpmin import FormulaResult
from dpcolor.graph import complete, cycle, path, theta, unicyclic


@pytest.fixture(scope="module")
def default_run():
    return verify.run_all()


def test_run_all_passes(default_run):
    failed = [r for r in default_run if not r.passed]
    assert not failed, verify.format_table(failed)
    assert len(default_run) >= 60


def test_run_all_covers_every_check(default_run):
    names = {r.name for r in default_run}
    assert names == {
        "chordal_equality", "unicyclic", "theta", "lemma_ends", "broken_circuit",
        "path_delete", "edge_delete", "sandwich", "monte_carlo", "join_bound",
    }


def test_reports_serialise(default_run):
    for r in default_run:
        assert json.loads(r.to_json())["verdict"] == "pass"
    assert "theta" in verify.format_table(default_run)


def test_corrupted_formula_is_caught(monkeypatch):
    real = dpmin.dp_formula

    def corrupted(g, m):
        f = real(g, m)
        if "cyclepluschord" in f.provenance and f.value is not None:
            return FormulaResult(f.value + 1, f.provenance)
        return f

    monkeypatch.setattr(dpmin, "dp_formula", corrupted)
    reports = verify.run_all(mc_samples=50, join_samples=10)
    bad = {(r.name, r.params.get("a"), r.params.get("b")) for r in reports if not r.passed}
    assert ("theta", 3, 4) in bad and ("theta", 4, 4) in bad
    # the chordal theta(3,3) uses a different formula branch and stays green
    assert all(r.passed for r in reports if r.name == "unicyclic")


def test_budget_one_reports_errors():
    reports = verify.run_all(budget=1, mc_samples=20, join_samples=5)
    errors = [r for r in reports if r.verdict == "error"]
    assert errors
    assert all("BudgetExceeded" in r.detail for r in errors if r.name in ("theta", "unicyclic"))
    assert len(reports) == len(verify.run_all(mc_samples=20, join_samples=5))


@pytest.mark.parametrize(
    "report, observed",
    [
        (lambda: verify.check_chordal_equality(complete(4), 4), [0, 0, 0, 24]),
        (lambda: verify.check_chordal_equality(theta(3, 3), 3), [0, 0, 6]),
        (lambda: verify.check_chordal_equality(path(5), 3), [0, 2, 48]),
        (lambda: verify.check_unicyclic(unicyclic(4, [0]), 3), 30),
        (lambda: verify.check_unicyclic(cycle(5), 3), 30),
        (lambda: verify.check_unicyclic(cycle(6), 2), 0),
        (lambda: verify.check_theta(3, 4, 3), 15),
        (lambda: verify.check_theta(4, 4, 3), 36),
        (lambda: verify.check_theta(3, 3, 4), 48),
    ],
)
def test_check_examples(report, observed):
    r = report()
    assert r.passed and r.observed == observed


@pytest.mark.parametrize("g, r_, t_", [(cycle(4), 2, 3), (cycle(3), 2, 1), (complete(2), 1, 1)])
def test_lemma_ends_examples(g, r_, t_):
    m = 2 if g.n == 2 else 3
    rep = verify.check_lemma_ends(g, (0, 1), m)
    assert rep.passed and rep.detail == f"r={r_} t={t_}"


@pytest.mark.parametrize("g, coeffs", [(cycle(5), [1, 5, 10, 10, 4]), (theta(3, 4), [1, 6, 14]), (cycle(4), [1, 4, 6, 3])])
def test_broken_circuit_examples(g, coeffs):
    rep = verify.check_broken_circuit(g)
    assert rep.passed and rep.observed == coeffs


def test_broken_circuit_forest_errors():
    assert verify.check_broken_circuit(path(4)).verdict == "error"


@pytest.mark.parametrize("g, p, minimum", [(theta(3, 4), (0, 1, 3), 15), (theta(4, 4), (0, 1, 4), 36), (cycle(4), (0, 1, 2), 15)])
def test_path_delete_examples(g, p, minimum):
    rep = verify.check_path_delete(g, p, 3)
    assert rep.passed and rep.observed["minimum"] == minimum


def test_join_checks():
    assert verify.check_join_bound(cycle(4), 6, 100, 0).passed
    assert verify.check_join_bound(cycle(4), 7, 50, 0).observed >= 4376
    assert verify.check_join_bound(cycle(4), 5, 10, 0).verdict == "error"


def test_labels_use_battery_names(default_run):
    assert any(r.params.get("graph") == "theta:3,4" for r in default_run)
