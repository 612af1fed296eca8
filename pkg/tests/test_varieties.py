import pytest

from qalg.chains import classify_stacked, proj_dim_simple
from qalg.hochschild import find_generators
from qalg.varieties import (PropertyOutcome, Status, check_all_nontrivial_implies_A1, classify_simples,
                            fg_consequence_report)


def _classify(alg):
    return {r.vertex: r for r in classify_simples(alg, find_generators(alg))}


def _status(reports):
    return {v: str(r.status) for v, r in reports.items()}


def test_example_1(fixture_algebra):
    s = _status(_classify(fixture_algebra("example_1")))
    assert s == {"1": "Nontrivial", "2": "Nontrivial", "3": "Nontrivial", "4": "Nontrivial",
                 "5": "Trivial", "6": "Trivial"}


def test_example_2_vertex_1_has_two_witnesses(fixture_algebra):
    reps = _classify(fixture_algebra("example_2"))
    assert all(r.status is Status.NONTRIVIAL for r in reps.values())
    assert reps["1"].witnesses == [1, 2] and reps["1"].lines_in_variety == 2
    assert reps["2"].witnesses == [1] and reps["4"].witnesses == [2]


def test_example_3(fixture_algebra):
    reps = _classify(fixture_algebra("example_3"))
    assert _status(reps) == {"1": "Nontrivial", "2": "Trivial", "3": "Nontrivial", "4": "Trivial"}
    assert reps["2"].trivial_point_note is not None and reps["1"].trivial_point_note is None


@pytest.mark.parametrize("name,outcome", [
    ("example_2", PropertyOutcome.PASS), ("example_3", PropertyOutcome.VACUOUSLY_TRUE),
    ("radical_square_zero", PropertyOutcome.VACUOUSLY_TRUE), ("not_gorenstein", PropertyOutcome.PASS),
])
def test_all_nontrivial_implies_a1(fixture_algebra, name, outcome):
    alg = fixture_algebra(name)
    v = classify_stacked(alg)
    reports = classify_simples(alg, find_generators(alg, v))
    assert check_all_nontrivial_implies_A1(alg, v, reports) is outcome


def _fg(alg):
    reports = classify_simples(alg, find_generators(alg))
    pds = {v: proj_dim_simple(alg, v) for v in alg.quiver.vertices}
    return {f.vertex: f.consistent for f in fg_consequence_report(reports, pds)}


def test_fg_consequences(fixture_algebra):
    assert all(_fg(fixture_algebra("example_3")).values())
    assert all(_fg(fixture_algebra("example_2")).values())
    assert _fg(fixture_algebra("radical_square_zero")) == {"1": False, "2": False}


def test_classification_ignores_generator_order(fixture_algebra):
    alg = fixture_algebra("example_2")
    pres = find_generators(alg)
    before = [(r.vertex, r.status, sorted(r.witnesses)) for r in classify_simples(alg, pres)]
    pres.generators.reverse()
    after = [(r.vertex, r.status, sorted(r.witnesses)) for r in classify_simples(alg, pres)]
    assert before == after


def test_corpus_trivial_ring_means_all_trivial(random_corpus):
    for alg in random_corpus:
        v = classify_stacked(alg)
        if v.is_stacked:
            pres = find_generators(alg, v)
            if pres.r == 0:
                assert all(r.status is Status.TRIVIAL for r in classify_simples(alg, pres))
