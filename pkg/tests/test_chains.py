from collections import Counter

import pytest

from qalg.chains import TailAutomaton, chains, classify_stacked, proj_dim_simple, resolution_shape, stacked_length
from qalg.outcomes import Finite, Infinite


def _names(cs):
    return {str(c) for c in cs}


def test_example_2_r6_is_the_six_squares(fixture_algebra):
    alg = fixture_algebra("example_2")
    want = {"alpha beta gamma alpha beta gamma", "beta gamma alpha beta gamma alpha", "gamma alpha beta gamma alpha beta",
            "zeta eta theta zeta eta theta", "eta theta zeta eta theta zeta", "theta zeta eta theta zeta eta"}
    assert _names(chains(alg, 6)[6]) == want


def test_example_3_low_degrees(fixture_algebra):
    alg = fixture_algebra("example_3")
    R = chains(alg, 4)
    assert _names(R[2]) == {"alpha beta gamma delta alpha beta", "gamma delta alpha beta gamma delta"}
    assert _names(R[3]) == {"alpha beta gamma delta alpha beta gamma delta", "gamma delta alpha beta gamma delta alpha beta"}
    assert _names(R[4]) == {" ".join(["alpha beta gamma delta"] * 3), " ".join(["gamma delta alpha beta"] * 3)}


@pytest.mark.parametrize("name", ["example_1", "example_2", "example_3", "not_gorenstein", "radical_square_zero", "nonstacked"])
def test_chain_structure(fixture_algebra, name):
    alg = fixture_algebra(name)
    R = chains(alg, 8)
    assert {c.path for c in R[2]} == set(alg.rho)
    assert len(R[0]) == alg.quiver.n_vertices and len(R[1]) == alg.quiver.n_arrows
    for n in range(3, 9):
        for c in R[n]:
            ladder = c.ladder()
            assert [x.degree for x in ladder] == list(range(1, n + 1))
            for a, b in zip(ladder, ladder[1:]):
                assert len(a.path) < len(b.path) and b.path.arrows[: len(a.path)] == a.path.arrows
            s = c.tail.arrows
            joined = c.parent.tail.arrows + s
            r = c.closing_relation.arrows
            assert joined[-len(r):] == r and len(s) < len(r)


@pytest.mark.parametrize("name", ["example_1", "example_2", "example_3", "not_gorenstein", "nonstacked"])
def test_automaton_counts_match_recursion(fixture_algebra, name):
    alg = fixture_algebra(name)
    aut = TailAutomaton(alg)
    R = chains(alg, 12)
    for v in range(alg.quiver.n_vertices):
        counts = aut.counts(v, 12)
        for n in range(1, 13):
            direct = Counter(c.t for c in R[n] if c.o == v)
            assert +counts[n] == direct


def test_example_1_automaton_is_a_four_cycle(fixture_algebra):
    aut = TailAutomaton(fixture_algebra("example_1"))
    cyc = aut.find_cycle(aut.initial)
    assert len(cyc) == 4 and all(len(t) == 1 for t in cyc)


@pytest.mark.parametrize("name,D,A,d", [
    ("example_1", 2, 1, 2), ("example_2", 2, 1, 2), ("example_3", 6, 2, 3),
    ("not_gorenstein", 2, 1, 2), ("radical_square_zero", 2, 1, 2),
])
def test_stacked_verdicts(fixture_algebra, name, D, A, d):
    v = classify_stacked(fixture_algebra(name))
    assert v.is_stacked and (v.D, v.A, v.d) == (D, A, d)


def test_nonstacked_counterexample(fixture_algebra):
    v = classify_stacked(fixture_algebra("nonstacked"))
    assert not v.is_stacked
    assert v.counterexample.degree == 2


def test_stacked_length_formula():
    assert [stacked_length(n, 6, 2) for n in range(1, 6)] == [2, 6, 8, 12, 14]


def test_resolution_shape_example_1(fixture_algebra):
    alg = fixture_algebra("example_1")
    shape5 = resolution_shape(alg, "5", 6)
    assert shape5[0] == Counter({"5": 1}) and all(not s for s in shape5[1:])
    shape1 = resolution_shape(alg, "1", 8)
    assert [list(s.elements()) for s in shape1] == [["1"], ["2"], ["3"], ["4"], ["1"], ["2"], ["3"], ["4"], ["1"]]


def test_proj_dim_simple(fixture_algebra):
    e1 = fixture_algebra("example_1")
    assert proj_dim_simple(e1, "6") == Finite(1)
    assert proj_dim_simple(e1, "5") == Finite(0)
    assert isinstance(proj_dim_simple(e1, "1"), Infinite)
    for v in "12345":
        assert isinstance(proj_dim_simple(fixture_algebra("example_2"), v), Infinite)
    for v in "12":
        assert isinstance(proj_dim_simple(fixture_algebra("radical_square_zero"), v), Infinite)
    e3 = fixture_algebra("example_3")
    assert [str(proj_dim_simple(e3, v)) for v in "1234"] == ["infinite", "1", "infinite", "1"]
