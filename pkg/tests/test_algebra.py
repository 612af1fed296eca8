import itertools
from fractions import Fraction

import pytest

from qalg.algebra import ZERO, algebra_from_relations, center, element_product, is_central, multiply
from qalg.errors import EmptyRelations, InfiniteDimensional, NotMinimal, ValidationError
from qalg.paths import Arrow, Quiver

LOOP = Quiver(["v"], [Arrow("a", "v", "v")])
PATH3 = Quiver(["1", "2", "3", "4"], [Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "3", "4")])


def _enumerate_basis(alg):
    # independent oracle: extend paths arrow by arrow, dropping any containing a relation
    q = alg.quiver
    rels = [r.arrows for r in alg.rho]
    out, frontier = set(), [(a,) for a in range(q.n_arrows)]
    while frontier:
        nxt = []
        for p in frontier:
            if any(p[i : i + len(r)] == r for r in rels for i in range(len(p) - len(r) + 1)):
                continue
            out.add(p)
            nxt += [p + (b,) for b in q.out_arrows[q.tgt[p[-1]]]]
        frontier = nxt
    return out


@pytest.mark.parametrize("name", ["example_1", "example_2", "example_3", "not_gorenstein", "radical_square_zero"])
def test_basis_matches_enumeration(fixture_algebra, name):
    alg = fixture_algebra(name)
    assert alg.nonzero == _enumerate_basis(alg)
    assert alg.dimension == alg.quiver.n_vertices + len(alg.nonzero)


def test_example_1_projective_at_1(fixture_algebra):
    alg = fixture_algebra("example_1")
    names = [" ".join(alg.quiver.arrows[a].name for a in p) for p in alg.paths_from(alg.vertex("1"))]
    assert names == ["", "alpha", "alpha eta"]


def test_validation_errors():
    with pytest.raises(NotMinimal):
        algebra_from_relations(PATH3, [("a", "b"), ("a", "b", "c")])
    with pytest.raises(InfiniteDimensional) as info:
        algebra_from_relations(LOOP, [])
    assert str(info.value.witness) == "a"
    with pytest.raises(EmptyRelations):
        algebra_from_relations(PATH3, [])
    with pytest.raises(ValidationError):
        algebra_from_relations(PATH3, [("a",)])


def test_disconnected_quiver_warns():
    q = Quiver(["1", "2", "3"], [Arrow("a", "1", "1"), Arrow("b", "2", "3")])
    alg = algebra_from_relations(q, [("a", "a")])
    assert alg.warnings and "disconnected" in alg.warnings[0]


def test_multiply(fixture_algebra):
    alg = fixture_algebra("example_1")
    q = alg.quiver
    assert multiply(alg, q.path("alpha"), q.path("beta")) is ZERO
    assert multiply(alg, q.trivial("1"), q.path("alpha")) == q.path("alpha")
    assert multiply(alg, q.path("alpha"), q.path("gamma")) is ZERO
    assert multiply(alg, q.path("alpha"), q.path("eta")) == q.path("alpha eta")


@pytest.mark.parametrize("name", ["example_1", "example_3", "not_gorenstein"])
def test_multiplication_associative_with_identity(fixture_algebra, name):
    alg = fixture_algebra(name)
    basis = alg.basis
    one = {alg.quiver.trivial(v): Fraction(1) for v in alg.quiver.vertices}
    for x in basis:
        e = {x: Fraction(1)}
        assert element_product(alg, one, e) == e == element_product(alg, e, one)
    for x, y, z in itertools.product(basis, repeat=3):
        xy = multiply(alg, x, y)
        yz = multiply(alg, y, z)
        left = ZERO if xy is ZERO else multiply(alg, xy, z)
        right = ZERO if yz is ZERO else multiply(alg, x, yz)
        assert left == right


def test_basis_closed_under_subpaths(fixture_algebra):
    alg = fixture_algebra("example_2")
    for p in alg.nonzero:
        for i in range(len(p)):
            for j in range(i + 1, len(p) + 1):
                assert p[i:j] in alg.nonzero


def test_center_of_example_2_is_k(fixture_algebra):
    assert center(fixture_algebra("example_2")).k_dimension == 1


def test_center_of_example_3(fixture_algebra):
    alg = fixture_algebra("example_3")
    z = center(alg)
    assert z.k_dimension == 2
    gen = z.generator_elements[1]
    q = alg.quiver
    want = {q.path(p): Fraction(1) for p in
            ["alpha beta gamma delta", "beta gamma delta alpha", "gamma delta alpha beta", "delta alpha beta gamma"]}
    assert gen == want
    assert element_product(alg, gen, gen) == {}
    assert z.nilpotency[1] == 2


def test_center_of_loop_algebra():
    alg = algebra_from_relations(LOOP, [("a", "a")])
    z = center(alg)
    assert z.k_dimension == 2
    assert z.generator_elements[1] == {LOOP.path("a"): 1}


@pytest.mark.parametrize("name", ["example_1", "example_2", "example_3", "not_gorenstein", "radical_square_zero"])
def test_center_elements_are_central(fixture_algebra, name):
    alg = fixture_algebra(name)
    z = center(alg)
    assert z.k_dimension >= len(alg.quiver.components())
    assert all(is_central(alg, g) for g in z.generator_elements)


def test_opposite_is_involutive(fixture_algebra):
    alg = fixture_algebra("example_3")
    back = alg.opposite().opposite()
    assert back.quiver == alg.quiver
    assert {r.arrows for r in back.rho} == {r.arrows for r in alg.rho}
