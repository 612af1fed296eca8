"""Seeded generator of random monomial algebras for the property suite.

Four shapes: random relation sets on random quivers, planted closed trails,
planted closed paths, and mixtures.  Infinite-dimensional draws are repaired
by adding the witness cycle as a relation.  Draws whose resolutions would be
too expensive for exact linear algebra are rejected.
"""
from __future__ import annotations

import random

from qalg.algebra import algebra_from_relations
from qalg.chains import TailAutomaton
from qalg.errors import InfiniteDimensional, ValidationError
from qalg.paths import Arrow, Quiver

MAX_VERTICES = 8
MAX_ARROWS = 12
MAX_DIMENSION = 80
# total size of the linear-algebra problems in a degree <= 8 resolution of every simple
MAX_RESOLUTION_COST = 4000


def _random_walk(rng, q: Quiver, length: int):
    starts = [v for v in range(q.n_vertices) if q.out_arrows[v]]
    if not starts:
        return None
    v, arrows = rng.choice(starts), []
    for _ in range(length):
        if not q.out_arrows[v]:
            return None
        a = rng.choice(q.out_arrows[v])
        arrows.append(a)
        v = q.tgt[a]
    return tuple(arrows)


def _minimalize(rels: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    rels = sorted(set(rels), key=lambda r: (len(r), r))
    out: list[tuple[int, ...]] = []
    for r in rels:
        if not any(any(r[i : i + len(s)] == s for i in range(len(r) - len(s) + 1)) for s in out):
            out.append(r)
    return out


def _random_quiver(rng, n_vertices: int, n_arrows: int) -> Quiver:
    vs = [str(i + 1) for i in range(n_vertices)]
    arrows = []
    # a spanning cycle keeps most draws connected and cyclic
    for i in range(min(n_vertices, n_arrows)):
        arrows.append(Arrow(f"a{i}", vs[i], vs[(i + 1) % n_vertices]))
    for i in range(len(arrows), n_arrows):
        arrows.append(Arrow(f"a{i}", rng.choice(vs), rng.choice(vs)))
    return Quiver(vs, arrows)


def _cycle_quiver(rng, length: int, extra: int) -> Quiver:
    n = length
    vs = [str(i + 1) for i in range(n)]
    arrows = [Arrow(f"c{i}", vs[i], vs[(i + 1) % n]) for i in range(n)]
    for i in range(extra):
        if rng.random() < 0.5:
            w = str(n + i + 1)
            vs.append(w)
            src = rng.choice(vs[:n])
            arrows.append(Arrow(f"e{i}", src, w) if rng.random() < 0.5 else Arrow(f"e{i}", w, src))
        else:
            arrows.append(Arrow(f"e{i}", rng.choice(vs[:n]), rng.choice(vs[:n])))
    return Quiver(vs, arrows)


def _planted(rng):
    kind = rng.choice(["trail", "closed"])
    A = rng.choice([1, 1, 2])
    d = rng.choice([2, 2, 3])
    m = 1 if kind == "closed" else rng.choice([2, 3, 4])
    if m * A > MAX_VERTICES:
        A = 1
    q = _cycle_quiver(rng, m * A, rng.randint(0, 3))
    cyc = tuple(range(m * A))
    rels = [tuple(cyc[(k * A + i) % (m * A)] for i in range(d * A)) for k in range(m)]
    if rng.random() < 0.5:
        extra = _random_walk(rng, q, rng.choice([2, d * A]))
        if extra:
            rels.append(extra)
    return q, rels


def _random(rng):
    n = rng.randint(1, MAX_VERTICES)
    k = rng.randint(max(1, n - 1), min(MAX_ARROWS, n + 4))
    q = _random_quiver(rng, n, k)
    L = rng.choice([2, 2, 2, 3, 4])
    mixed = rng.random() < 0.3
    rels = []
    for _ in range(rng.randint(1, 2 * k)):
        w = _random_walk(rng, q, rng.randint(2, 4) if mixed else L)
        if w:
            rels.append(w)
    return q, rels


def _repair(q: Quiver, rels):
    rels = _minimalize([r for r in rels if len(r) >= 2])
    for _ in range(40):
        try:
            return algebra_from_relations(q, [tuple(q.arrows[a].name for a in r) for r in rels])
        except InfiniteDimensional as e:
            w = e.witness.arrows
            new = w if len(w) >= 2 else w * 2
            rels = _minimalize(rels + [new])
    return None


def resolution_cost(alg, degree: int = 8) -> int:
    aut = TailAutomaton(alg)
    dims = [len(alg.paths_from(v)) for v in range(alg.quiver.n_vertices)]
    total = 0
    for v in range(alg.quiver.n_vertices):
        for layer in aut.counts(v, degree):
            total += sum(k * dims[w] for w, k in layer.items())
    return total


def random_algebra(rng: random.Random):
    """Draw until an admissible, affordable algebra appears."""
    while True:
        q, rels = _planted(rng) if rng.random() < 0.35 else _random(rng)
        if q.n_arrows > MAX_ARROWS or q.n_vertices > MAX_VERTICES:
            continue
        try:
            alg = _repair(q, rels)
        except ValidationError:
            continue
        if alg is None or alg.dimension > MAX_DIMENSION:
            continue
        if resolution_cost(alg) > MAX_RESOLUTION_COST:
            continue
        return alg


def corpus(size: int = 500, seed: int = 20240601):
    rng = random.Random(seed)
    return [random_algebra(rng) for _ in range(size)]
