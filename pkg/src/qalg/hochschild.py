"""Generators of Hochschild cohomology modulo nilpotence for stacked monomial algebras.

HH*/N is K[x_1..x_r]/(x_a x_b, a != b): one degree-2 generator per
qualifying closed path C (C^d a relation overlapping no other relation), and
one degree-2*mu generator per qualifying closed A-trail, mu = m/gcd(d, m).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import networkx as nx

from .algebra import MonomialAlgebra
from .chains import Chain, StackedVerdict, chains, classify_stacked
from .errors import DistinctVertexViolation, MissingChain, NotStacked, PathError, PreconditionError
from .paths import Path, compose, have_overlap, is_primitive, rotations, vertex_not_internal

__all__ = [
    "ClosedPathGenerator",
    "TrailGenerator",
    "HHPresentation",
    "rho_T",
    "find_generators",
    "cocycle_support",
    "segment_overlaps_relation",
]


@dataclass
class ClosedPathGenerator:
    index: int
    C: Path
    power_relation: Path
    degree: int = 2
    not_internal: bool = True
    kind: str = field(default="closed-path", init=False)

    @property
    def v(self) -> str:
        return self.C.origin

    @property
    def base_vertices(self) -> list[str]:
        return [self.C.origin]

    def support_pattern(self, d: int) -> list[tuple[Path, str]]:
        return [(self.power_relation, self.C.origin)]

    def __str__(self):
        return f"x{self.index}: closed path {self.C} at {self.v}, degree 2"


@dataclass
class TrailGenerator:
    index: int
    segments: tuple[Path, ...]
    rho_T: tuple[Path, ...]
    d: int
    kind: str = field(default="trail", init=False)

    @property
    def m(self) -> int:
        return len(self.segments)

    @property
    def mu(self) -> int:
        return self.m // gcd(self.d, self.m)

    @property
    def degree(self) -> int:
        return 2 * self.mu

    @property
    def rotations(self) -> list[Path]:
        segs = self.segments
        out = []
        for k in range(self.m):
            p = segs[k]
            for i in range(1, self.m):
                p = compose(p, segs[(k + i) % self.m])
            out.append(p)
        return out

    @property
    def base_vertices(self) -> list[str]:
        return [s.origin for s in self.segments]

    def support_pattern(self, d: int) -> list[tuple[Path, str]]:
        e = d // gcd(d, self.m)
        return [(T ** e, T.origin) for T in self.rotations]

    def __str__(self):
        segs = " | ".join(str(s) for s in self.segments)
        return f"x{self.index}: closed trail [{segs}], m={self.m}, mu={self.mu}, degree {self.degree}"


@dataclass
class HHPresentation:
    generators: list
    A: int | None = None
    d: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def u(self) -> int:
        return sum(1 for g in self.generators if g.kind == "closed-path")

    @property
    def is_trivial_ring(self) -> bool:
        return not self.generators

    @property
    def relations(self) -> list[tuple[int, int]]:
        return [(a.index, b.index) for i, a in enumerate(self.generators) for b in self.generators[i + 1 :]]

    def describe(self) -> str:
        if not self.generators:
            return "K"
        xs = ",".join(f"x{g.index}" for g in self.generators)
        rels = ", ".join(f"x{a}*x{b}" for a, b in self.relations)
        return f"K[{xs}]/({rels})"


def rho_T(segments, d: int) -> list[Path]:
    """The m relations of length d*A attached to a closed trail, in the order sigma^0..sigma^(m-1).

    With d = N*m + l, sigma^k(W) = T_k^N alpha_k ... alpha_(k+l-1), i.e. the d
    consecutive segments starting at segment k (indices mod m).
    """
    segs = list(segments)
    m = len(segs)
    if m == 0 or d < 2:
        raise PathError("need at least one segment and d >= 2")
    for i in range(m):
        if segs[i].t != segs[(i + 1) % m].o:
            raise PathError(f"segments {segs[i]} and {segs[(i + 1) % m]} do not form a closed trail")
    out = []
    for k in range(m):
        p = segs[k]
        for i in range(1, d):
            p = compose(p, segs[(k + i) % m])
        out.append(p)
    return out


def segment_overlaps_relation(alpha: Path, r: Path) -> bool:
    """Trail side condition: a proper suffix of alpha starts r, a proper prefix ends r, or alpha sits inside r."""
    a, R = alpha.arrows, r.arrows
    n = len(a)
    for k in range(1, n):
        if k <= len(R) and (a[n - k :] == R[:k] or a[:k] == R[len(R) - k :]):
            return True
    return any(R[i : i + n] == a for i in range(len(R) - n + 1))


def _closed_path_candidates(alg: MonomialAlgebra, A: int, d: int) -> list[ClosedPathGenerator]:
    out = []
    for r in alg.rho:
        C = r.sub(0, A)
        if len(r) != d * A or not C.is_closed or C.arrows * d != r.arrows:
            continue
        if not is_primitive(C):
            continue
        if any(have_overlap(r, other) for other in alg.rho if other != r):
            continue
        out.append(ClosedPathGenerator(0, C, r, not_internal=vertex_not_internal(C, C.o)))
    return out


def _trail_candidates(alg: MonomialAlgebra, A: int, d: int) -> list[TrailGenerator]:
    D = d * A
    rels = [r for r in alg.rho if len(r) == D]
    g = nx.DiGraph()
    g.add_nodes_from(rels)
    for r in rels:
        for r2 in rels:
            if r2.arrows[: D - A] == r.arrows[A:]:
                g.add_edge(r, r2)
    # a qualifying trail's relations have exactly one successor and predecessor in this graph
    keep = [r for r in rels if g.out_degree(r) == 1 and g.in_degree(r) == 1]
    sub = g.subgraph(keep)
    seen: set[Path] = set()
    out = []
    for start in keep:
        if start in seen:
            continue
        cyc = [start]
        nxt = next(iter(sub.successors(start)), None)
        while nxt is not None and nxt != start and nxt not in cyc:
            cyc.append(nxt)
            nxt = next(iter(sub.successors(nxt)), None)
        if nxt != start:
            continue
        seen.update(cyc)
        if len(cyc) < 2:
            continue  # m = 1 is the closed-path family
        segments = [r.sub(0, A) for r in cyc]
        if len(set(segments)) != len(segments):
            continue
        rho = rho_T(segments, d)
        if set(rho) != set(cyc):
            continue
        others = [r for r in alg.rho if r not in set(rho)]
        if any(segment_overlaps_relation(a, r) for a in segments for r in others):
            continue
        # canonical rotation: least segment sequence
        rots = [segments[k:] + segments[:k] for k in range(len(segments))]
        best = min(rots, key=lambda s: [p.arrows for p in s])
        out.append(TrailGenerator(0, tuple(best), tuple(rho_T(best, d)), d))
    return out


def find_generators(alg: MonomialAlgebra, verdict: StackedVerdict | None = None) -> HHPresentation:
    verdict = verdict or classify_stacked(alg)
    if not verdict.is_stacked:
        raise NotStacked(verdict)
    if verdict.finite_global_dimension or verdict.A is None:
        return HHPresentation([], verdict.A, verdict.d,
                              notes=["finite global dimension: every positive-degree element is nilpotent"])
    A, D = verdict.A, verdict.D
    if D % A or D // A < 2:
        raise PreconditionError(f"D = {D} is not a multiple d*A with d >= 2 (A = {A})")
    d = D // A

    closed = sorted(_closed_path_candidates(alg, A, d), key=lambda g: (g.C.o, g.C.arrows))
    trails = sorted(_trail_candidates(alg, A, d), key=lambda g: [s.arrows for s in g.segments])
    by_vertex: dict[int, ClosedPathGenerator] = {}
    for g in closed:
        if g.C.o in by_vertex:
            raise DistinctVertexViolation(
                f"closed paths {by_vertex[g.C.o].C} and {g.C} both qualify at vertex {g.v}"
            )
        by_vertex[g.C.o] = g
    closed_paths = {g.C for g in closed}
    for t in trails:
        if any(T in closed_paths for T in t.rotations):
            raise AssertionError(f"trail {t} repeats a closed path")
    gens = closed + trails
    for i, g in enumerate(gens, start=1):
        g.index = i
    notes = []
    vertex_use: dict[str, list[int]] = {}
    for g in gens:
        for v in set(g.base_vertices):
            vertex_use.setdefault(v, []).append(g.index)
    for v, idx in sorted(vertex_use.items()):
        if len(idx) > 1:
            notes.append(f"vertex {v} lies on generators {', '.join(f'x{i}' for i in idx)}")
    return HHPresentation(gens, A, d, notes)


def cocycle_support(alg: MonomialAlgebra, gen, d: int, chain_sets: dict[int, list[Chain]] | None = None) -> dict[Chain, str]:
    """The degree-``gen.degree`` chains on which the representing cocycle is nonzero, with their values."""
    deg = gen.degree
    if chain_sets is None or deg not in chain_sets:
        chain_sets = chains(alg, deg)
    by_path = {c.path: c for c in chain_sets[deg]}
    out = {}
    for path, vertex in gen.support_pattern(d):
        if path not in by_path:
            raise MissingChain(f"support chain {path} of x{gen.index} is not in R^{deg}")
        out[by_path[path]] = vertex
    return out
