"""The monomial algebra KQ/I: validation, path basis, multiplication and center."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import networkx as nx

from .errors import EmptyRelations, InfiniteDimensional, NotMinimal, ValidationError
from .linalg import nullspace, solve_in_span
from .parser import AlgebraSpec
from .paths import Path, Quiver

__all__ = [
    "ZERO",
    "MonomialAlgebra",
    "CenterPresentation",
    "validate",
    "algebra_from_relations",
    "multiply",
    "center",
    "element_product",
    "format_element",
    "is_central",
]

FIELD_NOTE = "K algebraically closed, char K != 2 (assumed; all computations are field-independent)"


class _Zero:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO = _Zero()


class MonomialAlgebra:
    """KQ/I for a monomial ideal I with minimal generating set ``rho``.

    Build with :func:`validate` or :func:`algebra_from_relations`; the
    constructor assumes its input has already been checked.
    """

    def __init__(self, quiver: Quiver, rho: Iterable[Path], name: str = "", warnings: Iterable[str] = ()):
        self.quiver = quiver
        self.name = name
        self.rho: tuple[Path, ...] = tuple(rho)
        self.warnings: tuple[str, ...] = tuple(warnings)
        self.field_note = FIELD_NOTE
        self.relset = {r.arrows for r in self.rho}
        self.rel_lengths = sorted({len(r) for r in self.rho})
        self._build_basis()

    def _build_basis(self):
        q = self.quiver
        nonzero: set[tuple[int, ...]] = set()
        paths_from: list[list[tuple[int, ...]]] = [[()] for _ in q.vertices]
        frontier = [(a,) for a in range(q.n_arrows)]
        while frontier:
            nxt = []
            for p in frontier:
                if self._suffix_relation(p) is not None:
                    continue
                nonzero.add(p)
                paths_from[q.src[p[0]]].append(p)
                nxt.extend(p + (b,) for b in q.out_arrows[q.tgt[p[-1]]])
            frontier = nxt
        self.nonzero = nonzero
        self._paths_from = [sorted(ps, key=lambda p: (len(p), p)) for ps in paths_from]
        self._paths_to: list[list[tuple[int, ...]]] = [[] for _ in q.vertices]
        for v, ps in enumerate(self._paths_from):
            for p in ps:
                self._paths_to[q.tgt[p[-1]] if p else v].append(p)
        basis = [Path(q, v, ()) for v in range(q.n_vertices)]
        basis += [Path(q, q.src[p[0]], p) for p in sorted(nonzero, key=lambda p: (len(p), p))]
        self.basis: tuple[Path, ...] = tuple(basis)

    def _suffix_relation(self, arrows: tuple[int, ...]):
        for L in self.rel_lengths:
            if L <= len(arrows) and arrows[-L:] in self.relset:
                return arrows[-L:]
        return None

    # ------------------------------------------------------------------ queries
    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_nonzero(self, arrows: tuple[int, ...]) -> bool:
        return not arrows or arrows in self.nonzero

    def paths_from(self, v: int) -> list[tuple[int, ...]]:
        """Basis paths starting at vertex index ``v`` (the trivial path first), by length."""
        return self._paths_from[v]

    def paths_to(self, v: int) -> list[tuple[int, ...]]:
        return self._paths_to[v]

    def path_end(self, v: int, arrows: tuple[int, ...]) -> int:
        return self.quiver.tgt[arrows[-1]] if arrows else v

    def relation_names(self) -> list[tuple[str, ...]]:
        return [r.names for r in self.rho]

    def opposite(self) -> "MonomialAlgebra":
        qop = self.quiver.opposite()
        rho = [Path.from_arrows(qop, tuple(reversed(r.arrows))) for r in self.rho]
        return MonomialAlgebra(qop, rho, name=f"{self.name}^op" if self.name else "op", warnings=self.warnings)

    def to_spec(self) -> AlgebraSpec:
        return AlgebraSpec(self.name or "algebra", self.quiver, tuple(r.names for r in self.rho))

    def vertex(self, name: str) -> int:
        try:
            return self.quiver.vertex_index[name]
        except KeyError:
            raise ValidationError(f"unknown vertex {name!r}") from None

    def __repr__(self):
        return f"MonomialAlgebra({self.name!r}, dim={self.dimension}, rho={[str(r) for r in self.rho]})"


def _infinite_witness(quiver: Quiver, relset: set, rel_lengths: list[int]) -> Path | None:
    """Find a cycle of nonzero paths, or None when the algebra is finite-dimensional.

    A state is the current vertex plus the longest suffix of the path so far
    that is a proper prefix of some relation (the Aho-Corasick state), which
    is exactly what decides whether a later arrow completes a relation.
    """
    prefixes = {()} | {r[:k] for r in relset for k in range(len(r))}

    def step(state: tuple[int, ...], b: int):
        w = state + (b,)
        if any(w[i:] in relset for i in range(len(w))):
            return None
        return next(w[i:] for i in range(len(w) + 1) if w[i:] in prefixes)

    g = nx.DiGraph()
    stack = [(v, ()) for v in range(quiver.n_vertices)]
    seen = set(stack)
    while stack:
        v, s = stack.pop()
        for b in quiver.out_arrows[v]:
            nxt = step(s, b)
            if nxt is None:
                continue
            node = (quiver.tgt[b], nxt)
            g.add_edge((v, s), node, arrow=b)
            if node not in seen:
                seen.add(node)
                stack.append(node)
    try:
        cyc = nx.find_cycle(g)
    except nx.NetworkXNoCycle:
        return None
    return Path.from_arrows(quiver, tuple(g.edges[u, w]["arrow"] for u, w in cyc))


def algebra_from_relations(quiver: Quiver, relations: Iterable[Iterable[str] | Path], name: str = "") -> MonomialAlgebra:
    rho: list[Path] = []
    for r in relations:
        p = r if isinstance(r, Path) else quiver.path(*r)
        if len(p) < 2:
            raise ValidationError(f"relation {p} has length < 2")
        if p not in rho:
            rho.append(p)
    for r1 in rho:
        for r2 in rho:
            if r1 != r2 and len(r1) <= len(r2):
                n = len(r1)
                if any(r2.arrows[i : i + n] == r1.arrows for i in range(len(r2) - n + 1)):
                    raise NotMinimal(r1, r2)
    relset = {r.arrows for r in rho}
    witness = _infinite_witness(quiver, relset, sorted({len(r) for r in rho}))
    if witness is not None:
        raise InfiniteDimensional(witness)
    if not rho:
        raise EmptyRelations()
    warnings = []
    comps = quiver.components()
    if len(comps) > 1:
        warnings.append("quiver is disconnected; components: " + "; ".join(" ".join(c) for c in comps))
    return MonomialAlgebra(quiver, rho, name=name, warnings=warnings)


def validate(spec: AlgebraSpec) -> MonomialAlgebra:
    return algebra_from_relations(spec.quiver, spec.relations, name=spec.name)


def multiply(alg: MonomialAlgebra, a: Path, b: Path):
    if a.t != b.o:
        return ZERO
    arrows = a.arrows + b.arrows
    if not alg.is_nonzero(arrows):
        return ZERO
    return Path(alg.quiver, a.o, arrows) if arrows else a


# ---------------------------------------------------------------------- center
Element = dict  # Path -> Fraction


def element_product(alg: MonomialAlgebra, x: Element, y: Element) -> Element:
    out: Element = {}
    for p, cp in x.items():
        for q, cq in y.items():
            pq = multiply(alg, p, q)
            if pq is not ZERO:
                val = out.get(pq, 0) + cp * cq
                if val:
                    out[pq] = val
                else:
                    out.pop(pq, None)
    return out


def format_element(x: Element) -> str:
    if not x:
        return "0"
    terms = []
    for p in sorted(x):
        c = x[p]
        if c == 1:
            terms.append(str(p))
        elif c == -1:
            terms.append(f"-{p}")
        else:
            terms.append(f"{c}*{p}")
    return " + ".join(terms).replace("+ -", "- ")


@dataclass
class CenterPresentation:
    k_dimension: int
    generator_elements: list[Element]
    identity_count: int
    products: dict[tuple[int, int], list[Fraction]] = field(default_factory=dict)
    nilpotency: dict[int, int] = field(default_factory=dict)

    def describe(self) -> str:
        if self.k_dimension == 1:
            return "K"
        return f"dimension {self.k_dimension}"


def center(alg: MonomialAlgebra) -> CenterPresentation:
    """Solve z*a == a*z for every arrow a and z*e_v == e_v*z for every vertex v."""
    q = alg.quiver
    # commuting with every e_v forces z to live on closed paths
    closed = [p for p in alg.basis if not p.is_trivial and p.is_closed]
    index = {p: i for i, p in enumerate(alg.basis)}
    columns: list[dict] = []
    for p in closed:
        col: dict[int, Fraction] = {}
        for a in range(q.n_arrows):
            arr = q.path(q.arrows[a].name)
            za = multiply(alg, p, arr)
            az = multiply(alg, arr, p)
            if za is not ZERO:
                col[len(alg.basis) * a + index[za]] = col.get(len(alg.basis) * a + index[za], 0) + 1
            if az is not ZERO:
                k = len(alg.basis) * a + index[az]
                col[k] = col.get(k, 0) - 1
        columns.append({k: v for k, v in col.items() if v})
    kernel, _ = nullspace(columns)
    rad_part = [{closed[i]: c for i, c in vec.items()} for vec in kernel]

    comps = q.components()
    identity = {Path(q, v, ()): Fraction(1) for v in range(q.n_vertices)}
    gens: list[Element] = [identity]
    for comp in comps[1:]:
        gens.append({q.trivial(v): Fraction(1) for v in comp})
    gens += rad_part
    n_id = len(comps)

    pres = CenterPresentation(len(gens), gens, n_id)
    basis_vecs = [{index[p]: c for p, c in g.items()} for g in gens]
    for i in range(n_id, len(gens)):
        for j in range(i, len(gens)):
            prod = element_product(alg, gens[i], gens[j])
            coeffs = solve_in_span(basis_vecs, {index[p]: c for p, c in prod.items()})
            if coeffs is None:
                raise AssertionError("center is not closed under multiplication")
            pres.products[(i, j)] = coeffs
        power, k = gens[i], 1
        while power:
            power = element_product(alg, power, gens[i])
            k += 1
        pres.nilpotency[i] = k
    return pres


def is_central(alg: MonomialAlgebra, z: Element) -> bool:
    for p in alg.basis:
        if element_product(alg, z, {p: Fraction(1)}) != element_product(alg, {p: Fraction(1)}, z):
            return False
    return True

