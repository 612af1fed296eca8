"""Quiver representations over exact rationals and the homological algebra built on them.

Modules are right modules: basis vector i lives at vertex ``vertex_of[i]``
and arrow ``a`` sends it to ``act[a][i]``, a sparse vector at ``t(a)``.
Left modules are right modules over the opposite algebra.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import lcm

import networkx as nx

from .algebra import MonomialAlgebra
from .chains import Chain, chains
from .errors import PreconditionError, ValidationError
from .hochschild import HHPresentation, cocycle_support
from .linalg import Echelon, nullspace
from .outcomes import AtLeast, Finite, Infinite, max_dimension

__all__ = [
    "Representation",
    "simple",
    "projective",
    "injective",
    "standard_modules",
    "projective_cover",
    "TerminatedAt",
    "ReachedBound",
    "PeriodicityCertificate",
    "ResolutionTrace",
    "resolve",
    "projective_dimension",
    "injective_dimension",
    "GorensteinVerdict",
    "gorenstein_probe",
    "ext_basis",
    "ext_product",
    "FgEvidence",
    "fg2_factorization_probe",
]

Arrows = tuple[int, ...]


@dataclass
class Representation:
    alg: MonomialAlgebra
    vertex_of: list[int]
    act: list[dict[int, dict]]
    label: str = ""

    @property
    def dim(self) -> int:
        return len(self.vertex_of)

    @property
    def dims(self) -> dict[str, int]:
        c = Counter(self.vertex_of)
        return {v: c[i] for i, v in enumerate(self.alg.quiver.vertices)}

    def apply(self, vec: dict, arrow: int) -> dict:
        out: dict = {}
        table = self.act[arrow]
        for i, c in vec.items():
            img = table.get(i)
            if img:
                for j, d in img.items():
                    val = out.get(j, 0) + c * d
                    if val:
                        out[j] = val
                    else:
                        out.pop(j)
        return out

    def check(self) -> None:
        """Assert matrix shapes match arrow endpoints and every relation acts as zero."""
        q = self.alg.quiver
        for a in range(q.n_arrows):
            for i, img in self.act[a].items():
                assert self.vertex_of[i] == q.src[a], f"arrow {q.arrows[a].name} acts on a vector outside its source"
                assert all(self.vertex_of[j] == q.tgt[a] for j in img), f"arrow {q.arrows[a].name} lands outside its target"
        for r in self.alg.rho:
            for i in range(self.dim):
                if self.vertex_of[i] != r.o:
                    continue
                v = {i: Fraction(1)}
                for a in r.arrows:
                    v = self.apply(v, a)
                assert not v, f"relation {r} does not act as zero"


def _vertex(alg: MonomialAlgebra, v) -> int:
    return alg.vertex(v) if isinstance(v, str) else v


def simple(alg: MonomialAlgebra, v) -> Representation:
    vi = _vertex(alg, v)
    return Representation(alg, [vi], [{} for _ in range(alg.quiver.n_arrows)], f"S({alg.quiver.vertices[vi]})")


def projective(alg: MonomialAlgebra, v) -> Representation:
    """e_v Lambda: basis = paths from v, p.a = pa."""
    vi = _vertex(alg, v)
    q = alg.quiver
    paths = alg.paths_from(vi)
    index = {p: i for i, p in enumerate(paths)}
    act: list[dict] = [{} for _ in range(q.n_arrows)]
    for p, i in index.items():
        for a in q.out_arrows[alg.path_end(vi, p)]:
            j = index.get(p + (a,))
            if j is not None:
                act[a][i] = {j: Fraction(1)}
    return Representation(alg, [alg.path_end(vi, p) for p in paths], act, f"P({q.vertices[vi]})")


def injective(alg: MonomialAlgebra, v) -> Representation:
    """D(Lambda e_v): basis p* for paths p ending at v, living at o(p); p*.a = q* if p = a q."""
    vi = _vertex(alg, v)
    q = alg.quiver
    paths = alg.paths_to(vi)
    index = {p: i for i, p in enumerate(paths)}
    origin = [q.src[p[0]] if p else vi for p in paths]
    act: list[dict] = [{} for _ in range(q.n_arrows)]
    for p, i in index.items():
        if p:
            act[p[0]][i] = {index[p[1:]]: Fraction(1)}
    return Representation(alg, origin, act, f"I({q.vertices[vi]})")


def standard_modules(alg: MonomialAlgebra) -> dict:
    return {"simple": lambda v: simple(alg, v), "proj": lambda v: projective(alg, v), "inj": lambda v: injective(alg, v)}


# ------------------------------------------------------------------ covers
@dataclass
class _Cover:
    tops: list[int]  # basis indices of M spanning a complement of the radical
    coords: list[tuple[int, Arrows]]  # (top position, path from its vertex)
    images: list[dict]


def _cover_images(M: Representation) -> _Cover:
    alg = M.alg
    rad = Echelon(img for table in M.act for img in table.values())
    tops = [i for i in range(M.dim) if i not in rad.rows]
    coords, images = [], []
    for g, i in enumerate(tops):
        x = M.vertex_of[i]
        seen: dict[Arrows, dict] = {}
        for p in alg.paths_from(x):
            img = {i: Fraction(1)} if not p else M.apply(seen[p[:-1]], p[-1])
            seen[p] = img
            coords.append((g, p))
            images.append(img)
    return _Cover(tops, coords, images)


def projective_cover(M: Representation) -> tuple[dict[str, int], Representation]:
    """Top multiplicities of M and its first syzygy as a representation."""
    alg, q = M.alg, M.alg.quiver
    cov = _cover_images(M)
    kernel_basis, free = nullspace(cov.images)
    if len(cov.images) - len(kernel_basis) != M.dim:
        raise AssertionError(f"cover of {M.label} is not surjective")
    mult = Counter(q.vertices[M.vertex_of[i]] for i in cov.tops)
    coord_index = {c: k for k, c in enumerate(cov.coords)}
    free_pos = {f: j for j, f in enumerate(free)}
    top_vertex = [M.vertex_of[i] for i in cov.tops]

    def end(c):
        g, p = c
        return alg.path_end(top_vertex[g], p)

    vertex_of = [end(cov.coords[f]) for f in free]
    act: list[dict] = [{} for _ in range(q.n_arrows)]
    for j, w in enumerate(kernel_basis):
        x = vertex_of[j]
        for a in q.out_arrows[x]:
            shifted = {}
            for k, c in w.items():
                g, p = cov.coords[k]
                t = coord_index.get((g, p + (a,)))
                if t is not None:
                    shifted[t] = c
            img = {free_pos[k]: c for k, c in shifted.items() if k in free_pos}
            if img:
                act[a][j] = img
    K = Representation(alg, vertex_of, act, f"Omega({M.label})")
    total = sum(n * len(alg.paths_from(alg.vertex(v))) for v, n in mult.items())
    assert K.dim == total - M.dim, "rank-nullity failed for projective cover"
    return dict(sorted(mult.items(), key=lambda kv: q.vertex_index[kv[0]])), K


# ------------------------------------------------------------------ monomial keys
Key = tuple[int, frozenset]


def _monomial_keys(M: Representation) -> list[Key] | None:
    """Describe M as a sum of e_x Lambda / <Z> when its top generators make that visible."""
    cov = _cover_images(M)
    nonzero = sum(1 for img in cov.images if img)
    if nonzero != M.dim or Echelon(img for img in cov.images if img).rank != M.dim:
        return None
    alg = M.alg
    keys: dict[int, set] = {g: set() for g in range(len(cov.tops))}
    dead = {c for c, img in zip(cov.coords, cov.images) if not img}
    for g, p in dead:
        if p and (g, p[:-1]) not in dead:
            keys[g].add(p)
    return [(M.vertex_of[i], frozenset(keys[g])) for g, i in enumerate(cov.tops)]


def _key_children(alg: MonomialAlgebra, key: Key) -> list[Key]:
    """Syzygy of e_x Lambda/<Z> is the sum of z Lambda, and z Lambda = e_t(z) Lambda/<minimal q with zq = 0>."""
    out = []
    for z in sorted(key[1]):
        w = alg.path_end(key[0], z)
        ann = set()
        for qpath in alg.paths_from(w):
            if not alg.is_nonzero(z + qpath):
                continue
            for a in alg.quiver.out_arrows[alg.path_end(w, qpath)]:
                longer = qpath + (a,)
                if alg.is_nonzero(longer) and not alg.is_nonzero(z + longer):
                    ann.add(longer)
        out.append((w, frozenset(ann)))
    return out


def _key_graph(alg: MonomialAlgebra, roots: list[Key]) -> nx.DiGraph:
    g = nx.DiGraph()
    todo = list(roots)
    g.add_nodes_from(roots)
    while todo:
        k = todo.pop()
        if g.nodes[k].get("done"):
            continue
        g.nodes[k]["done"] = True
        for c in _key_children(alg, k):
            if c not in g:
                g.add_node(c)
                todo.append(c)
            g.add_edge(k, c)
    return g


def _format_key(alg: MonomialAlgebra, key: Key) -> str:
    q = alg.quiver
    rels = sorted(" ".join(q.arrows[a].name for a in z) for z in key[1])
    return f"e_{q.vertices[key[0]]}/<{', '.join(rels)}>"


# ------------------------------------------------------------------ resolutions
@dataclass(frozen=True)
class TerminatedAt:
    n: int

    def to_json(self):
        return {"kind": "terminated", "degree": self.n}


@dataclass(frozen=True)
class ReachedBound:
    n: int

    def to_json(self):
        return {"kind": "reached-bound", "degree": self.n}


@dataclass(frozen=True)
class PeriodicityCertificate:
    cycle: tuple[str, ...]

    @property
    def period(self) -> int:
        return len(self.cycle)

    def to_json(self):
        return {"kind": "periodic", "period": self.period, "cycle": list(self.cycle)}


@dataclass
class ResolutionTrace:
    module: str
    terms: list[dict[str, int]]
    outcome: TerminatedAt | ReachedBound | PeriodicityCertificate
    method: str = "linear"

    def to_json(self):
        return {
            "module": self.module,
            "terms": [{"degree": n, "multiplicities": t} for n, t in enumerate(self.terms)],
            "outcome": self.outcome.to_json(),
        }


def _certificate(alg: MonomialAlgebra, roots: list[Key]) -> PeriodicityCertificate | None:
    g = _key_graph(alg, roots)
    try:
        cyc = nx.find_cycle(g)
    except nx.NetworkXNoCycle:
        return None
    return PeriodicityCertificate(tuple(_format_key(alg, u) for u, _ in cyc))


def _linear_until_monomial(M: Representation, n_max: int, recognize: bool):
    """Peel projective covers off M until its syzygy is monomial, zero, or n_max is passed.

    Returns (terms, n, module, keys): ``module`` is the syzygy in degree ``n``
    (None when the resolution stopped) and ``keys`` its monomial description.
    Second syzygies over a monomial algebra are sums of modules p*Lambda, so
    recognition normally succeeds within two steps.
    """
    terms = []
    for n in range(n_max + 1):
        if recognize:
            keys = _monomial_keys(M)
            if keys is not None:
                return terms, n, M, keys
        mult, K = projective_cover(M)
        terms.append(mult)
        if K.dim == 0:
            return terms, n, None, None
        M = K
    return terms, n_max + 1, M, None


def resolve(M: Representation, n_max: int, method: str = "auto") -> ResolutionTrace:
    """Minimal projective resolution of M through degree n_max.

    ``linear`` computes every syzygy by linear algebra.  ``auto`` switches to
    counting monomial keys once a syzygy is recognized as a sum of cyclic
    monomial modules, which is exact and far cheaper.
    """
    if n_max < 0:
        raise PreconditionError("n_max must be >= 0")
    if method not in ("auto", "linear"):
        raise ValueError(f"unknown method {method!r}")
    if M.dim == 0:
        return ResolutionTrace(M.label, [{}], TerminatedAt(0), method)
    alg, label = M.alg, M.label
    terms, n, rest, keys = _linear_until_monomial(M, n_max, method == "auto")
    if rest is None:
        return ResolutionTrace(label, terms, TerminatedAt(n), method)
    if keys is not None:
        tail, outcome = _resolve_keys(alg, keys, n, n_max)
        return ResolutionTrace(label, terms + tail, outcome, method)
    keys = _monomial_keys(rest)
    cert = _certificate(alg, keys) if keys is not None else None
    return ResolutionTrace(label, terms, cert or ReachedBound(n_max), method)


def _resolve_keys(alg: MonomialAlgebra, roots: list[Key], start: int, n_max: int):
    """Terms in degrees start..n_max of the resolution of the monomial module ``roots``."""
    names = alg.quiver.vertices
    layer = Counter(roots)
    terms = []
    children: dict[Key, list[Key]] = {}
    for n in range(start, n_max + 1):
        t = Counter()
        for k, c in layer.items():
            t[k[0]] += c
        terms.append({names[v]: t[v] for v in sorted(t)})
        nxt = Counter()
        for k, c in layer.items():
            if k not in children:
                children[k] = _key_children(alg, k)
            for ch in children[k]:
                nxt[ch] += c
        if not nxt:
            return terms, TerminatedAt(n)
        layer = nxt
    return terms, _certificate(alg, roots) or ReachedBound(n_max)


def projective_dimension(M: Representation, n_max: int = 20):
    """Finite(n), Infinite(certificate) or AtLeast(n_max)."""
    if M.dim == 0:
        return Finite(0)
    terms, n, rest, keys = _linear_until_monomial(M, n_max, True)
    if rest is None:
        return Finite(n)
    if keys is None:
        return AtLeast(n_max)
    cert = _certificate(M.alg, keys)
    if cert is not None:
        return Infinite(cert)
    g = _key_graph(M.alg, keys)
    depth: dict = {}
    for k in reversed(list(nx.topological_sort(g))):
        depth[k] = 0 if not k[1] else 1 + max(depth[c] for c in g.successors(k))
    return Finite(n + max(depth[k] for k in keys))


def injective_dimension(alg: MonomialAlgebra, side: str = "right", n_max: int = 20):
    """Injective dimension of Lambda as a right (``side="right"``) or left module.

    id(Lambda_Lambda) is the projective dimension of D(Lambda) as a left module,
    i.e. of the right injectives of the opposite algebra.  The left side uses
    the right injectives of Lambda itself.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    base = alg.opposite() if side == "right" else alg
    return max_dimension(projective_dimension(injective(base, v), n_max) for v in range(base.quiver.n_vertices))


@dataclass
class GorensteinVerdict:
    left: object
    right: object

    @property
    def flag(self) -> str:
        if isinstance(self.left, Infinite) or isinstance(self.right, Infinite):
            return "NotGorenstein"
        if isinstance(self.left, Finite) and isinstance(self.right, Finite):
            return f"Gorenstein({self.left.n}, {self.right.n})"
        return "Inconclusive"

    @property
    def is_gorenstein(self) -> bool | None:
        f = self.flag
        return None if f == "Inconclusive" else f.startswith("Gorenstein")

    def to_json(self):
        return {"left": self.left.to_json(), "right": self.right.to_json(), "flag": self.flag}


def gorenstein_probe(alg: MonomialAlgebra, n_max: int = 20) -> GorensteinVerdict:
    return GorensteinVerdict(injective_dimension(alg, "left", n_max), injective_dimension(alg, "right", n_max))


# ------------------------------------------------------------------ Ext algebra
@lru_cache(maxsize=32)
def _chain_sets(alg: MonomialAlgebra, n: int) -> dict[int, list[Chain]]:
    return chains(alg, n)


def ext_basis(alg: MonomialAlgebra, n: int) -> list[Chain]:
    return _chain_sets(alg, n)[n]


def ext_product(alg: MonomialAlgebra, c1: Chain, c2: Chain) -> Chain | None:
    """Product in the multiplicative chain basis of E(Lambda); None stands for zero."""
    if c1.path.t != c2.path.o:
        return None
    if c1.degree == 0:
        return c2
    if c2.degree == 0:
        return c1
    n = c1.degree + c2.degree
    arrows = c1.path.arrows + c2.path.arrows
    for c in ext_basis(alg, n):
        if c.path.arrows == arrows:
            return c
    return None


@dataclass
class FgEvidence:
    verdict: str  # Positive | Negative
    window: tuple[int, int]
    band: tuple[int, int] | None
    non_factoring: list[Chain] = field(default_factory=list)
    caveat: str = "heuristic: not a proof of (Fg2)"

    def to_json(self):
        return {
            "verdict": self.verdict,
            "window": list(self.window),
            "band": list(self.band) if self.band else None,
            "non_factoring": [f"{c.degree}:{c}" for c in self.non_factoring],
            "caveat": self.caveat,
        }


def default_window(pres: HHPresentation) -> tuple[int, int]:
    degs = [g.degree for g in pres.generators]
    if not degs:
        return (0, 0)
    return (max(degs), max(degs) + 2 * lcm(*degs))


def fg2_factorization_probe(alg: MonomialAlgebra, pres: HHPresentation, window: tuple[int, int] | None = None) -> FgEvidence:
    """Check that high-degree chains are products g*c' with g a generator's support chain.

    Chains just above the generator degrees may be module generators, so only
    the top band of the window (one lcm of generator degrees wide) must
    factor; failures below the band are listed but do not decide the verdict.
    """
    window = window or default_window(pres)
    n0, n1 = window
    if n0 > n1:
        raise PreconditionError(f"empty window {n0}..{n1}")
    if not pres.generators:
        return FgEvidence("Negative", window, None, [], "vacuous: no generators in HH*/N; heuristic: not a proof of (Fg2)")
    degs = [g.degree for g in pres.generators]
    maxdeg, L = max(degs), lcm(*degs)
    sets = _chain_sets(alg, n1)
    supports = []
    for g in pres.generators:
        for c in cocycle_support(alg, g, pres.d, sets):
            supports.append(c)
    lo = max(n0, maxdeg + 1, n1 - L + 1)
    band = (lo, n1) if lo <= n1 else None
    failures = []
    for n in range(max(n0, maxdeg + 1), n1 + 1):
        for c in sets[n]:
            if not any(_factors(sets, s, c) for s in supports):
                failures.append(c)
    decisive = [c for c in failures if band and c.degree >= band[0]]
    return FgEvidence("Negative" if decisive or band is None else "Positive", window, band, failures)


def _factors(sets, s: Chain, c: Chain) -> bool:
    k = len(s.path)
    if c.path.arrows[:k] != s.path.arrows or c.path.o != s.path.o:
        return False
    m = c.degree - s.degree
    rest = c.path.arrows[k:]
    if m == 0:
        return not rest
    return any(c2.path.arrows == rest for c2 in sets[m])
