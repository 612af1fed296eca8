"""The chain sets R^n of a monomial algebra and everything read off from them.

A degree-n chain (n >= 2) is its parent chain followed by an extension ``s``.
With ``t`` the parent's tail (its own extension; an arrow in degree 1), ``s``
is a nonempty path such that some relation ``r`` is a suffix of ``t s`` with
``len(s) < len(r)``, and no proper prefix of ``s`` already does this.  The
new tail is ``s``.  Since the rule only looks at the tail, the tails form a
finite automaton whose walks enumerate chains.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

import networkx as nx

from .algebra import MonomialAlgebra
from .errors import ConsistencyError
from .outcomes import Finite, Infinite
from .paths import Path

__all__ = [
    "Chain",
    "TailAutomaton",
    "StackedVerdict",
    "chains",
    "build_tail_automaton",
    "classify_stacked",
    "resolution_shape",
    "proj_dim_simple",
    "stacked_length",
]

Arrows = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Chain:
    degree: int
    path: Path
    parent: "Chain | None" = field(repr=False)
    tail: Path = field(repr=False)
    closing_relation: Path | None = field(default=None, repr=False)

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return (self.degree, self.path) == (other.degree, other.path)

    def __hash__(self):
        return hash((self.degree, self.path))

    @property
    def length(self) -> int:
        return len(self.path)

    @property
    def o(self) -> int:
        return self.path.o

    @property
    def t(self) -> int:
        return self.path.t

    def ladder(self) -> list["Chain"]:
        out, c = [], self
        while c is not None:
            out.append(c)
            c = c.parent
        return out[::-1]

    def __str__(self):
        return str(self.path)


def _extensions(alg: MonomialAlgebra, tail: Arrows) -> list[tuple[Arrows, Path]]:
    cands: dict[Arrows, list[Path]] = {}
    for r in alg.rho:
        R = r.arrows
        for k in range(1, min(len(tail), len(R) - 1) + 1):
            if tail[-k:] == R[:k]:
                cands.setdefault(R[k:], []).append(r)
    out = []
    for s, rels in cands.items():
        if any(s[:j] in cands for j in range(1, len(s))):
            continue
        if len(rels) > 1:
            raise ConsistencyError(
                f"relations {', '.join(map(str, rels))} are all suffixes of the same extension; rho is not minimal"
            )
        out.append((s, rels[0]))
    out.sort(key=lambda e: e[0])
    return out


class TailAutomaton:
    """Tails as states; a transition appends one minimal extension.

    Arrow states form the degree-1 layer.  A walk of length n-1 starting at
    arrow ``a`` corresponds to exactly one degree-n chain starting with ``a``.
    """

    def __init__(self, alg: MonomialAlgebra):
        self.alg = alg
        q = alg.quiver
        self.initial: tuple[Arrows, ...] = tuple((a,) for a in range(q.n_arrows))
        self.transitions: dict[Arrows, list[tuple[Arrows, Path]]] = {}
        todo = deque(self.initial)
        while todo:
            t = todo.popleft()
            if t in self.transitions:
                continue
            self.transitions[t] = _extensions(alg, t)
            todo.extend(s for s, _ in self.transitions[t] if s not in self.transitions)
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.transitions)
        for t, outs in self.transitions.items():
            for s, r in outs:
                self.graph.add_edge(t, s, relation=r, length=len(s))

    @property
    def states(self) -> list[Arrows]:
        return list(self.transitions)

    def terminus(self, tail: Arrows) -> int:
        return self.alg.quiver.tgt[tail[-1]]

    def reachable_from(self, starts) -> set[Arrows]:
        seen = set()
        for s in starts:
            if s not in seen:
                seen.add(s)
                seen |= nx.descendants(self.graph, s)
        return seen

    def counts(self, v: int, n_max: int) -> list[Counter]:
        """Walk counts grouped by terminus: ``out[n][w]`` = #{c in R^n : o(c)=v, t(c)=w}."""
        out = [Counter({v: 1})]
        layer = Counter({(a,): 1 for a in self.alg.quiver.out_arrows[v]})
        for n in range(1, n_max + 1):
            out.append(Counter())
            for t, k in layer.items():
                out[n][self.terminus(t)] += k
            if n == n_max:
                break
            nxt = Counter()
            for t, k in layer.items():
                for s, _ in self.transitions[t]:
                    nxt[s] += k
            layer = nxt
        return out

    def find_cycle(self, starts) -> list[Arrows] | None:
        sub = self.graph.subgraph(self.reachable_from(starts))
        try:
            edges = nx.find_cycle(sub)
        except nx.NetworkXNoCycle:
            return None
        return [u for u, _ in edges]


def build_tail_automaton(alg: MonomialAlgebra) -> TailAutomaton:
    return TailAutomaton(alg)


def chains(alg: MonomialAlgebra, n_max: int) -> dict[int, list[Chain]]:
    """R^0..R^n_max by direct recursion; each degree sorted by arrow sequence."""
    q = alg.quiver
    out: dict[int, list[Chain]] = {0: [Chain(0, Path(q, v, ()), None, Path(q, v, ())) for v in range(q.n_vertices)]}
    if n_max >= 1:
        out[1] = []
        for a in range(q.n_arrows):
            p = Path(q, q.src[a], (a,))
            out[1].append(Chain(1, p, None, p))
    for n in range(2, n_max + 1):
        layer = []
        for c in out[n - 1]:
            for s, r in _extensions(alg, c.tail.arrows):
                path = Path(q, c.path.o, c.path.arrows + s)
                layer.append(Chain(n, path, c, Path(q, q.src[s[0]], s), r))
        layer.sort(key=lambda c: (c.path.arrows, c.path.o))
        out[n] = layer
    return out


def stacked_length(n: int, D: int, A: int) -> int:
    return (n // 2) * D if n % 2 == 0 else ((n - 1) // 2) * D + A


@dataclass
class StackedVerdict:
    is_stacked: bool
    D: int | None = None
    A: int | None = None
    d: int | None = None
    reason: str = ""
    counterexample: Chain | None = None
    certificate: dict | None = None
    finite_global_dimension: bool = False
    max_chain_degree: int | None = None

    @property
    def flags(self) -> list[str]:
        if self.finite_global_dimension:
            return [f"finite global dimension (chains stop after degree {self.max_chain_degree}): "
                    "variety machinery degenerate, every module has trivial variety"]
        return []


def _walk_to_chain(alg: MonomialAlgebra, walk: list[Arrows]) -> Chain:
    q = alg.quiver
    first = walk[0]
    c = Chain(1, Path(q, q.src[first[0]], first), None, Path(q, q.src[first[0]], first))
    for s in walk[1:]:
        r = next(r for t2, r in _extensions(alg, c.tail.arrows) if t2 == s)
        c = Chain(c.degree + 1, Path(q, c.path.o, c.path.arrows + s), c, Path(q, q.src[s[0]], s), r)
    return c


def classify_stacked(alg: MonomialAlgebra, automaton: TailAutomaton | None = None) -> StackedVerdict:
    """Exact decision of the (D,A)-stacked property for all degrees.

    Chain lengths grow by ``len(s)`` per step, so the length formula holds in
    every degree iff each reachable (tail, degree class) pair only has
    transitions of the right length: D-1 out of degree 1, A out of even
    degrees, D-A out of odd degrees >= 3.
    """
    lengths = sorted({len(r) for r in alg.rho})
    if len(lengths) > 1:
        D0 = len(alg.rho[0])
        bad = next(r for r in alg.rho if len(r) != D0)
        witness = Chain(2, bad, None, bad.sub(1), bad)
        return StackedVerdict(False, reason=f"relations have different lengths {lengths}", counterexample=witness)
    D = lengths[0]
    aut = automaton or TailAutomaton(alg)

    # BFS over (tail, degree class), remembering one walk per node for counterexamples
    start = [((a,), 1) for a in range(alg.quiver.n_arrows)]
    walks = {node: [node[0]] for node in start}
    queue = deque(start)
    A = None
    checked = 0
    while queue:
        node = queue.popleft()
        tail, cls = node
        for s, _ in aut.transitions[tail]:
            if cls == 1:
                want = D - 1
            elif cls == 2:
                if A is None:
                    A = len(s)
                want = A
            else:
                want = D - A
            checked += 1
            if len(s) != want:
                chain = _walk_to_chain(alg, walks[node] + [s])
                return StackedVerdict(
                    False, D=D, A=A,
                    reason=f"degree-{chain.degree} chain {chain} has length {chain.length}, expected "
                           f"{chain.length - len(s) + want}",
                    counterexample=chain,
                )
            nxt = (s, 2 if cls in (1, 3) else 3)
            if nxt not in walks:
                walks[nxt] = walks[node] + [s]
                queue.append(nxt)

    cycle = aut.find_cycle(aut.initial)
    finite = cycle is None
    max_deg = None
    if finite:
        max_deg = 1 + nx.dag_longest_path_length(aut.graph) if alg.quiver.n_arrows else 0
    d = D // A if A and D % A == 0 else None
    return StackedVerdict(
        True, D=D, A=A, d=d,
        reason="length formula holds on every reachable automaton transition",
        certificate={"product_states": len(walks), "checked_transitions": checked,
                     "automaton_states": len(aut.transitions)},
        finite_global_dimension=finite,
        max_chain_degree=max_deg,
    )


def resolution_shape(alg: MonomialAlgebra, v: int | str, n_max: int, automaton: TailAutomaton | None = None) -> list[Counter]:
    """Multisets {t(c) : c in R^n, o(c) = v} for n = 0..n_max, keyed by vertex name."""
    vi = alg.vertex(v) if isinstance(v, str) else v
    aut = automaton or TailAutomaton(alg)
    names = alg.quiver.vertices
    return [Counter({names[w]: k for w, k in layer.items() if k}) for layer in aut.counts(vi, n_max)]


def proj_dim_simple(alg: MonomialAlgebra, v: int | str, automaton: TailAutomaton | None = None):
    """pd of the simple right module at ``v``: Finite(n) or Infinite(cycle of tails)."""
    vi = alg.vertex(v) if isinstance(v, str) else v
    aut = automaton or TailAutomaton(alg)
    starts = [(a,) for a in alg.quiver.out_arrows[vi]]
    if not starts:
        return Finite(0)
    cycle = aut.find_cycle(starts)
    if cycle is not None:
        q = alg.quiver
        return Infinite([str(Path(q, q.src[t[0]], t)) for t in cycle])
    sub = aut.graph.subgraph(aut.reachable_from(starts))
    depth: dict[Arrows, int] = {}
    for t in reversed(list(nx.topological_sort(sub))):
        depth[t] = max((1 + depth[s] for s in sub.successors(t)), default=0)
    return Finite(1 + max(depth[s] for s in starts))
