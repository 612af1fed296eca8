"""Quivers, paths and the overlap combinatorics used throughout the package.

Paths are stored as a start vertex index plus a tuple of arrow indices, read
left to right.  Names only matter at the boundary (parsing, printing, tests).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CompositionError, PathError

__all__ = [
    "Arrow",
    "Quiver",
    "Path",
    "OverlapWitness",
    "compose",
    "proper_overlaps",
    "have_overlap",
    "is_subpath",
    "rotations",
    "is_primitive",
    "vertex_not_internal",
    "vertex_sort_key",
]


def vertex_sort_key(name: str):
    # bare integers sort numerically and before symbolic names
    if re.fullmatch(r"[0-9]+", name):
        return (0, int(name), name)
    return (1, 0, name)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """A finite quiver with named vertices and arrows.

    Vertices are kept in canonical (natural) sort order; arrows keep their
    declaration order.  Both get dense integer indices.
    """

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow | tuple]):
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise PathError(f"duplicate vertex names in {verts}")
        self.vertices: tuple[str, ...] = tuple(sorted(verts, key=vertex_sort_key))
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        arrs = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        names = [a.name for a in arrs]
        if len(set(names)) != len(names):
            raise PathError(f"duplicate arrow names in {names}")
        if set(names) & set(self.vertices):
            raise PathError("vertex and arrow names must be distinct")
        for a in arrs:
            if a.source not in self.vertex_index or a.target not in self.vertex_index:
                raise PathError(f"arrow {a.name} uses an undeclared vertex")
        self.arrows: tuple[Arrow, ...] = arrs
        self.arrow_index = {a.name: i for i, a in enumerate(arrs)}
        self.src = tuple(self.vertex_index[a.source] for a in arrs)
        self.tgt = tuple(self.vertex_index[a.target] for a in arrs)
        self.out_arrows = tuple(
            tuple(i for i in range(len(arrs)) if self.src[i] == v) for v in range(len(self.vertices))
        )
        self.in_arrows = tuple(
            tuple(i for i in range(len(arrs)) if self.tgt[i] == v) for v in range(len(self.vertices))
        )

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver(vertices={list(self.vertices)}, arrows={[a.name for a in self.arrows]})"

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def trivial(self, vertex: str) -> "Path":
        try:
            return Path(self, self.vertex_index[vertex], ())
        except KeyError:
            raise PathError(f"unknown vertex {vertex!r}") from None

    def path(self, *names: str) -> "Path":
        """Build a nonempty path from arrow names, e.g. ``q.path("alpha", "beta")``.

        A single string containing spaces is split, so ``q.path("alpha beta")``
        works as well.
        """
        if len(names) == 1 and " " in names[0]:
            names = tuple(names[0].split())
        if not names:
            raise PathError("use Quiver.trivial for trivial paths")
        try:
            idx = tuple(self.arrow_index[n] for n in names)
        except KeyError as exc:
            raise PathError(f"unknown arrow {exc.args[0]!r}") from None
        return Path.from_arrows(self, idx)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def is_composable(self, arrows: Sequence[int]) -> bool:
        return all(self.tgt[a] == self.src[b] for a, b in zip(arrows, arrows[1:]))

    def components(self) -> list[list[str]]:
        """Connected components of the underlying undirected graph."""
        parent = list(range(self.n_vertices))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for s, t in zip(self.src, self.tgt):
            parent[find(s)] = find(t)
        groups: dict[int, list[str]] = {}
        for i, v in enumerate(self.vertices):
            groups.setdefault(find(i), []).append(v)
        return sorted(groups.values(), key=lambda g: vertex_sort_key(g[0]))


@dataclass(frozen=True, eq=False)
class Path:
    """A path in a quiver: trivial at ``start`` when ``arrows`` is empty."""

    quiver: Quiver = field(repr=False)
    start: int
    arrows: tuple[int, ...]

    @classmethod
    def from_arrows(cls, quiver: Quiver, arrows: Sequence[int], start: int | None = None) -> "Path":
        arrows = tuple(arrows)
        if not arrows:
            if start is None:
                raise PathError("trivial path needs a vertex")
            return cls(quiver, start, ())
        for i, (a, b) in enumerate(zip(arrows, arrows[1:]), start=1):
            if quiver.tgt[a] != quiver.src[b]:
                raise PathError(
                    f"arrows {quiver.arrows[a].name} and {quiver.arrows[b].name} "
                    f"do not compose (junction {i})"
                )
        return cls(quiver, quiver.src[arrows[0]], arrows)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.start, self.arrows)

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other: "Path"):
        return (len(self.arrows), self.arrows, self.start) < (len(other.arrows), other.arrows, other.start)

    def __len__(self):
        return len(self.arrows)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def o(self) -> int:
        return self.start

    @property
    def t(self) -> int:
        return self.quiver.tgt[self.arrows[-1]] if self.arrows else self.start

    @property
    def origin(self) -> str:
        return self.quiver.vertices[self.o]

    @property
    def terminus(self) -> str:
        return self.quiver.vertices[self.t]

    @property
    def is_closed(self) -> bool:
        return self.o == self.t

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.quiver.arrows[a].name for a in self.arrows)

    def vertex_sequence(self) -> list[int]:
        return [self.start] + [self.quiver.tgt[a] for a in self.arrows]

    def sub(self, i: int, j: int | None = None) -> "Path":
        """Subpath made of arrows ``i:j`` (trivial at the right vertex if empty)."""
        arrows = self.arrows[i:j]
        if arrows:
            return Path(self.quiver, self.quiver.src[arrows[0]], arrows)
        n = len(self.arrows)
        i = n if i > n else (i if i >= 0 else max(n + i, 0))
        v = self.start if i == 0 else self.quiver.tgt[self.arrows[i - 1]]
        return Path(self.quiver, v, ())

    def __mul__(self, other: "Path") -> "Path":
        return compose(self, other)

    def __pow__(self, r: int) -> "Path":
        if r == 0:
            return Path(self.quiver, self.start, ())
        if not self.is_closed and r > 1:
            raise CompositionError(f"cannot take powers of the non-closed path {self}")
        return Path(self.quiver, self.start, self.arrows * r)

    def __str__(self):
        if not self.arrows:
            return f"e_{self.origin}"
        return " ".join(self.names)

    def __repr__(self):
        return f"Path({self})"


def compose(p: Path, q: Path) -> Path:
    if p.t != q.o:
        raise CompositionError(f"cannot compose {p} (ends at {p.terminus}) with {q} (starts at {q.origin})")
    if p.is_trivial:
        return q
    if q.is_trivial:
        return p
    return Path(p.quiver, p.start, p.arrows + q.arrows)


@dataclass(frozen=True)
class OverlapWitness:
    """``q`` overlaps ``p``: ``p * u == v * q`` with ``len(u) < len(q)`` and ``len(v) >= 1``."""

    shift: int
    shared: Path
    u: Path
    v: Path

    @property
    def u_trivial(self) -> bool:
        return self.u.is_trivial


def proper_overlaps(p: Path, q: Path) -> list[OverlapWitness]:
    """All witnesses of ``q`` starting strictly inside ``p`` and running to (or past) its end."""
    if p.is_trivial or q.is_trivial:
        raise PathError("overlaps are defined for nonempty paths only")
    lp, lq = len(p), len(q)
    out = []
    for k in range(max(1, lp - lq), lp):
        shared = p.arrows[k:]
        if q.arrows[: len(shared)] == shared:
            out.append(OverlapWitness(k, p.sub(k), q.sub(len(shared)), p.sub(0, k)))
    return out


def _occurs(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    n = len(small)
    return any(big[i : i + n] == small for i in range(len(big) - n + 1))


def is_subpath(p: Path, q: Path) -> bool:
    """True if ``p`` occurs as a (contiguous) subpath of ``q``."""
    if p.is_trivial:
        return p.o in q.vertex_sequence()
    return _occurs(p.arrows, q.arrows)


def have_overlap(p: Path, q: Path) -> bool:
    """Symmetric inclusive overlap predicate: either overlaps the other, or one contains the other."""
    return bool(proper_overlaps(p, q) or proper_overlaps(q, p) or is_subpath(p, q) or is_subpath(q, p))


def _require_closed(p: Path):
    if p.is_trivial or not p.is_closed:
        raise PathError(f"{p} is not a closed nonempty path")


def rotations(p: Path) -> list[Path]:
    _require_closed(p)
    arr = p.arrows
    return [Path.from_arrows(p.quiver, arr[i:] + arr[:i]) for i in range(len(arr))]


def is_primitive(p: Path) -> bool:
    _require_closed(p)
    n = len(p)
    for k in range(1, n):
        if n % k == 0 and p.arrows[:k] * (n // k) == p.arrows:
            return False
    return True


def vertex_not_internal(c: Path, v: str | int) -> bool:
    vi = c.quiver.vertex_index[v] if isinstance(v, str) else v
    if c.is_trivial or c.o != vi or c.t != vi:
        raise PathError(f"{c} is not a closed path at {c.quiver.vertices[vi]}")
    seq = c.vertex_sequence()
    return seq.count(vi) == 2
