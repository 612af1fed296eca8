"""Sparse exact linear algebra over Q.

Vectors are ``dict[int, Fraction]`` with zero entries omitted.  Everything the
package computes has 0/±1 inputs, so Fractions stay small.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Vec = dict  # dict[int, Fraction]


def add_scaled(target: Vec, source: Mapping[int, Fraction], scale) -> None:
    """target += scale * source, in place."""
    for k, val in source.items():
        new = target.get(k, 0) + scale * val
        if new:
            target[k] = new
        else:
            target.pop(k, None)


def scale(vec: Mapping[int, Fraction], c) -> Vec:
    return {k: c * v for k, v in vec.items()} if c else {}


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``rows`` maps pivot column to a row with a 1 at the pivot and zeros in
    every other pivot column.
    """

    def __init__(self, vectors: Iterable[Mapping[int, Fraction]] = ()):
        self.rows: dict[int, Vec] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, vec: Mapping[int, Fraction]) -> Vec:
        r = dict(vec)
        for c in [c for c in r if c in self.rows]:
            coeff = r.get(c)
            if coeff:
                add_scaled(r, self.rows[c], -coeff)
        return r

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        r = self.reduce(vec)
        if not r:
            return False
        piv = min(r)
        inv = Fraction(1) / r[piv]
        r = {k: v * inv for k, v in r.items()}
        for row in self.rows.values():
            coeff = row.get(piv)
            if coeff:
                add_scaled(row, r, -coeff)
        self.rows[piv] = r
        return True

    def __contains__(self, vec) -> bool:
        return not self.reduce(vec)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set[int]:
        return set(self.rows)


def rank(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    return Echelon(vectors).rank


def nullspace(columns: list[Mapping[int, Fraction]]) -> tuple[list[Vec], list[int]]:
    """Kernel of the matrix whose j-th column is ``columns[j]``.

    Returns ``(basis, free)``: ``basis[i]`` has a 1 at column ``free[i]`` and
    zeros at every other free column, so the coordinates of a kernel vector
    ``w`` in this basis are just ``[w.get(f, 0) for f in free]``.
    """
    rows: dict[int, Vec] = {}
    for j, col in enumerate(columns):
        for i, val in col.items():
            rows.setdefault(i, {})[j] = Fraction(val)
    ech = Echelon(rows[i] for i in sorted(rows))
    free = [j for j in range(len(columns)) if j not in ech.rows]
    basis = []
    for f in free:
        v: Vec = {f: Fraction(1)}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis, free


def solve_in_span(basis: list[Mapping[int, Fraction]], target: Mapping[int, Fraction]) -> list[Fraction] | None:
    """Coefficients x with sum x_i basis_i == target, or None if target is not in the span."""
    n = len(basis)
    # augment each basis vector with a tag coordinate to recover coefficients
    offset = 1 + max([max(b, default=-1) for b in basis] + [max(target, default=-1)])
    ech = Echelon()
    for i, b in enumerate(basis):
        v = dict(b)
        v[offset + i] = Fraction(1)
        ech.add(v)
    r = ech.reduce(target)
    if any(k < offset for k in r):
        return None
    # target - sum(x_i b_i) reduces to zero in the low block; the tags record -x
    return [-r.get(offset + i, Fraction(0)) for i in range(n)]
