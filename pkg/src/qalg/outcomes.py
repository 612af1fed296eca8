"""Small result types shared by the homological modules."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Finite:
    n: int

    def __str__(self):
        return str(self.n)

    def to_json(self):
        return {"kind": "finite", "value": self.n}


@dataclass(frozen=True)
class Infinite:
    certificate: Any = field(default=None, compare=False)

    def __str__(self):
        return "infinite"

    def to_json(self):
        return {"kind": "infinite"}


@dataclass(frozen=True)
class AtLeast:
    n: int

    def __str__(self):
        return f">= {self.n}"

    def to_json(self):
        return {"kind": "at-least", "value": self.n}


Dimension = Finite | Infinite | AtLeast


def max_dimension(dims) -> Dimension:
    dims = list(dims)
    if any(isinstance(d, Infinite) for d in dims):
        return next(d for d in dims if isinstance(d, Infinite))
    bounds = [d for d in dims if isinstance(d, AtLeast)]
    finite = max((d.n for d in dims if isinstance(d, Finite)), default=0)
    if bounds:
        return AtLeast(max([b.n for b in bounds] + [finite]))
    return Finite(finite)
