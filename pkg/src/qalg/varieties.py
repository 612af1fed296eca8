"""Support varieties of simple modules over a stacked monomial algebra.

The variety of S_v is nontrivial exactly when v is the base of a qualifying
closed path or the origin of some rotation of a qualifying closed trail.
Each such generator contributes one coordinate line to V(S_v).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .algebra import MonomialAlgebra
from .chains import StackedVerdict
from .hochschild import HHPresentation
from .outcomes import Finite

__all__ = [
    "Status",
    "PropertyOutcome",
    "SimpleVarietyReport",
    "classify_simples",
    "check_all_nontrivial_implies_A1",
    "fg_consequence_report",
]


class Status(str, Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "Nontrivial"

    def __str__(self):
        return self.value


class PropertyOutcome(str, Enum):
    PASS = "Pass"
    VACUOUSLY_TRUE = "VacuouslyTrue"
    FAIL = "Fail"

    def __str__(self):
        return self.value


@dataclass
class SimpleVarietyReport:
    vertex: str
    status: Status
    witnesses: list[int] = field(default_factory=list)

    @property
    def lines_in_variety(self) -> int:
        return len(self.witnesses)

    @property
    def trivial_point_note(self) -> str | None:
        if self.status is Status.TRIVIAL:
            return "V(S) = {(x_1, ..., x_r)}"
        return None

    def to_json(self):
        return {"status": str(self.status), "witnesses": self.witnesses, "lines_in_variety": self.lines_in_variety}


def classify_simples(alg: MonomialAlgebra, pres: HHPresentation) -> list[SimpleVarietyReport]:
    witnesses: dict[str, list[int]] = {v: [] for v in alg.quiver.vertices}
    for g in pres.generators:
        for v in sorted(set(g.base_vertices)):
            witnesses[v].append(g.index)
    out = []
    for v in alg.quiver.vertices:
        w = sorted(witnesses[v])
        out.append(SimpleVarietyReport(v, Status.NONTRIVIAL if w else Status.TRIVIAL, w))
    return out


def check_all_nontrivial_implies_A1(alg: MonomialAlgebra, verdict: StackedVerdict, reports) -> PropertyOutcome:
    if any(r.status is Status.TRIVIAL for r in reports):
        return PropertyOutcome.VACUOUSLY_TRUE
    return PropertyOutcome.PASS if verdict.A == 1 else PropertyOutcome.FAIL


@dataclass
class FgConsistency:
    vertex: str
    status: Status
    projective_dimension: object
    consistent: bool

    @property
    def note(self) -> str:
        if self.consistent:
            return "trivial variety iff finite pd"
        return "mismatch: (Fg1) and (Fg2) cannot both hold"


def fg_consequence_report(reports, pds: dict) -> list[FgConsistency]:
    """Per vertex, whether 'trivial variety' agrees with 'finite projective dimension'.

    ``pds`` maps vertex name to a Finite / Infinite / AtLeast outcome.
    AtLeast counts as not finite, since only an exact value certifies finiteness.
    """
    out = []
    for r in reports:
        pd = pds[r.vertex]
        finite = isinstance(pd, Finite)
        out.append(FgConsistency(r.vertex, r.status, pd, finite == (r.status is Status.TRIVIAL)))
    return out
