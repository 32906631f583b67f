"""Inequality checkers over a maximal-shift vector.

Two of these (the partial-sum bound and the step bound) are proved for all
monomial ideals, so a reported violation means the Betti engines are broken,
not that mathematics is. Plain subadditivity is open for monomial ideals in
general: a violation there is a finding, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .betti import MaxShifts, max_shifts
from .complexes import SimplicialComplex
from .errors import InputError
from .hochster import betti_hochster
from .linalg import FieldSpec


@dataclass(frozen=True)
class Case:
    indices: tuple
    lhs: int
    rhs: int

    @property
    def holds(self):
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class InequalityReport:
    name: str
    field_tag: str
    cases: tuple[Case, ...]
    skipped: tuple = ()

    @property
    def all_hold(self):
        return all(c.holds for c in self.cases)

    def violations(self):
        return [c for c in self.cases if not c.holds]

    def to_json_dict(self):
        return {
            "name": self.name,
            "field": self.field_tag,
            "all_hold": self.all_hold,
            "cases": [
                {"indices": list(c.indices), "lhs": c.lhs, "rhs": c.rhs,
                 "holds": c.holds}
                for c in self.cases
            ],
            "skipped": [list(s) for s in self.skipped],
        }

    def csv_rows(self):
        for c in self.cases:
            yield [self.name, *c.indices, c.lhs, c.rhs, int(c.holds)]


def check_subadditivity(t: MaxShifts) -> InequalityReport:
    """t_{a+b} <= t_a + t_b over all 0 <= a <= b with a + b <= p."""
    cases = []
    for a in range(t.p + 1):
        for b in range(a, t.p + 1 - a):
            cases.append(Case((a, b), t.t[a + b], t.t[a] + t.t[b]))
    return InequalityReport("subadditivity", t.field.render(), tuple(cases))


def check_partial_sum_bound(t: MaxShifts) -> InequalityReport:
    """t_{a+b} <= t_a + t_1 + ... + t_b - b(b-1)/2 for b >= 1, a >= b - 1,
    a + b <= p. Proved for every monomial ideal."""
    cases = []
    prefix = [0]
    for i in range(1, t.p + 1):
        prefix.append(prefix[-1] + t.t[i])
    for b in range(1, t.p + 1):
        for a in range(b - 1, t.p + 1 - b):
            rhs = t.t[a] + prefix[b] - b * (b - 1) // 2
            cases.append(Case((a, b), t.t[a + b], rhs))
    return InequalityReport("partial_sum_bound", t.field.render(), tuple(cases))


def check_step_bound(t: MaxShifts) -> InequalityReport:
    """t_{c+1} <= t_c + t_d - d + 1 for d >= 1, d - 1 <= c, c + 1 <= p.
    Proved for every monomial ideal."""
    cases = []
    for c in range(t.p):
        for d in range(1, c + 2):
            cases.append(Case((c, d), t.t[c + 1], t.t[c] + t.t[d] - d + 1))
    return InequalityReport("step_bound", t.field.render(), tuple(cases))


@dataclass(frozen=True)
class ConditionalResult:
    hypothesis: bool
    conclusion: bool | None  # None when the hypothesis fails (skipped)
    detail: dict = field(default_factory=dict)

    @property
    def consistent(self):
        """False only on (hypothesis true, conclusion false)."""
        return not (self.hypothesis and self.conclusion is False)


def check_low_dimension_bound(delta: SimplicialComplex, t: MaxShifts,
                              a: int, b: int) -> ConditionalResult:
    """If dim(Delta) < t_a - a or dim(Delta) < t_b - b then
    t_{a+b} <= t_a + t_b.

    The source statement ranges over a, b <= p individually but its
    conclusion reads t_{a+b}, which only exists for a + b <= p; we guard
    on a + b <= p and record that reading in the result detail.
    """
    if a < 0 or b < 0 or a > t.p or b > t.p:
        raise InputError("a and b must lie in 0..p")
    if a + b > t.p:
        raise InputError("a + b exceeds the projective dimension")
    dim = delta.dimension()
    if dim is None:
        raise InputError("void complex has no dimension")
    hypothesis = dim < t.t[a] - a or dim < t.t[b] - b
    detail = {
        "dim": dim, "a": a, "b": b,
        "index_range_note": "guarded to a+b <= projdim",
    }
    if not hypothesis:
        return ConditionalResult(False, None, detail)
    return ConditionalResult(True, t.t[a + b] <= t.t[a] + t.t[b], detail)


def shift_vector_of_complex(delta: SimplicialComplex, field: FieldSpec) -> MaxShifts:
    return max_shifts(betti_hochster(delta, field))
