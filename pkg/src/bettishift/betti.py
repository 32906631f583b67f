"""Graded Betti tables and maximal shift vectors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EngineBugError, InputError
from .linalg import FieldSpec


@dataclass(frozen=True)
class BettiTable:
    n: int
    field: FieldSpec
    entries: dict  # (i, j) -> positive int

    def __post_init__(self):
        for (i, j), v in self.entries.items():
            if v <= 0:
                raise InputError("Betti table stores only nonzero entries")
            if i < 0 or j < i:
                raise InputError(f"impossible Betti position ({i}, {j})")

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def projective_dimension(self):
        return max(i for i, _ in self.entries)

    def rows(self):
        """Entries as sorted [i, j, value] triples."""
        return [[i, j, v] for (i, j), v in sorted(self.entries.items())]

    def same_entries(self, other: "BettiTable") -> bool:
        return self.entries == other.entries

    def first_difference(self, other: "BettiTable"):
        keys = sorted(set(self.entries) | set(other.entries))
        for k in keys:
            if self.entries.get(k, 0) != other.entries.get(k, 0):
                return k, self.entries.get(k, 0), other.entries.get(k, 0)
        return None

    def diagram_text(self) -> str:
        """Standard Betti diagram: columns i, rows j - i."""
        p = self.projective_dimension()
        strands = sorted({j - i for (i, j) in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(p)), 1)
        header = "      " + " ".join(f"{i:>{width}}" for i in range(p + 1))
        lines = [header]
        for s in range(min(strands), max(strands) + 1):
            cells = []
            for i in range(p + 1):
                v = self.entries.get((i, i + s), 0)
                cells.append(f"{v:>{width}}" if v else "." .rjust(width))
            lines.append(f"{s:>4}: " + " ".join(cells))
        return "\n".join(lines)

    def to_json_dict(self):
        shifts = max_shifts(self)
        return {
            "field": self.field.render(),
            "betti": self.rows(),
            "t": list(shifts.t),
            "projdim": shifts.p,
        }


@dataclass(frozen=True)
class MaxShifts:
    p: int
    t: tuple[int, ...]
    field: FieldSpec = field(default=FieldSpec(2))

    def __post_init__(self):
        if len(self.t) != self.p + 1:
            raise InputError("shift vector must cover exactly 0..p")
        if self.t[0] != 0:
            raise InputError("t_0 must be 0")
        for i in range(1, self.p + 1):
            if self.t[i] < i:
                raise InputError("minimality forces t_i >= i")


def max_shifts(table: BettiTable) -> MaxShifts:
    if not table.entries:
        raise InputError("empty Betti table")
    p = table.projective_dimension()
    t = []
    for i in range(p + 1):
        js = [j for (ii, j) in table.entries if ii == i]
        if not js:
            raise EngineBugError(
                f"gap in the resolution at homological degree {i}",
                {"entries": table.rows()},
            )
        t.append(max(js))
    return MaxShifts(p, tuple(t), table.field)
