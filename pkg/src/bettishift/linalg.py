"""Exact rank computation over GF(p) and the rationals.

Matrices are plain lists of int rows. Prime fields use in-place modular
Gaussian elimination; the rationals use fraction-free (Bareiss) elimination
so everything stays in integers. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either GF(p) for a prime p < 2^31, or the rationals (p = 0)."""

    p: int = 2

    def __post_init__(self):
        if self.p == 0:
            return
        if self.p >= 2**31 or not _is_prime(self.p):
            raise InputError(f"{self.p} is not a prime below 2^31")

    @property
    def is_rationals(self):
        return self.p == 0

    def render(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        t = text.strip()
        if t in ("Q", "QQ", "q", "rationals"):
            return FieldSpec(0)
        if t.upper().startswith("GF(") and t.endswith(")"):
            inner = t[3:-1]
            if not inner.isdigit():
                raise InputError(f"bad field spec {text!r}")
            return FieldSpec(int(inner))
        if t.isdigit():
            return FieldSpec(int(t))
        raise InputError(f"bad field spec {text!r}")


GF2 = FieldSpec(2)
QQ = FieldSpec(0)


def _rank_gf2(rows):
    """Rows packed into ints; elimination is word-parallel xor."""
    packed = []
    for row in rows:
        bits = 0
        for j, x in enumerate(row):
            if x & 1:
                bits |= 1 << j
        if bits:
            packed.append(bits)
    echelon: dict = {}  # lowest set bit -> reduced row
    rank = 0
    for row in packed:
        cur = row
        while cur:
            low = cur & -cur
            basis = echelon.get(low)
            if basis is None:
                echelon[low] = cur
                rank += 1
                break
            cur ^= basis
        # cur == 0 means the row was dependent
    return rank


def _rank_mod_p(rows, ncols, p):
    rows = [[x % p for x in row] for row in rows]
    rank = 0
    col = 0
    nrows = len(rows)
    while rank < nrows and col < ncols:
        pivot = None
        for i in range(rank, nrows):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = rows[rank]
        for i in range(rank + 1, nrows):
            f = (rows[i][col] * inv) % p
            if f:
                ri = rows[i]
                for j in range(col, ncols):
                    ri[j] = (ri[j] - f * prow[j]) % p
        rank += 1
        col += 1
    return rank


def _rank_bareiss(rows, ncols):
    """Fraction-free elimination with lazy row scaling.

    A row untouched for several steps only ever needs the telescoped
    factor pivot_now / pivot_then, and that product stays integral by the
    usual one-step exact-division argument, so rows with a zero entry in
    the pivot column are skipped outright. On sparse matrices this is the
    difference between usable and not.
    """
    rows = [list(row) for row in rows]
    nrows = len(rows)
    levels = [0] * nrows  # index into pivots; pivots[0] = 1
    pivots = [1]
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        pivot = None
        for i in range(rank, nrows):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        levels[rank], levels[pivot] = levels[pivot], levels[rank]
        prow = rows[rank]
        if levels[rank] != len(pivots) - 1:
            scale, base = pivots[-1], pivots[levels[rank]]
            for j in range(col, ncols):
                if prow[j]:
                    prow[j] = prow[j] * scale // base
        prev = pivots[-1]
        pv = prow[col]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            if not ri[col]:
                continue  # stays at its old level
            if levels[i] != len(pivots) - 1:
                scale, base = pivots[-1], pivots[levels[i]]
                for j in range(col, ncols):
                    if ri[j]:
                        ri[j] = ri[j] * scale // base
            f = ri[col]
            for j in range(col, ncols):
                ri[j] = (pv * ri[j] - f * prow[j]) // prev
            levels[i] = len(pivots)
        pivots.append(pv)
        levels[rank] = len(pivots) - 1
        rank += 1
        col += 1
    return rank


def rank(matrix, field: FieldSpec) -> int:
    """Exact rank of an integer matrix over the given field."""
    rows = [row for row in matrix if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise InputError("ragged matrix")
    if field.is_rationals:
        return _rank_bareiss(rows, ncols)
    if field.p == 2:
        return _rank_gf2(rows)
    return _rank_mod_p(rows, ncols, field.p)


def in_column_span(matrix, vector, field: FieldSpec) -> bool:
    """Whether vector lies in the column space of matrix over the field.

    Decided exactly by comparing rank(M) with rank(M | v).
    """
    nrows = len(vector)
    if matrix and len(matrix) != nrows:
        raise InputError("matrix/vector size mismatch")
    base = [list(matrix[i]) for i in range(nrows)] if matrix else [[] for _ in range(nrows)]
    augmented = [base[i] + [vector[i]] for i in range(nrows)]
    return rank(base, field) == rank(augmented, field)
