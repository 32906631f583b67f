"""Reduced simplicial homology over a chosen field, by exact ranks.

The chain complex is augmented: C_{-1} is one-dimensional, spanned by the
empty face, so the homology of the empty complex {emptyset} is K in degree
-1. Bases are faces sorted by (cardinality, bitmask) so every matrix is
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, _popcount
from .errors import InputError
from .linalg import FieldSpec, rank


@dataclass(frozen=True)
class HomologyProfile:
    """dims[i] = dim_K of reduced homology in degree i, for -1 <= i <= top."""

    dims: tuple[int, ...]  # index 0 corresponds to degree -1

    def betti(self, i: int) -> int:
        k = i + 1
        if 0 <= k < len(self.dims):
            return self.dims[k]
        return 0

    def nonzero_degrees(self):
        return [k - 1 for k, d in enumerate(self.dims) if d]

    def is_all_zero(self):
        return not any(self.dims)


def boundary_matrices(delta: SimplicialComplex):
    """Augmented boundary maps d_k : C_k -> C_{k-1} for k = 0..dim(delta),
    as integer matrices (rows: (k-1)-faces, cols: k-faces)."""
    if delta.void:
        raise InputError("the void complex has no chain complex")
    by_size: dict[int, list[int]] = {}
    for f in delta.faces_by_size():
        by_size.setdefault(_popcount(f), []).append(f)
    top = max(by_size)
    matrices = []
    for k in range(0, top):  # d_k consumes faces of cardinality k+1
        sources = by_size.get(k + 1, [])
        targets = by_size.get(k, [])
        index = {f: i for i, f in enumerate(targets)}
        mat = [[0] * len(sources) for _ in targets]
        for j, f in enumerate(sources):
            sign = 1
            m = f
            while m:
                v = m & -m
                mat[index[f & ~v]][j] = sign
                sign = -sign
                m &= m - 1
        matrices.append(mat)
    return matrices


def reduced_homology(delta: SimplicialComplex, field: FieldSpec) -> HomologyProfile:
    """dims[i] = dim C_i - rank d_i - rank d_{i+1}; all-zero for void."""
    if delta.void:
        return HomologyProfile((0,))
    by_size: dict[int, int] = {}
    for f in delta.faces:
        by_size[_popcount(f)] = by_size.get(_popcount(f), 0) + 1
    top = max(by_size)
    mats = boundary_matrices(delta)
    ranks = [rank(m, field) for m in mats]  # ranks[k] = rank d_k

    def r(k):
        return ranks[k] if 0 <= k < len(ranks) else 0

    dims = []
    for i in range(-1, top):
        c_i = by_size.get(i + 1, 0)
        dims.append(c_i - r(i) - r(i + 1))
    return HomologyProfile(tuple(dims))


def check_chain_condition(delta: SimplicialComplex) -> bool:
    """d_{k-1} . d_k == 0 over the integers, for every k."""
    if delta.void:
        return True
    mats = boundary_matrices(delta)
    for k in range(1, len(mats)):
        a, b = mats[k - 1], mats[k]
        if not b or not b[0]:
            continue
        for j in range(len(b[0])):
            col = [sum(a_row[t] * b[t][j] for t in range(len(b))) for a_row in a]
            if any(col):
                return False
    return True


def euler_characteristic_consistent(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """Alternating sums of chain dims and homology dims agree."""
    if delta.void:
        return True
    chain = 0
    for f in delta.faces:
        chain += (-1) ** (_popcount(f) + 1)  # (-1)^(|f|-1), safe at |f| = 0
    prof = reduced_homology(delta, field)
    hom = sum((-1) ** (k - 1) * d for k, d in enumerate(prof.dims))
    return chain == hom
