"""Simplicial complexes on [n] stored by minimal non-faces.

Membership queries never enumerate faces; face enumeration is explicit and
reserved for homology and for union re-minimalization, both at desk scale.

The void complex (no faces at all, not even the empty set) and the empty
complex {emptyset} are distinct. The distinction carries real weight: the
empty complex has one-dimensional reduced homology in degree -1, the void
complex has none anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError
from .monomials import Monomial, MonomialIdeal


def _popcount(x):
    return bin(x).count("1")


def _subsets_of(mask):
    """All submasks of mask, ascending as integers."""
    subs = [0]
    m = mask
    while m:
        low = m & -m
        subs += [s | low for s in subs]
        m &= m - 1
    return sorted(subs)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    non_faces: tuple[int, ...]  # minimal non-faces as bitmasks, antichain
    vertex_mask: int
    void: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise InputError("negative vertex count")
        if self.void:
            return
        for nf in self.non_faces:
            if nf & ~((1 << self.n) - 1):
                raise InputError("non-face outside the vertex range")
            if _popcount(nf) == 1 and (nf & self.vertex_mask):
                raise InputError("singleton non-face overlaps the vertex mask")
        for a in self.non_faces:
            for b in self.non_faces:
                if a != b and (a & b) == a:
                    raise InputError("non-faces are not an antichain")

    @staticmethod
    def make_void(n):
        return SimplicialComplex(n, (), 0, void=True)

    @staticmethod
    def empty(n):
        """The complex {emptyset}."""
        return SimplicialComplex(n, (), 0)

    @staticmethod
    def full_simplex(n):
        return SimplicialComplex(n, (), (1 << n) - 1)

    def is_face(self, mask: int) -> bool:
        if self.void:
            return False
        if mask & ~self.vertex_mask:
            return False
        return all((nf & mask) != nf for nf in self.non_faces)

    @cached_property
    def faces(self) -> frozenset:
        if self.void:
            return frozenset()
        return frozenset(s for s in _subsets_of(self.vertex_mask) if self.is_face(s))

    def faces_by_size(self):
        """Faces sorted by (cardinality, bitmask); the homology basis order."""
        return sorted(self.faces, key=lambda f: (_popcount(f), f))

    def dimension(self):
        """max |F| - 1 over faces; -1 for {emptyset}; None for the void complex."""
        if self.void:
            return None
        best = 0
        for f in self.faces:
            c = _popcount(f)
            if c > best:
                best = c
        return best - 1

    def induced(self, w_mask: int) -> "SimplicialComplex":
        if self.void:
            return self
        vm = self.vertex_mask & w_mask
        nfs = tuple(nf for nf in self.non_faces if (nf & vm) == nf)
        return SimplicialComplex(self.n, nfs, vm)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        if self.n != other.n:
            return False
        if self.void:
            return True
        return self.faces <= other.faces


def from_faces(n: int, faces) -> SimplicialComplex:
    """Rebuild the minimal non-face representation from a downward-closed
    face set. Brute force over subsets of the spanned vertex set."""
    faces = frozenset(faces)
    if not faces:
        return SimplicialComplex.make_void(n)
    if 0 not in faces:
        raise InputError("nonempty face set must contain the empty face")
    vm = 0
    for v in range(n):
        if (1 << v) in faces:
            vm |= 1 << v
    non_faces = []
    for s in _subsets_of(vm):
        if s in faces or _popcount(s) < 2:
            continue
        # minimal non-face of a downward-closed family: every codim-1
        # subset is a face
        if all((s & ~(1 << v)) in faces for v in range(n) if s & (1 << v)):
            non_faces.append(s)
    return SimplicialComplex(n, tuple(non_faces), vm)


def from_stanley_reisner(I: MonomialIdeal) -> SimplicialComplex:
    """Complex whose minimal non-faces are the generator supports."""
    if not I.is_proper_nonzero:
        raise InputError("Stanley-Reisner translation needs a proper nonzero ideal")
    if not I.is_squarefree:
        raise InputError("Stanley-Reisner translation needs a squarefree ideal")
    vm = (1 << I.n) - 1
    supports = [g.support() for g in I.gens]
    for s in supports:
        if _popcount(s) == 1:
            vm &= ~s
    nfs = tuple(s for s in supports if _popcount(s) > 1)
    return SimplicialComplex(I.n, nfs, vm)


def stanley_reisner_ideal(delta: SimplicialComplex, var_names=None) -> MonomialIdeal:
    """Inverse translation; fails on the full simplex (zero ideal)."""
    if delta.void:
        raise InputError("void complex has no Stanley-Reisner ideal in a proper ring")
    if var_names is None:
        var_names = tuple(f"x{i + 1}" for i in range(delta.n))
    gens = []
    masks = list(delta.non_faces)
    for v in range(delta.n):
        if not (delta.vertex_mask & (1 << v)):
            masks.append(1 << v)
    for mask in sorted(masks, key=lambda s: (_popcount(s), s)):
        gens.append(Monomial(tuple(1 if mask & (1 << i) else 0 for i in range(delta.n))))
    if not gens:
        raise InputError("full simplex corresponds to the zero ideal")
    return MonomialIdeal(delta.n, tuple(var_names), tuple(gens))


@dataclass(frozen=True)
class SubcomplexFamily:
    members: tuple[SimplicialComplex, ...]

    def __post_init__(self):
        if not self.members:
            raise InputError("family needs at least one member")
        n = self.members[0].n
        for m in self.members:
            if m.n != n:
                raise InputError("family members disagree on the vertex count")
            # every complex on [n] is a subcomplex of the full simplex, and
            # post_init already pins masks inside the vertex range; the shared
            # ambient check therefore reduces to the shared-n check above

    @property
    def n(self):
        return self.members[0].n


def union_family(fam: SubcomplexFamily) -> SimplicialComplex:
    faces = frozenset().union(*(m.faces for m in fam.members))
    return from_faces(fam.n, faces)


def intersect_family(fam: SubcomplexFamily) -> SimplicialComplex:
    faces = fam.members[0].faces
    for m in fam.members[1:]:
        faces = faces & m.faces
    return from_faces(fam.n, faces)


def parse_facet_complex(text: str, n: int | None = None) -> SimplicialComplex:
    """Parse the fixture form `facets: 1 2 3; 2 4` (1-based vertices)."""
    body = text.strip()
    if body.startswith("facets:"):
        body = body[len("facets:"):]
    elif body.startswith("facets"):
        body = body[len("facets"):]
    else:
        raise InputError("facet fixture must start with 'facets:'")
    facet_masks = []
    max_v = 0
    for chunk in body.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        mask = 0
        for word in chunk.split():
            if not word.isdigit() or int(word) < 1:
                raise InputError(f"bad vertex label {word!r} in facet fixture")
            v = int(word)
            max_v = max(max_v, v)
            mask |= 1 << (v - 1)
        facet_masks.append(mask)
    if n is None:
        n = max_v
    if max_v > n:
        raise InputError("facet vertex exceeds the declared vertex count")
    faces = set()
    for fm in facet_masks:
        faces.update(_subsets_of(fm))
    if not facet_masks:
        faces.add(0)
    return from_faces(n, faces)


def render_facet_complex(delta: SimplicialComplex) -> str:
    """Canonical facet-list form; facets sorted by (size, mask)."""
    if delta.void:
        return "facets:"
    facets = []
    for f in delta.faces:
        if not any(g != f and (g & f) == f for g in delta.faces):
            facets.append(f)
    facets.sort(key=lambda m: (_popcount(m), m))
    parts = []
    for m in facets:
        if m == 0:
            continue
        parts.append(" ".join(str(v + 1) for v in range(delta.n) if m & (1 << v)))
    return "facets: " + "; ".join(parts)
