"""Betti numbers from the Taylor complex reduced modulo the maximal ideal.

The complex splits into independent components, one per multidegree (the
lcm of a generator subset). Within a component the differential entry from
F to F minus its k-th element (elements in stored generator order) is
(-1)^(k-1) when dropping the element keeps the lcm, and zero otherwise:
the monomial ratio dies in the residue field unless it is a unit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable, max_shifts
from .errors import CapExceededError, InputError
from .linalg import FieldSpec, in_column_span, rank
from .monomials import Monomial, MonomialIdeal, lcm_of

DEFAULT_GENERATOR_CAP = 18


@dataclass(frozen=True)
class TaylorBasisElement:
    subset: int  # bitmask over generator indices
    mdeg: Monomial

    @property
    def size(self):
        return bin(self.subset).count("1")


def _members(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def basis_element(I: MonomialIdeal, subset: int) -> TaylorBasisElement:
    return TaylorBasisElement(subset, lcm_of([I.gens[i] for i in _members(subset)], n=I.n))


def taylor_differential(F: TaylorBasisElement, I: MonomialIdeal):
    """Full S-linear differential of [F]: list of (ratio, sign, target)."""
    if F.subset == 0:
        raise InputError("the empty subset has no differential")
    terms = []
    for k, g in enumerate(_members(F.subset), start=1):
        sub = F.subset & ~(1 << g)
        target = basis_element(I, sub)
        ratio = F.mdeg.ratio_to(target.mdeg)
        terms.append((ratio, (-1) ** (k - 1), target))
    return terms


@dataclass(frozen=True)
class BarComponent:
    mdeg: Monomial
    bases: dict  # size a -> list of TaylorBasisElement, bitmask ascending
    matrices: dict  # size a -> matrix of d_a restricted to this component

    def sizes(self):
        return sorted(self.bases)


def _component_matrices(elements):
    """elements: list of TaylorBasisElement sharing one lcm."""
    by_size: dict[int, list[TaylorBasisElement]] = {}
    for e in sorted(elements, key=lambda e: e.subset):
        by_size.setdefault(e.size, []).append(e)
    matrices = {}
    for a, sources in by_size.items():
        targets = by_size.get(a - 1, [])
        index = {t.subset: i for i, t in enumerate(targets)}
        mat = [[0] * len(sources) for _ in targets]
        for j, src in enumerate(sources):
            sign = 1
            for g in _members(src.subset):
                sub = src.subset & ~(1 << g)
                if sub in index:  # same lcm, so the ratio is a unit
                    mat[index[sub]][j] = sign
                sign = -sign
        matrices[a] = mat
    return by_size, matrices


def bar_components(I: MonomialIdeal, cap: int = DEFAULT_GENERATOR_CAP):
    """Partition the 2^r - 1 nonempty subsets by lcm; one component each."""
    if not I.is_proper_nonzero:
        raise InputError("Taylor engine needs a proper nonzero ideal")
    if I.r > cap:
        raise CapExceededError(
            f"ideal has {I.r} generators, above the Taylor cap of {cap}; "
            "refusing rather than enumerating 2^r subsets"
        )
    groups: dict[Monomial, list[TaylorBasisElement]] = {}
    for subset in range(1, 1 << I.r):
        e = basis_element(I, subset)
        groups.setdefault(e.mdeg, []).append(e)
    components = []
    for mdeg in sorted(groups, key=lambda m: m.exponents):
        by_size, matrices = _component_matrices(groups[mdeg])
        components.append(BarComponent(mdeg, by_size, matrices))
    return components


def betti_taylor(I: MonomialIdeal, field: FieldSpec,
                 cap: int = DEFAULT_GENERATOR_CAP) -> BettiTable:
    """Accumulate dim H_a of each component into (a, total degree of lcm)."""
    entries = {(0, 0): 1}
    for comp in bar_components(I, cap):
        j = comp.mdeg.degree
        for a in comp.sizes():
            dim_c = len(comp.bases[a])
            r_a = rank(comp.matrices[a], field)
            r_next = rank(comp.matrices.get(a + 1, []), field)
            h = dim_c - r_a - r_next
            if h:
                key = (a, j)
                entries[key] = entries.get(key, 0) + h
    return BettiTable(I.n, field, entries)


@dataclass(frozen=True)
class WitnessReport:
    c: int
    target_degree: int
    found: TaylorBasisElement | None
    cycle_ok: bool
    nonboundary_ok: bool
    degree_ok: bool
    candidates_checked: int

    @property
    def established(self):
        return self.found is not None

    def to_json_dict(self, I: MonomialIdeal):
        d = {
            "c": self.c,
            "target_degree": self.target_degree,
            "established": self.established,
            "candidates_checked": self.candidates_checked,
        }
        if self.found is not None:
            d["witness"] = {
                "generators": sorted(_members(self.found.subset)),
                "lcm": self.found.mdeg.render(I.var_names),
            }
        else:
            d["note"] = "hypothesis not established (no basis-element witness)"
            d["best_candidate"] = {
                "cycle_ok": self.cycle_ok,
                "nonboundary_ok": self.nonboundary_ok,
                "degree_ok": self.degree_ok,
            }
        return d


def find_shift_witness(I: MonomialIdeal, c: int, field: FieldSpec,
                       cap: int = DEFAULT_GENERATOR_CAP) -> WitnessReport:
    """Search for a Taylor basis element of size c whose homology class is
    nonzero and whose lcm degree hits the maximal shift t_c.

    A basis element is a cycle iff every single deletion strictly drops the
    lcm; it is a nonboundary iff its coordinate vector avoids the image of
    the next differential inside its own multidegree component (exact solve).
    Candidates are scanned in ascending bitmask order so reports reproduce.
    """
    table = betti_taylor(I, field, cap)
    shifts = max_shifts(table)
    if not (1 <= c <= shifts.p):
        raise InputError(f"homological degree {c} outside 1..{shifts.p}")
    target = shifts.t[c]

    components = bar_components(I, cap)
    checked = 0
    best = (False, False, False)
    for comp in components:
        for e in comp.bases.get(c, ()):
            degree_ok = e.mdeg.degree == target
            if not degree_ok:
                continue
            checked += 1
            boundary_matrix = comp.matrices.get(c + 1, [])
            cycle_ok = all(
                (e.subset & ~(1 << g)) not in
                {t.subset for t in comp.bases.get(c - 1, ())}
                for g in _members(e.subset)
            )
            nonboundary_ok = False
            if cycle_ok:
                if boundary_matrix and boundary_matrix[0]:
                    coord = [0] * len(comp.bases[c])
                    coord[[t.subset for t in comp.bases[c]].index(e.subset)] = 1
                    nonboundary_ok = not in_column_span(boundary_matrix, coord, field)
                else:
                    nonboundary_ok = True
            if cycle_ok and nonboundary_ok:
                return WitnessReport(c, target, e, True, True, True, checked)
            best = max(best, (cycle_ok, nonboundary_ok, True))
    return WitnessReport(c, target, None, best[0], best[1],
                         best[2] if checked else False, checked)


def lcm_ratio_criterion(I: MonomialIdeal):
    """The drop-one-generator lcm test: compute the r ratios
    lcm(all gens) / lcm(all but one); the criterion holds iff every ratio
    has positive degree, and then the shift vector is subadditive.
    """
    if I.is_zero:
        raise InputError("criterion needs at least one generator")
    full = lcm_of(I.gens, n=I.n)
    ratios = []
    for i in range(I.r):
        rest = [g for k, g in enumerate(I.gens) if k != i]
        ratios.append(full.ratio_to(lcm_of(rest, n=I.n)))
    holds = all(r.degree > 0 for r in ratios)
    return holds, ratios
