"""Instance-level verification of the two vanishing statements, seeded
random instance generation, and the cross-oracle fuzz campaign.

Both vanishing statements are proved, so the verifiers treat them as
oracles for the homology and Betti engines: an instance with a true
hypothesis and a false conclusion aborts with a reproduction bundle.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .betti import max_shifts
from .complexes import (SimplicialComplex, SubcomplexFamily, _popcount,
                        union_family, intersect_family)
from .errors import CapExceededError, EngineBugError, InputError
from .hochster import betti_hochster, betti_of_ideal
from .homology import reduced_homology
from .inequalities import (ConditionalResult, check_partial_sum_bound,
                           check_step_bound, check_subadditivity)
from .linalg import GF2, FieldSpec
from .monomials import Monomial, MonomialIdeal, minimalize
from .taylor import find_shift_witness, lcm_ratio_criterion


def verify_union_vanishing(fam: SubcomplexFamily, j: int,
                           field: FieldSpec) -> ConditionalResult:
    """Union of subcomplexes: if every r-fold intersection has vanishing
    reduced homology in degree j - r + 1, the union vanishes in degree j.

    The hypothesis is checked by enumerating all 2^t - 1 nonempty index
    subsets of the family.
    """
    t = len(fam.members)
    hypothesis = True
    for r in range(1, t + 1):
        for combo in combinations(range(t), r):
            inter = intersect_family(SubcomplexFamily(
                tuple(fam.members[i] for i in combo)))
            if reduced_homology(inter, field).betti(j - r + 1) != 0:
                hypothesis = False
                break
        if not hypothesis:
            break
    if not hypothesis:
        return ConditionalResult(False, None, {"j": j, "t": t})
    union = union_family(fam)
    conclusion = reduced_homology(union, field).betti(j) == 0
    return ConditionalResult(True, conclusion, {"j": j, "t": t})


def verify_cover_vanishing(delta: SimplicialComplex, w_mask: int, a_mask: int,
                           a: int, s: int, l: int,
                           field: FieldSpec) -> ConditionalResult:
    """Drop-l-vertices cover: with |W| = t_a + s + l + 1 and A inside W of
    size s' + l (0 <= s' <= s), the union of the induced subcomplexes on
    W minus B over all l-subsets B of A has vanishing reduced homology in
    degree t_a - a + s.
    """
    detail: dict = {"a": a, "s": s, "l": l, "W": w_mask, "A": a_mask}
    if a_mask & ~w_mask:
        return ConditionalResult(False, None, {**detail, "reason": "A not inside W"})
    if l < 1 or s < 0:
        return ConditionalResult(False, None, {**detail, "reason": "need l >= 1, s >= 0"})
    size_a = _popcount(a_mask)
    if not (l <= size_a <= s + l):
        return ConditionalResult(False, None,
                                 {**detail, "reason": "|A| outside l..s+l"})
    try:
        shifts = max_shifts(betti_hochster(delta, field))
    except InputError as exc:
        return ConditionalResult(False, None, {**detail, "reason": str(exc)})
    if a > shifts.p:
        return ConditionalResult(False, None,
                                 {**detail, "reason": "a above the projective dimension"})
    t_a = shifts.t[a]
    if _popcount(w_mask) != t_a + s + l + 1:
        return ConditionalResult(
            False, None, {**detail, "reason": f"|W| must be t_a+s+l+1 = {t_a + s + l + 1}"})

    vertices_of_a = [v for v in range(delta.n) if a_mask & (1 << v)]
    members = []
    for combo in combinations(vertices_of_a, l):
        b_mask = 0
        for v in combo:
            b_mask |= 1 << v
        members.append(delta.induced(w_mask & ~b_mask))
    union = union_family(SubcomplexFamily(tuple(members)))
    degree = t_a - a + s
    conclusion = reduced_homology(union, field).betti(degree) == 0
    return ConditionalResult(True, conclusion, {**detail, "t_a": t_a, "degree": degree})


@dataclass(frozen=True)
class FuzzConfig:
    seed: int
    trials: int
    n_range: tuple[int, int] = (2, 6)
    r_range: tuple[int, int] = (1, 6)
    maxdeg: int = 4
    squarefree_only: bool = False
    fields: tuple[FieldSpec, ...] = (GF2,)
    cross_check: bool = True
    # the Hochster route costs about 3^n; past this many vertices (after
    # polarization) a trial silently takes the Taylor route instead
    cross_check_vertex_cap: int = 10
    retry_budget: int = 200

    def to_json_dict(self):
        return {
            "seed": self.seed,
            "trials": self.trials,
            "n_range": list(self.n_range),
            "r_range": list(self.r_range),
            "maxdeg": self.maxdeg,
            "squarefree_only": self.squarefree_only,
            "fields": [f.render() for f in self.fields],
            "cross_check": self.cross_check,
            "cross_check_vertex_cap": self.cross_check_vertex_cap,
        }

    @staticmethod
    def from_json_dict(d) -> "FuzzConfig":
        return FuzzConfig(
            seed=d["seed"],
            trials=d["trials"],
            n_range=tuple(d.get("n_range", (2, 6))),
            r_range=tuple(d.get("r_range", (1, 6))),
            maxdeg=d.get("maxdeg", 4),
            squarefree_only=d.get("squarefree_only", False),
            fields=tuple(FieldSpec.parse(f) for f in d.get("fields", ["GF(2)"])),
            cross_check=d.get("cross_check", True),
            cross_check_vertex_cap=d.get("cross_check_vertex_cap", 10),
        )


_VAR_POOL = tuple("abcdefghijklmnop")


def random_ideal(cfg: FuzzConfig, index: int) -> MonomialIdeal:
    """Deterministic function of (seed, index); proper nonzero by redrawing."""
    if index >= cfg.trials:
        raise InputError("trial index beyond the configured count")
    rng = random.Random(f"{cfg.seed}:{index}")
    for _ in range(cfg.retry_budget):
        n = rng.randint(*cfg.n_range)
        r = rng.randint(*cfg.r_range)
        names = _VAR_POOL[:n]
        gens = []
        for _ in range(r):
            while True:
                if cfg.squarefree_only:
                    exps = tuple(rng.randint(0, 1) for _ in range(n))
                else:
                    exps = tuple(rng.randint(0, cfg.maxdeg) for _ in range(n))
                if any(exps):
                    break
            gens.append(Monomial(exps))
        ideal = minimalize(gens, n, names)
        if ideal.is_proper_nonzero:
            return ideal
    raise InputError("retry budget exhausted; config only produces degenerate ideals")


CSV_HEADER = ["index", "field", "n", "r", "ideal", "method", "projdim", "t",
              "subadditivity", "partial_sum_bound", "step_bound",
              "criterion_holds", "witness_at_r", "criterion_subadditive"]


@dataclass
class TrialRow:
    index: int
    field_tag: str
    n: int
    r: int
    ideal_text: str
    method: str
    p: int
    t: tuple[int, ...]
    subadditive: bool
    partial_sum_ok: bool
    step_ok: bool
    criterion_holds: bool
    witness_at_r: bool | None
    criterion_subadditive: bool | None

    def csv_values(self):
        def tri(v):
            return "" if v is None else int(v)
        return [self.index, self.field_tag, self.n, self.r, self.ideal_text,
                self.method, self.p, " ".join(map(str, self.t)),
                int(self.subadditive), int(self.partial_sum_ok),
                int(self.step_ok), int(self.criterion_holds),
                tri(self.witness_at_r), tri(self.criterion_subadditive)]


@dataclass
class CampaignReport:
    config: FuzzConfig
    rows: list = dc_field(default_factory=list)

    def summary(self):
        return {
            "config": self.config.to_json_dict(),
            "trials": self.config.trials,
            "rows": len(self.rows),
            "subadditivity_violations": sum(1 for r in self.rows if not r.subadditive),
            "theorem_violations": sum(
                1 for r in self.rows if not (r.partial_sum_ok and r.step_ok)),
            "criterion_held": sum(1 for r in self.rows if r.criterion_holds),
        }


def _repro_bundle(cfg: FuzzConfig, index: int, ideal: MonomialIdeal,
                  field: FieldSpec, what: str):
    return {
        "what": what,
        "config": cfg.to_json_dict(),
        "index": index,
        "ideal": ideal.render(),
        "field": field.render(),
    }


def run_trial(cfg: FuzzConfig, index: int) -> list:
    """All per-field rows for one trial; raises EngineBugError on any
    proved-statement violation or engine disagreement."""
    ideal = random_ideal(cfg, index)
    polarized_n = sum(max(g.exponents[i] for g in ideal.gens)
                      for i in range(ideal.n))
    cross_check = cfg.cross_check and polarized_n <= cfg.cross_check_vertex_cap
    rows = []
    for field in cfg.fields:
        method = "taylor"
        if cross_check:
            try:
                table = betti_of_ideal(ideal, field, "both")
                method = "both"
            except EngineBugError as exc:
                exc.diagnostics.update(
                    _repro_bundle(cfg, index, ideal, field, "cross-check mismatch"))
                raise
            except CapExceededError:
                # polarization can push n past the Hochster cap; the Taylor
                # route only depends on r and stays in budget
                table = betti_of_ideal(ideal, field, "taylor")
        else:
            table = betti_of_ideal(ideal, field, "taylor")
        shifts = max_shifts(table)

        sub = check_subadditivity(shifts)
        partial = check_partial_sum_bound(shifts)
        step = check_step_bound(shifts)
        if not (partial.all_hold and step.all_hold):
            raise EngineBugError(
                "proved inequality violated",
                _repro_bundle(cfg, index, ideal, field, "theorem violation"))

        holds, _ = lcm_ratio_criterion(ideal)
        witness_at_r = None
        criterion_sub = None
        if holds:
            criterion_sub = sub.all_hold
            witness = find_shift_witness(ideal, ideal.r, field)
            full_mask = (1 << ideal.r) - 1
            witness_at_r = (witness.established
                            and witness.found.subset == full_mask)
            if not (criterion_sub and witness_at_r):
                raise EngineBugError(
                    "lcm-ratio criterion held but its consequences failed",
                    _repro_bundle(cfg, index, ideal, field, "criterion violation"))

        rows.append(TrialRow(
            index, field.render(), ideal.n, ideal.r, ideal.render(), method,
            shifts.p, shifts.t, sub.all_hold, partial.all_hold, step.all_hold,
            holds, witness_at_r, criterion_sub))
    return rows


def fuzz_campaign(cfg: FuzzConfig) -> CampaignReport:
    """Run every trial; BETTISHIFT_THREADS > 1 fans trials out to a thread
    pool, with results merged in trial order so the report is identical
    either way."""
    report = CampaignReport(cfg)
    threads = int(os.environ.get("BETTISHIFT_THREADS", "1"))
    if threads > 1 and cfg.trials > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for rows in pool.map(lambda i: run_trial(cfg, i), range(cfg.trials)):
                report.rows.extend(rows)
    else:
        for index in range(cfg.trials):
            report.rows.extend(run_trial(cfg, index))
    return report


def write_campaign_csv(report: CampaignReport, stream):
    import csv

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(row.csv_values())
