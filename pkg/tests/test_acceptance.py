"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with -s to see the lines as they complete; each test also enforces its
runtime target.
"""

import io
import random
import sys
import time

from bettishift import (GF2, QQ, FuzzConfig, SubcomplexFamily, betti_of_ideal,
                        betti_taylor, check_partial_sum_bound, check_step_bound,
                        check_subadditivity, find_shift_witness,
                        from_stanley_reisner, fuzz_campaign,
                        lcm_ratio_criterion, max_shifts, parse_facet_complex,
                        parse_ideal, random_ideal, reduced_homology,
                        verify_cover_vanishing, verify_union_vanishing)
from bettishift.complexes import from_faces, _subsets_of
from bettishift.homology import (check_chain_condition,
                                 euler_characteristic_consistent)
from bettishift.verify import write_campaign_csv

SHOWCASE_TEXT = "a^4*b*c; b^3*c^2; c^5*a^3"
RP2_FACETS = ("facets: 1 2 3; 1 2 4; 1 3 5; 1 4 6; 1 5 6; "
              "2 3 6; 2 4 5; 2 5 6; 3 4 5; 3 4 6")


def _report(name, ok, elapsed, budget):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    print(f"[{status}] {name} ({elapsed:.2f}s, budget {budget:.0f}s)",
          file=sys.stderr)
    assert ok, name
    assert elapsed < budget, f"{name} exceeded {budget}s"


def test_criterion_1_worked_example():
    start = time.monotonic()
    ideal = parse_ideal(SHOWCASE_TEXT)
    holds, ratios = lcm_ratio_criterion(ideal)
    rendered = [r.render(ideal.var_names) for r in ratios]
    shifts = max_shifts(betti_taylor(ideal, GF2))
    ok = (holds
          and rendered == ["a", "b^2", "c^3"]
          and check_subadditivity(shifts).all_hold)
    _report("1 worked example: criterion ratios and subadditivity",
            ok, time.monotonic() - start, 1.0)


def test_criterion_2_cross_oracle():
    start = time.monotonic()
    cfg = FuzzConfig(seed=20001, trials=200, n_range=(2, 7), r_range=(1, 7),
                     squarefree_only=True)
    mismatches = 0
    for i in range(cfg.trials):
        ideal = random_ideal(cfg, i)
        for field in (GF2, QQ):
            betti_of_ideal(ideal, field, "both")  # raises on disagreement
    _report("2 cross-oracle: 200 squarefree ideals, two engines, two fields",
            mismatches == 0, time.monotonic() - start, 120.0)


def _theorem_trials():
    cfg = FuzzConfig(seed=30001, trials=500, n_range=(2, 6), r_range=(1, 6),
                     maxdeg=4)
    for i in range(cfg.trials):
        ideal = random_ideal(cfg, i)
        yield ideal, max_shifts(betti_taylor(ideal, GF2))


def test_criterion_3_proved_inequalities():
    start = time.monotonic()
    violations = 0
    b1_violations = 0
    for _, shifts in _theorem_trials():
        if not (check_partial_sum_bound(shifts).all_hold
                and check_step_bound(shifts).all_hold):
            violations += 1
        t = shifts.t
        for a in range(shifts.p):
            if t[a + 1] > t[a] + t[1]:
                b1_violations += 1
    _report("3 proved inequalities: 500 ideals, zero violations, b=1 slice",
            violations == 0 and b1_violations == 0,
            time.monotonic() - start, 300.0)


def test_criterion_4_criterion_consequences():
    start = time.monotonic()
    held = 0
    failures = 0
    for ideal, shifts in _theorem_trials():
        holds, _ = lcm_ratio_criterion(ideal)
        if not holds:
            continue
        held += 1
        witness = find_shift_witness(ideal, ideal.r, GF2)
        full = (1 << ideal.r) - 1
        if not (check_subadditivity(shifts).all_hold
                and witness.established and witness.found.subset == full):
            failures += 1
    _report(f"4 criterion consequences: {held} qualifying trials, "
            "subadditivity and top witness",
            held > 0 and failures == 0, time.monotonic() - start, 300.0)


def _random_subcomplex_family(rng):
    n = rng.randint(3, 6)
    masks = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 3))]
    base = from_faces(n, [f for m in masks for f in _subsets_of(m)])
    members = tuple(base.induced(rng.randrange(1 << n))
                    for _ in range(rng.randint(1, 3)))
    return SubcomplexFamily(members)


def _conforming_cover_instance(rng):
    """Pick a complex and a, then solve the size equation for |W|."""
    from bettishift.hochster import betti_hochster
    while True:
        n = rng.randint(3, 6)
        masks = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 3))]
        gens = "; ".join("*".join(f"x{v + 1}" for v in range(n)
                                  if m & (1 << v)) for m in masks)
        text = f"vars {','.join(f'x{i + 1}' for i in range(n))}; {gens}"
        try:
            delta = from_stanley_reisner(parse_ideal(text))
            shifts = max_shifts(betti_hochster(delta, GF2))
        except Exception:
            continue
        a = rng.randint(0, shifts.p)
        for s in range(0, 3):
            for l in range(1, 3):
                size_w = shifts.t[a] + s + l + 1
                if size_w > n:
                    continue
                vertices = list(range(n))
                rng.shuffle(vertices)
                w = 0
                for v in vertices[:size_w]:
                    w |= 1 << v
                in_w = [v for v in range(n) if w & (1 << v)]
                rng.shuffle(in_w)
                a_mask = 0
                for v in in_w[:rng.randint(l, min(s + l, size_w))]:
                    a_mask |= 1 << v
                return delta, w, a_mask, a, s, l


def test_criterion_5_verifier_instances():
    start = time.monotonic()
    rng = random.Random(50001)
    union_checked = 0
    union_bad = 0
    attempts = 0
    while union_checked < 100 and attempts < 5000:
        attempts += 1
        fam = _random_subcomplex_family(rng)
        res = verify_union_vanishing(fam, rng.randint(-1, 3), GF2)
        if res.hypothesis:
            union_checked += 1
            if res.conclusion is not True:
                union_bad += 1
    cover_checked = 0
    cover_bad = 0
    while cover_checked < 100:
        delta, w, a_mask, a, s, l = _conforming_cover_instance(rng)
        res = verify_cover_vanishing(delta, w, a_mask, a, s, l, GF2)
        if res.hypothesis:
            cover_checked += 1
            if res.conclusion is not True:
                cover_bad += 1
    _report("5 vanishing verifiers: 100 conforming instances each, "
            "no true-hypothesis failures",
            union_checked == 100 and cover_checked == 100
            and union_bad == 0 and cover_bad == 0,
            time.monotonic() - start, 180.0)


def test_criterion_6_homology_ground_truth():
    start = time.monotonic()
    constructed = []
    ok = True
    for k in (2, 3, 4):
        full = (1 << (k + 1)) - 1
        sphere = from_faces(k + 1,
                            [f for f in _subsets_of(full) if f != full])
        constructed.append(sphere)
        for field in (GF2, QQ):
            prof = reduced_homology(sphere, field)
            ok = ok and prof.nonzero_degrees() == [k - 1] \
                and prof.betti(k - 1) == 1
    rp2 = parse_facet_complex(RP2_FACETS)
    constructed.append(rp2)
    ok = ok and reduced_homology(rp2, GF2).betti(1) == 1
    ok = ok and reduced_homology(rp2, QQ).betti(1) == 0
    rng = random.Random(60001)
    for _ in range(20):
        fam = _random_subcomplex_family(rng)
        constructed.extend(fam.members)
    for delta in constructed:
        ok = ok and check_chain_condition(delta)
        for field in (GF2, QQ):
            ok = ok and euler_characteristic_consistent(delta, field)
    _report("6 homology ground truth: spheres, RP^2, chain and Euler checks",
            ok, time.monotonic() - start, 60.0)


def test_criterion_7_csv_determinism():
    start = time.monotonic()
    cfg = FuzzConfig(seed=70001, trials=25, n_range=(2, 5), r_range=(1, 5))
    outputs = []
    for _ in range(2):
        buf = io.StringIO()
        write_campaign_csv(fuzz_campaign(cfg), buf)
        outputs.append(buf.getvalue())
    _report("7 determinism: repeated campaign yields byte-identical CSV",
            outputs[0] == outputs[1], time.monotonic() - start, 60.0)
