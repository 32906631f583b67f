"""Command-line surface.

Exit codes: 0 success, 1 input error, 2 proved-theorem violation or engine
disagreement, 3 size cap exceeded. Data goes to stdout; every diagnostic
goes to stderr so the data stream stays machine-parseable.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from .betti import max_shifts
from .complexes import SubcomplexFamily, parse_facet_complex
from .errors import CapExceededError, EngineBugError, InputError
from .hochster import betti_of_ideal
from .inequalities import (check_partial_sum_bound, check_step_bound,
                           check_subadditivity)
from .linalg import FieldSpec
from .monomials import parse_ideal_verbose
from .taylor import find_shift_witness, lcm_ratio_criterion
from .verify import (FuzzConfig, fuzz_campaign, run_trial,
                     verify_cover_vanishing, verify_union_vanishing,
                     write_campaign_csv)


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(obj if isinstance(obj, str) else json.dumps(obj, indent=2))


def _read_ideal(args):
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    elif args.ideal:
        text = args.ideal
    else:
        raise InputError("provide an IDEAL argument or --file")
    ideal, dropped = parse_ideal_verbose(text)
    if dropped:
        print(f"note: minimalization removed {dropped} redundant generator(s)",
              file=sys.stderr)
    return ideal


def _add_ideal_args(p):
    p.add_argument("ideal", nargs="?", help="inline ideal text, e.g. 'x^2*y; y^3'")
    p.add_argument("--file", help="file containing the ideal text")
    p.add_argument("--field", default="GF(2)",
                   help="GF(p) for a small prime, or Q (default GF(2))")
    p.add_argument("--format", choices=["json", "text", "csv"], default="json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bettishift",
        description="Graded Betti numbers of monomial ideals by two "
                    "independent exact engines, with subadditivity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="graded Betti table")
    _add_ideal_args(p)
    p.add_argument("--method", choices=["hochster", "taylor", "both"],
                   default="both")
    p.add_argument("--plot", help="write a Betti diagram figure to this file")

    p = sub.add_parser("shifts", help="maximal shift vector and projective dimension")
    _add_ideal_args(p)
    p.add_argument("--method", choices=["hochster", "taylor", "both"],
                   default="both")

    p = sub.add_parser("check", help="all inequality reports over the shifts")
    _add_ideal_args(p)

    p = sub.add_parser("witness", help="basis-element homology witness at degree c")
    _add_ideal_args(p)
    p.add_argument("--c", type=int, default=None,
                   help="homological degree (default: projective dimension)")

    p = sub.add_parser("ab6", help="drop-one-generator lcm-ratio criterion")
    _add_ideal_args(p)

    p = sub.add_parser("verify-lemma1", help="union-of-subcomplexes vanishing check")
    p.add_argument("--file", required=True,
                   help="fixture: one 'facets: ...' line per family member")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, default=None, help="ambient vertex count")
    p.add_argument("--field", default="GF(2)")

    p = sub.add_parser("verify-prop2", help="drop-l-vertices cover vanishing check")
    p.add_argument("--file", required=True, help="fixture: one 'facets: ...' line")
    p.add_argument("--W", required=True, help="vertex subset, e.g. '1 2 3'")
    p.add_argument("--A", required=True, help="vertex subset inside W")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--field", default="GF(2)")

    p = sub.add_parser("fuzz", help="seeded random campaign over all checkers")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--r-min", type=int, default=1)
    p.add_argument("--r-max", type=int, default=6)
    p.add_argument("--maxdeg", type=int, default=4)
    p.add_argument("--squarefree", action="store_true")
    p.add_argument("--field", action="append", default=None,
                   help="repeatable; default GF(2)")
    p.add_argument("--no-cross-check", action="store_true",
                   help="skip the Hochster/Taylor comparison")
    p.add_argument("--csv", help="write the per-trial CSV here (default stdout)")
    p.add_argument("--summary", help="write the JSON summary here")
    p.add_argument("--plot", help="write a campaign summary figure here")

    p = sub.add_parser("replay", help="re-run one trial from a repro bundle")
    p.add_argument("--bundle", required=True,
                   help="JSON repro bundle emitted by a failed fuzz run")

    return parser


def _mask_from_labels(text, n):
    mask = 0
    for word in text.split():
        if not word.isdigit() or not (1 <= int(word) <= n):
            raise InputError(f"bad vertex label {word!r}")
        mask |= 1 << (int(word) - 1)
    return mask


def _cmd_betti(args):
    ideal = _read_ideal(args)
    field = FieldSpec.parse(args.field)
    table = betti_of_ideal(ideal, field, args.method)
    if args.plot:
        from .plots import save_betti_diagram
        save_betti_diagram(table, args.plot)
    if args.format == "text":
        print(f"field: {field.render()}")
        print(table.diagram_text())
    else:
        _emit(table.to_json_dict(), "json")
    return 0


def _cmd_shifts(args):
    ideal = _read_ideal(args)
    field = FieldSpec.parse(args.field)
    shifts = max_shifts(betti_of_ideal(ideal, field, args.method))
    _emit({"field": field.render(), "projdim": shifts.p, "t": list(shifts.t)},
          "json")
    return 0


def _cmd_check(args):
    ideal = _read_ideal(args)
    field = FieldSpec.parse(args.field)
    # shifts only need one engine; the Taylor route is cheap in n and the
    # betti subcommand owns the cross-check
    table = betti_of_ideal(ideal, field, "taylor")
    shifts = max_shifts(table)
    reports = [check_subadditivity(shifts), check_partial_sum_bound(shifts),
               check_step_bound(shifts)]
    _emit({"field": field.render(), "t": list(shifts.t),
           "reports": [r.to_json_dict() for r in reports]}, "json")
    proved_violated = any(not r.all_hold for r in reports[1:])
    if proved_violated:
        print("engine bug: a proved inequality failed", file=sys.stderr)
        return 2
    if not reports[0].all_hold:
        # not an engine bug, but the most interesting possible output:
        # dump everything needed to reproduce
        print(json.dumps({
            "finding": "subadditivity violation",
            "ideal": ideal.render(),
            "field": field.render(),
            "betti": table.rows(),
        }), file=sys.stderr)
    return 0


def _cmd_witness(args):
    ideal = _read_ideal(args)
    field = FieldSpec.parse(args.field)
    c = args.c
    if c is None:
        c = max_shifts(betti_of_ideal(ideal, field, "taylor")).p
    report = find_shift_witness(ideal, c, field)
    _emit({"field": field.render(), "witness": report.to_json_dict(ideal)}, "json")
    return 0


def _cmd_ab6(args):
    ideal = _read_ideal(args)
    holds, ratios = lcm_ratio_criterion(ideal)
    _emit({"ab6": {"holds": holds,
                   "ratios": [r.render(ideal.var_names) for r in ratios]}},
          "json")
    return 0


def _read_complexes(path, n):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise InputError("fixture file is empty")
    if n is None:
        # two passes: first to find the ambient vertex count
        n = max(parse_facet_complex(ln).n for ln in lines)
    return [parse_facet_complex(ln, n) for ln in lines], n


def _cmd_verify_lemma1(args):
    members, _ = _read_complexes(args.file, args.n)
    field = FieldSpec.parse(args.field)
    result = verify_union_vanishing(SubcomplexFamily(tuple(members)), args.j, field)
    _emit({"field": field.render(), "hypothesis": result.hypothesis,
           "conclusion": ("skipped" if result.conclusion is None
                          else result.conclusion),
           "detail": result.detail}, "json")
    return 0 if result.consistent else 2


def _cmd_verify_prop2(args):
    members, n = _read_complexes(args.file, args.n)
    if len(members) != 1:
        raise InputError("the cover verifier takes exactly one complex")
    delta = members[0]
    field = FieldSpec.parse(args.field)
    w_mask = _mask_from_labels(args.W, delta.n)
    a_mask = _mask_from_labels(args.A, delta.n)
    result = verify_cover_vanishing(delta, w_mask, a_mask, args.a, args.s,
                                    args.l, field)
    _emit({"field": field.render(), "preconditions": result.hypothesis,
           "conclusion": ("skipped" if result.conclusion is None
                          else result.conclusion),
           "detail": {k: v for k, v in result.detail.items()
                      if k not in ("W", "A")}}, "json")
    return 0 if result.consistent else 2


def _campaign_config(args):
    fields = tuple(FieldSpec.parse(f) for f in (args.field or ["GF(2)"]))
    return FuzzConfig(
        seed=args.seed, trials=args.trials,
        n_range=(args.n_min, args.n_max), r_range=(args.r_min, args.r_max),
        maxdeg=args.maxdeg, squarefree_only=args.squarefree,
        fields=fields, cross_check=not args.no_cross_check)


def _cmd_fuzz(args):
    cfg = _campaign_config(args)
    report = fuzz_campaign(cfg)
    buf = io.StringIO()
    write_campaign_csv(report, buf)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    if args.summary:
        with open(args.summary, "w") as fh:
            json.dump(report.summary(), fh, indent=2)
    if args.plot:
        from .plots import save_campaign_summary
        save_campaign_summary(report, args.plot)
    return 0


def _cmd_replay(args):
    with open(args.bundle) as fh:
        bundle = json.load(fh)
    cfg = FuzzConfig.from_json_dict(bundle["config"])
    rows = run_trial(cfg, bundle["index"])
    _emit({"replayed": bundle["index"],
           "ideal": rows[0].ideal_text,
           "rows": [dict(zip(["field", "projdim", "t"],
                             [r.field_tag, r.p, list(r.t)])) for r in rows],
           "status": "no violation reproduced"}, "json")
    return 0


_COMMANDS = {
    "betti": _cmd_betti,
    "shifts": _cmd_shifts,
    "check": _cmd_check,
    "witness": _cmd_witness,
    "ab6": _cmd_ab6,
    "verify-lemma1": _cmd_verify_lemma1,
    "verify-prop2": _cmd_verify_prop2,
    "fuzz": _cmd_fuzz,
    "replay": _cmd_replay,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (InputError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except EngineBugError as exc:
        print(f"ENGINE BUG: {exc}", file=sys.stderr)
        print(json.dumps(exc.diagnostics, indent=2), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
