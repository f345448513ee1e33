"""Command-line front end.

Structures are given as JSON files or as names from the built-in zoo
(``L4``, ``Z,3``, ``Chang``, ...).  Exit codes: 0 when every check passes,
1 when one fails or stays unknown, 2 for usage errors, 3 when a
construction breaks one of its own invariants.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import zoo
from .errors import InvariantViolation, MundiciError
from .functors import check_strong_unit_of_l, gamma, l_group, phi, psi
from .goodseq import check_cancellation, check_monoid_laws
from .lgroup import LGroupU, check_lu_axioms
from .logic import (
    check_interpretation_soundness,
    check_sequent,
    guard,
    interpret,
    interval_sequents,
    mv_axioms,
    parse_sequent,
    show_sequent,
)
from .mv import MvAlgebra, check_mv_axioms
from .obstruction import check_non_bi_interpretability
from .report import DEFAULT_BUDGET, DEFAULT_SEED, FAIL, PASS, UNKNOWN, Report
from .sheaf import (
    FiniteSpace,
    StructSheaf,
    check_gamma_sections,
    check_l_sections,
    check_sections_strong,
    check_sheaf,
    check_sheaf_naturality,
    check_sheaf_roundtrip,
)
from .specs import load, sheaf_from_spec


class UsageError(Exception):
    pass


def resolve(name: str):
    """A structure or sheaf from a JSON file, or a zoo entry by name."""
    if os.path.exists(name):
        return load(name)
    for table in (zoo.mv_zoo(), zoo.group_zoo(), zoo.sheaf_zoo()):
        if name in table:
            return table[name]
    if name == "planted":
        return zoo.planted_non_strong()
    raise UsageError(f"no file or zoo entry named {name!r}")


def _mv(name):
    A = resolve(name)
    if not isinstance(A, MvAlgebra):
        raise UsageError(f"{name} is not an MV-algebra")
    return A


def _group(name):
    G = resolve(name)
    if not isinstance(G, LGroupU):
        raise UsageError(f"{name} is not an l-group")
    return G


def _sheaf(name):
    F = resolve(name)
    if not isinstance(F, StructSheaf):
        raise UsageError(f"{name} is not a sheaf")
    return F


def _sequents(args):
    texts = list(args.sequents)
    if args.file:
        with open(args.file) as fh:
            texts += [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not texts:
        raise UsageError("no sequents given")
    return [parse_sequent(t) for t in texts]


# subcommands; each returns (reports, extra output lines)


def cmd_mv_axioms(args):
    return [check_mv_axioms(_mv(s), args.budget, args.seed) for s in args.structures], []


def cmd_lu_axioms(args):
    return [check_lu_axioms(_group(s), args.budget, args.seed) for s in args.structures], []


def cmd_gamma(args):
    G = _group(args.group)
    A = gamma(G)
    elems = A.elements()
    lines = [f"{A.name}: " + (", ".join(A.fmt(x) for x in elems) if elems is not None else "infinite")]
    return [check_mv_axioms(A, args.budget, args.seed)], lines


def cmd_lfunctor(args):
    A = _mv(args.algebra)
    L = l_group(A, args.max_len)
    return [
        check_lu_axioms(L, args.budget, args.seed),
        check_strong_unit_of_l(A, min(args.max_len, 2), args.budget, args.seed),
        check_monoid_laws(A, args.max_len, args.budget, args.seed),
        check_cancellation(A, args.max_len, args.budget, args.seed),
    ], [f"{L.name}: unit {L.fmt(L.unit)}"]


def cmd_roundtrip(args):
    if args.algebra:
        wit = phi(_mv(args.algebra), args.max_len, args.budget, args.seed)
    else:
        wit = psi(_group(args.group), args.max_len, args.budget, args.seed)
    return [wit.report], []


def cmd_sequent(args):
    M = resolve(args.model)
    if not isinstance(M, (MvAlgebra, LGroupU)):
        raise UsageError(f"{args.model} is not a model")
    return [check_sequent(M, s, args.budget, args.seed) for s in _sequents(args)], []


def cmd_interpret(args):
    lines = []
    for s in _sequents(args):
        t = interpret(s)
        lines.append(show_sequent(guard(t) if args.guard else t))
    return [], lines


def cmd_soundness(args):
    G = _group(args.group)
    return [check_interpretation_soundness(G, s, args.budget, args.seed) for s in _sequents(args)], []


def cmd_sheaf_roundtrip(args):
    F = _sheaf(args.sheaf)
    base = check_sheaf(F, args.budget, args.seed)
    if not base.ok:
        return [base], []
    reports = [base, check_sheaf_roundtrip(F, args.max_len, args.budget, args.seed)]
    if F.is_mv:
        reports.append(check_l_sections(F, args.max_len, args.budget, args.seed))
    else:
        reports += [check_gamma_sections(F, args.budget, args.seed), check_sections_strong(F, args.budget, args.seed)]
    return reports, []


def _load_map(path):
    with open(path) as fh:
        d = json.load(fh)
    try:
        X = FiniteSpace(tuple(d["source"]["points"]), tuple(tuple(bool(v) for v in r) for r in d["source"]["leq"]))
        sheaves = [sheaf_from_spec(s, f"F{i}") for i, s in enumerate(d["sheaves"])]
        names = {str(p): p for p in X.points}
        targets = {str(p): p for p in sheaves[0].space.points}
        f = {names[k]: targets[str(v)] for k, v in d["map"].items()}
    except (KeyError, TypeError, IndexError) as exc:
        raise UsageError(f"bad map file: {exc}") from exc
    return f, X, sheaves


def cmd_sheaf_naturality(args):
    reports = []
    if args.map:
        f, X, sheaves = _load_map(args.map)
        reports.append(check_sheaf_naturality(f, X, sheaves, args.max_len, args.budget, args.seed))
        return reports, []
    table = zoo.sheaf_zoo()
    for name, f, X, ys in zoo.sheaf_maps():
        r = check_sheaf_naturality(f, X, [table[y] for y in ys], args.max_len, args.budget, args.seed)
        r.subject = f"{name}: {r.subject}"
        reports.append(r)
    return reports, []


def _expect_fail(report: Report, witness: dict, label: str) -> Report:
    """A planted defect: pass exactly when the check fails with the expected witness."""
    out = Report("planted-defect", f"{label}", seed=report.seed, checked=report.checked, details=[report])
    if report.status != FAIL or report.axiom != 14 or report.witness != witness:
        out.fail("expected-failure", report.witness, f"expected a failure with witness {witness}")
    else:
        out.note = f"failed as planted: {report.line()}"
    return out


def cmd_zoo(args):
    b, s, m = args.budget, args.seed, args.max_len
    reports = []
    mvs, groups = zoo.mv_zoo(), zoo.group_zoo()
    for A in mvs.values():
        reports.append(check_mv_axioms(A, b, s))
    for G in groups.values():
        reports.append(check_lu_axioms(G, b, s))
    reports.append(_expect_fail(check_lu_axioms(zoo.planted_non_strong(), b, s), {"x": "(0,1)"},
                                "non-strong unit (1,0) on Z^2"))
    for key in ("L2", "L3", "Chang"):
        reports.append(check_monoid_laws(mvs[key], m, b, s))
        reports.append(check_cancellation(mvs[key], m, b, s))
    for A in mvs.values():
        reports.append(phi(A, m, b, s).report)
    for G in groups.values():
        reports.append(psi(G, m, b, s).report)
    for G in groups.values():
        for sq in mv_axioms().values():
            reports.append(check_interpretation_soundness(G, sq, b // 4, s))
        for sq in interval_sequents().values():
            reports.append(check_sequent(G, sq, b // 4, s))
    reports.append(check_non_bi_interpretability(groups, 50, s))
    sheaves = zoo.sheaf_zoo()
    for F in sheaves.values():
        reports.append(check_sheaf_roundtrip(F, m, b // 4, s))
    for name, f, X, ys in zoo.sheaf_maps():
        r = check_sheaf_naturality(f, X, [sheaves[y] for y in ys], m, b // 4, s)
        r.subject = f"{name}: {r.subject}"
        reports.append(r)
    return reports, []


def overall(reports) -> str:
    statuses = {r.status for r in reports}
    if FAIL in statuses:
        return FAIL
    if UNKNOWN in statuses:
        return UNKNOWN
    return PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="samples per sampled check")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-len", type=int, default=3, help="good-sequence length bound")

    p = argparse.ArgumentParser(prog="mundici", description="Check MV-algebras, unital l-groups and the functors between them.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("mv-axioms", cmd_mv_axioms, "check the MV axioms").add_argument("structures", nargs="+")
    add("lu-axioms", cmd_lu_axioms, "check the unital l-group axioms").add_argument("structures", nargs="+")
    add("gamma", cmd_gamma, "unit interval of a group").add_argument("group")
    add("lfunctor", cmd_lfunctor, "group of good sequences of an algebra").add_argument("algebra")
    sp = add("roundtrip", cmd_roundtrip, "verify phi or psi")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--algebra")
    g.add_argument("--group")
    for name, fn, help_ in (
        ("sequent", cmd_sequent, "model-check sequents"),
        ("interpret", cmd_interpret, "print interpreted sequents"),
        ("soundness", cmd_soundness, "compare a sequent in gamma(G) with its interpretation in G"),
    ):
        sp = add(name, fn, help_)
        sp.add_argument("sequents", nargs="*")
        sp.add_argument("-f", "--file", help="one sequent per line")
        if name == "sequent":
            sp.add_argument("--model", required=True)
        if name == "soundness":
            sp.add_argument("--group", required=True)
        if name == "interpret":
            sp.add_argument("--guard", action="store_true", help="add 0 <= x <= u for the context")
    add("sheaf-roundtrip", cmd_sheaf_roundtrip, "stalkwise roundtrip of a sheaf").add_argument("sheaf")
    add("sheaf-naturality", cmd_sheaf_naturality, "naturality along continuous maps").add_argument(
        "--map", help="JSON with source space, map and sheaves; default: built-in maps")
    add("zoo", cmd_zoo, "run the built-in zoo")
    return p


def run(argv=None, out=sys.stdout) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        reports, lines = args.fn(args)
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 3
    except (UsageError, MundiciError, OSError, json.JSONDecodeError) as exc:
        print(f"mundici {args.command}: {exc}", file=sys.stderr)
        return 2
    status = overall(reports)
    if args.json:
        doc = {
            "command": args.command,
            "status": status,
            "seed": args.seed,
            "budget": args.budget,
            "max_len": args.max_len,
            "reports": [r.to_json() for r in reports],
        }
        if lines:
            doc["output"] = lines
        print(json.dumps(doc, indent=2), file=out)
    else:
        for ln in lines:
            print(ln, file=out)
        for r in reports:
            print(r.line(), file=out)
        if reports:
            print(f"{status}: {sum(r.ok for r in reports)}/{len(reports)} checks passed", file=out)
    return 0 if status == PASS else 1


def main():
    sys.exit(run())
