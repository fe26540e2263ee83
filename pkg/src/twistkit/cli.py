"""Command line: ``twistkit verify | invariants | word``.

Exit codes: 0 when everything requested verified, 1 when a claim was
falsified or errored, 2 for malformed arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

import numpy as np

from . import homology as hom
from .artin import evaluate
from .braid import BraidWord, to_permutation
from .fpgroup import abelianization, vanishing_cycle_classes
from .invariants import invariant_report
from .verify import BRAID_CLAIMS, CLAIMS, min_genus, verify_claim
from .words import WordParseError, format_word, parse_word

ORACLE_CAP, SYMPLECTIC_CAP, INVARIANTS_CAP = 6, 10, 20


class UsageError(Exception):
    pass


def _env_cap() -> Optional[int]:
    raw = os.environ.get("TWISTKIT_MAX_GENUS")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"TWISTKIT_MAX_GENUS must be an integer, got {raw!r}")


def _cap(default: int, override: Optional[int]) -> int:
    if override is not None:
        return override
    env = _env_cap()
    return default if env is None else env


def _genus_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2..8, got {text!r}")
    if a > b:
        raise argparse.ArgumentTypeError(f"empty genus range {text!r}")
    return range(a, b + 1)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check braid and mapping class group identities")
    v.add_argument("claims", nargs="+", choices=CLAIMS, metavar="CLAIM",
                   help="one or more of " + ", ".join(CLAIMS))
    where = v.add_mutually_exclusive_group(required=True)
    where.add_argument("--genus", type=int)
    where.add_argument("--genus-range", type=_genus_range, metavar="A..B")
    v.add_argument("--max-genus", type=int, help="override the per-claim genus cap")
    v.add_argument("--json", action="store_true")

    inv = sub.add_parser("invariants", help="invariants of X, or H_1 of X_n with --n")
    inv.add_argument("--genus", type=int, required=True)
    inv.add_argument("--n", type=int)
    inv.add_argument("--max-genus", type=int)
    inv.add_argument("--json", action="store_true")

    w = sub.add_parser("word", help="inspect a word in s1, s2, ...")
    src = w.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr")
    src.add_argument("--parse", metavar="FILE")
    w.add_argument("--action", required=True,
                   choices=("reduce", "permutation", "artin", "symplectic"))
    w.add_argument("--strands", type=int)
    w.add_argument("--genus", type=int)
    return parser


def cmd_verify(args, out) -> int:
    genera = [args.genus] if args.genus is not None else list(args.genus_range)
    jobs = []
    for claim in args.claims:
        default = ORACLE_CAP if claim in BRAID_CLAIMS else SYMPLECTIC_CAP
        cap = _cap(default, args.max_genus)
        lo = min_genus(claim)
        for g in genera:
            if g < lo:
                raise UsageError(f"{claim} needs genus >= {lo}, got {g}")
            if g > cap:
                raise UsageError(f"{claim} at genus {g} exceeds the cap {cap}; use --max-genus")
            jobs.append((claim, g))

    reports = [verify_claim(claim, g) for claim, g in jobs]
    if args.json:
        json.dump([r.to_dict() for r in reports], out, indent=2)
        out.write("\n")
    else:
        for r in reports:
            print(r, file=out)
        n_ok = sum(r.ok for r in reports)
        print(f"{n_ok}/{len(reports)} verified", file=out)
    return 0 if all(r.ok for r in reports) else 1


def cmd_invariants(args, out) -> int:
    g = args.genus
    if g < 2:
        raise UsageError(f"invariants need genus >= 2, got {g}")
    if g > _cap(INVARIANTS_CAP, args.max_genus):
        raise UsageError(f"genus {g} exceeds the invariants cap; use --max-genus")
    if args.n is not None:
        if args.n < 1:
            raise UsageError(f"--n must be >= 1, got {args.n}")
        classes = vanishing_cycle_classes(g, args.n)
        h1 = abelianization(classes, g)
        if args.json:
            json.dump({"genus": g, "n": args.n, "cycles": len(classes), "h1": h1.to_dict()}, out)
            out.write("\n")
        else:
            print(f"X_n, genus {g}, n = {args.n}: {len(classes)} vanishing cycles", file=out)
            print(f"H_1 = {h1}", file=out)
        return 0
    report = invariant_report(g)
    if args.json:
        out.write(report.to_json() + "\n")
        return 0
    print(f"X, genus {g}", file=out)
    for key in ("chi", "sigma", "b1", "b2", "b2plus", "b2minus"):
        print(f"  {key:8s} = {getattr(report, key)}", file=out)
    for kind, what in report.steps:
        print(f"  [{kind}] {what}", file=out)
    for p in report.premises:
        print(f"  premise: {p}", file=out)
    return 0


def cmd_word(args, out) -> int:
    text = args.expr
    if args.parse is not None:
        try:
            with open(args.parse) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc))
    try:
        word = parse_word(text)
    except WordParseError as exc:
        raise UsageError(f"parse error: {exc}")

    if args.action == "reduce":
        print(format_word(word) or "identity", file=out)
        return 0
    if args.action in ("permutation", "artin"):
        n = args.strands if args.strands is not None else max(word.max_index() + 1, 2)
        try:
            b = BraidWord(n, word)
        except ValueError as exc:
            raise UsageError(str(exc))
        result = to_permutation(b) if args.action == "permutation" else evaluate(b)
        print(result, file=out)
        return 0
    if args.genus is None or args.genus < 1:
        raise UsageError("--action symplectic needs --genus >= 1")
    try:
        M = hom.evaluate_twistword(hom.twistword_from_braid(word, args.genus))
    except hom.CurveLabelError as exc:
        raise UsageError(str(exc))
    print(np.array2string(np.array(M, dtype=object)), file=out)
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"verify": cmd_verify, "invariants": cmd_invariants, "word": cmd_word}[args.command]
    try:
        return handler(args, out)
    except UsageError as exc:
        print(f"twistkit {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
