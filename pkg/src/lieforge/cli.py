"""Command-line front end: ``lieforge``.

Exit codes: 0 when everything asked for holds, 1 on a failed check, 2 on
bad usage or unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from lieforge import caseengine, htlemma, rectlab, reps
from lieforge.charlab import FormalCharacter, canonicalize, equivalent
from lieforge.report import CaseReport
from lieforge.rootsys import parse_algebra
from lieforge.weights import (
    IrreducibleRep,
    character,
    decompose,
    parse_weights,
    tensor,
    weyl_dim,
)


class UsageError(Exception):
    pass


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(";", ",").split(",") if x.strip())
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}") from None


def _rep(alg: str, hw: list[str]) -> IrreducibleRep:
    weight = _weight(",".join(hw))
    try:
        return IrreducibleRep(parse_algebra(alg), weight)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _multiset(arg: str):
    """A weight multiset given inline or as a path to a file holding one."""
    p = Path(arg)
    text = p.read_text() if "rank" not in arg and p.exists() else arg
    try:
        return parse_weights(text)
    except ValueError as e:
        raise UsageError(f"cannot parse weight multiset: {e}") from None


def _print_reports(reports: list[CaseReport], as_json: bool) -> int:
    for r in reports:
        lines = r.json_lines() if as_json else r.lines()
        for line in lines:
            print(line)
    ok = all(r.passed for r in reports)
    if not as_json:
        passed = sum(r.passed for r in reports)
        print(f"summary: {passed}/{len(reports)} reports passed")
    return 0 if ok else 1


def cmd_dim(args) -> int:
    print(weyl_dim(_rep(args.algebra, args.highest)))
    return 0


def cmd_weights(args) -> int:
    print(character(_rep(args.algebra, args.highest)).to_text())
    return 0


def cmd_tensor(args) -> int:
    a = _rep(args.algebra, [args.first])
    b = _rep(args.algebra, [args.second])
    prod = tensor(character(a), character(b))
    parts = decompose(prod, a.algebra)
    if args.json:
        print(json.dumps({"character": prod.to_text(),
                          "decomposition": [[list(w), m] for w, m in parts]}))
    else:
        print(prod.to_text())
        for w, m in parts:
            print(f"  {m} x {list(w)} (dim {weyl_dim(IrreducibleRep(a.algebra, w))})")
    return 0


def cmd_decompose(args) -> int:
    x = _multiset(args.weights)
    try:
        alg = parse_algebra(args.algebra)
        parts = decompose(x, alg)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    for w, m in parts:
        print(f"{m} x {list(w)} (dim {weyl_dim(IrreducibleRep(alg, w))})")
    return 0


def cmd_enumerate(args) -> int:
    try:
        classes = reps.enumerate_composite(args.dim) if not args.simple else reps.enumerate_simple(args.dim)
    except ValueError as e:
        raise UsageError(str(e)) from None
    for c in classes:
        if args.json:
            print(json.dumps({"label": c.label, "algebra": str(c.algebra), "highest": list(c.rep.highest),
                              "dim": c.dim, "rank": c.rank, "self_duality": c.self_duality.value}))
        else:
            print(f"{c.label:<14} {str(c.rep):<28} dim={c.dim} rank={c.rank} {c.self_duality.value}")
    return 0


def cmd_character_eq(args) -> int:
    a = FormalCharacter.of(_multiset(args.a))
    b = FormalCharacter.of(_multiset(args.b))
    same = equivalent(a, b)
    print("equivalent" if same else "not equivalent")
    if args.verbose:
        print(canonicalize(a).to_text())
        print(canonicalize(b).to_text())
    return 0 if same else 1


def cmd_rectangular(args) -> int:
    x = _multiset(args.file)
    w = rectlab.is_rectangular(x)
    if w is None:
        print("not rectangular")
        return 1
    split = rectlab.is_decomposable_rect(x, args.algebra)
    info = {"rectangular": True, "lengths": sorted(w.shape.lengths),
            "hypercubic": len(set(w.shape.lengths)) == 1,
            "indecomposable": split is None,
            "corner": [str(c) for c in w.corner], "steps": [[str(c) for c in s] for s in w.steps]}
    if args.json:
        print(json.dumps(info))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return 0


def cmd_verify(args) -> int:
    target = args.target
    if args.case_id is not None and target != "case":
        raise UsageError(f"unexpected argument {args.case_id!r} for verify {target}")
    if target == "table1":
        reports = [reps.verify_table1()]
    elif target == "table2":
        reports = [caseengine.verify_table2()]
    elif target == "rect":
        reports = [rectlab.verify_rect_classification(6)]
    elif target == "chromium":
        reports = [rectlab.chromium_verify()]
    elif target == "case":
        if args.case_id is None:
            raise UsageError(f"verify case needs an id: {', '.join(caseengine.CASES)}")
        try:
            reports = [caseengine.verify_case(args.case_id)]
        except ValueError as e:
            raise UsageError(str(e)) from None
    elif target == "ht-lemma":
        reports = [htlemma.lemma_search(args.bound, emit_witnesses=args.emit_witnesses,
                                        with_shifts=args.with_shifts)]
    elif target == "sign-perm":
        reports = [htlemma.verify_signed_perm()]
    else:
        reports = caseengine.verify_all(args.bound, emit_witnesses=args.emit_witnesses,
                                        with_shifts=args.with_shifts)
    return _print_reports(reports, args.json)


def _bound(text: str) -> int:
    v = int(text)
    if v < 8:
        raise argparse.ArgumentTypeError("bound must be at least 8")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lieforge", description="Weights, characters and case checks "
                                "for small-dimensional representations.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in [("dim", cmd_dim, "Weyl dimension of an irreducible"),
                            ("weights", cmd_weights, "full weight multiset of an irreducible")]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("algebra", help="e.g. A2 or A1xC2")
        s.add_argument("highest", nargs="+", help="highest weight, e.g. 1 1 or 1,1")
        s.set_defaults(func=fn)

    s = sub.add_parser("tensor", help="tensor product of two irreducibles, decomposed")
    s.add_argument("algebra")
    s.add_argument("first", help="highest weight, comma separated")
    s.add_argument("second", help="highest weight, comma separated")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("decompose", help="decompose a weight multiset into irreducibles")
    s.add_argument("algebra")
    s.add_argument("weights", help="file or inline text, e.g. 'rank=1: (2) (0)x2 (-2)'")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("enumerate", help="faithful irreducibles of a given dimension")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--simple", action="store_true", help="simple algebras only, all dims up to --dim")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("character-eq", help="compare two formal characters")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-v", "--verbose", action="store_true", help="print canonical forms")
    s.set_defaults(func=cmd_character_eq)

    s = sub.add_parser("rectangular", help="rectangularity of a weight multiset")
    s.add_argument("file", help="file or inline text")
    s.add_argument("--algebra", help="split indecomposability checks along these factors")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_rectangular)

    s = sub.add_parser("verify", help="run verification reports")
    s.add_argument("target", choices=["table1", "table2", "rect", "chromium", "case", "ht-lemma",
                                      "sign-perm", "all"])
    s.add_argument("case_id", nargs="?")
    s.add_argument("--bound", type=_bound, default=caseengine.DEFAULT_BOUND)
    s.add_argument("--json", action="store_true")
    s.add_argument("--emit-witnesses", action="store_true")
    s.add_argument("--with-shifts", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"lieforge: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
