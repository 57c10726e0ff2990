"""
Command-line front end.

Exit codes: 0 when everything requested succeeded and every check passed,
1 on a verification failure or when an enumeration bound is refused,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import yaml

from . import weyl as W
from .closure import (OrbitLabel, boundary_count_poly, boundary_pieces,
                      coxeter_piece_closure, orbit_closure_contains)
from .coxeter import (check_layer_closed_forms, conjugating_sequence, coxeter_below,
                      enumerate_coxeter, layers, w_J_coxeter)
from .pieces import (PieceLabel, beta_sequence, enumerate_pieces,
                     group_compactification_count, piece_count_poly, poincare_polynomial)
from .qpoly import QPoly
from .rootsys import SeriesRank, build
from .verify import ALIASES, SUITES, run_suites, types_up_to

LABEL_HELP = """\
label syntax:
  orbit labels are "J|x|w" and piece labels are "J|w".  J is a comma- or
  space-separated index set, x and w are words such as "1 2 1".  Use "-" for
  an empty set or the identity, e.g. "1|1 2|-".
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ---------------------------------------------------------------- parsing helpers

def _subset(text: str) -> frozenset:
    text = text.strip()
    if text in ("", "-"):
        return frozenset()
    try:
        return frozenset(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"cannot parse index set {text!r}") from None


def _elem(text: str, rs):
    try:
        return W.from_word(W.parse_word(text), rs)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _check_subset(J, rs):
    if not J <= rs.index_set:
        raise UsageError(f"index set {sorted(J)} is not inside {sorted(rs.index_set)}")


def _orbit(text: str, rs) -> OrbitLabel:
    parts = text.split("|")
    if len(parts) != 3:
        raise UsageError(f"orbit label {text!r} must look like 'J|x|w'")
    J = _subset(parts[0])
    _check_subset(J, rs)
    try:
        return OrbitLabel(J, _elem(parts[1], rs), _elem(parts[2], rs))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _piece(text: str, rs) -> PieceLabel:
    parts = text.split("|")
    if len(parts) != 2:
        raise UsageError(f"piece label {text!r} must look like 'J|w'")
    J = _subset(parts[0])
    _check_subset(J, rs)
    try:
        return PieceLabel(J, _elem(parts[1], rs))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _word_str(e) -> str:
    return W.format_word(e.reduced_word()) or "-"


# ---------------------------------------------------------------- output

def _emit(args, records: list, columns: list, text: list | None = None) -> None:
    if args.json:
        print(json.dumps(records, indent=2, sort_keys=True))
    elif args.csv:
        w = csv.DictWriter(sys.stdout, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: _csv_cell(r.get(k)) for k in columns})
    else:
        for line in text if text is not None else [
                "  ".join(f"{k}={_csv_cell(r.get(k))}" for k in columns) for r in records]:
            print(line)


def _csv_cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v)) or "-"
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return v


def _type(args):
    if not args.type:
        raise UsageError("--type is required for this command")
    try:
        return build(SeriesRank.parse(args.type))
    except ValueError as e:
        raise UsageError(str(e)) from None


# ---------------------------------------------------------------- commands

def cmd_pieces(args) -> int:
    rs = _type(args)
    records = []
    for p in enumerate_pieces(rs, args.bound):
        rec = {"J": sorted(p.J), "w": _word_str(p.w)}
        if args.with_chain:
            chain = beta_sequence(p.J, p.w, rs)
            rec["J_inf"] = sorted(chain.terminal)
            rec["chain"] = [s.to_json() for s in chain.steps]
        records.append(rec)
    cols = ["J", "w"] + (["J_inf"] if args.with_chain else [])
    _emit(args, records, cols)
    return 0


def cmd_boundary(args) -> int:
    rs = _type(args)
    code = 0
    if not args.count and not args.check:
        records = [{"J": sorted(p.J), "w": _word_str(p.w)} for p in boundary_pieces(rs, args.bound)]
        _emit(args, records, ["J", "w"])
        return 0
    closed = boundary_count_poly(rs, args.bound)
    rec = {"type": str(rs.type), "boundary_count": closed.to_json(), "polynomial": str(closed)}
    if args.check:
        side = sum((piece_count_poly(p, rs) for p in boundary_pieces(rs, args.bound)), QPoly())
        rec["sum_over_pieces"] = side.to_json()
        rec["check"] = "pass" if side == closed else "fail"
        code = 0 if side == closed else 1
    text = [str(closed)] if args.count else []
    if args.check:
        text.append(f"double count: {rec['check']}")
    _emit(args, [rec], list(rec), text)
    return code


def cmd_closure(args) -> int:
    rs = _type(args)
    if args.coxeter_piece:
        if args.i is None or args.w is None:
            raise UsageError("--coxeter-piece needs --i and --w")
        try:
            labels = coxeter_piece_closure(args.i, _elem(args.w, rs), rs, args.bound)
        except ValueError as e:
            raise UsageError(str(e)) from None
        _emit(args, [{"J": sorted(p.J), "w": _word_str(p.w)} for p in labels], ["J", "w"])
        return 0
    if args.a is None or args.b is None:
        raise UsageError("closure needs --a and --b, or --coxeter-piece")
    a, b = _orbit(args.a, rs), _orbit(args.b, rs)
    wit = orbit_closure_contains(a, b, args.bound)
    rec = {"a": a.to_json(), "b": b.to_json(), **wit.to_json()}
    if wit:
        text = [f"true  u={_word_str(wit.u)}  v={_word_str(wit.v)}"]
    else:
        text = ["false"]
    _emit(args, [rec], ["contains", "u", "v"], text)
    return 0


def cmd_count(args) -> int:
    rs = _type(args)
    if args.piece:
        p = _piece(args.piece, rs)
        poly = piece_count_poly(p, rs)
        rec = {"type": str(rs.type), "piece": p.to_json(), "count": poly.to_json(), "polynomial": str(poly)}
        _emit(args, [rec], ["type", "polynomial"], [str(poly)])
        return 0
    pw = poincare_polynomial(rs)
    gbar = group_compactification_count(rs, args.bound)
    bd = boundary_count_poly(rs, args.bound)
    rec = {"type": str(rs.type), "order": W.group_order(rs),
           "poincare": pw.to_json(), "compactification": gbar.to_json(), "boundary": bd.to_json()}
    text = [f"|W| = {rec['order']}", f"P_W = {pw}", f"|Gbar| = {gbar}", f"|Ubar - U| = {bd}"]
    _emit(args, [rec], ["type", "order"], text)
    return 0


def cmd_coxeter(args) -> int:
    rs = _type(args)
    if args.conjugate:
        if args.i is None:
            raise UsageError("--conjugate needs --i")
        c, c2 = (_elem(t, rs) for t in args.conjugate)
        try:
            g = conjugating_sequence(c, c2, args.i, rs)
        except ValueError as e:
            raise UsageError(str(e)) from None
        rec = {"c": _word_str(c), "c2": _word_str(c2), "i": args.i, "g": W.format_word(g) or "-"}
        _emit(args, [rec], ["g"], [rec["g"]])
        return 0
    if args.below:
        p = _piece(args.below, rs)
        try:
            c = coxeter_below(p.J, p.w, rs)
        except ValueError as e:
            raise UsageError(str(e)) from None
        rec = {"J": sorted(p.J), "w": _word_str(p.w), "coxeter": _word_str(c)}
        _emit(args, [rec], ["coxeter"], [rec["coxeter"]])
        return 0
    if args.i is not None:
        if args.i not in rs.index_set:
            raise UsageError(f"index {args.i} out of range for {rs.type}")
        rep = check_layer_closed_forms(args.i, rs)
        rec = {"i": args.i, "layers": [sorted(S) for S in layers(args.i, rs)],
               "w_J": _word_str(w_J_coxeter(args.i, rs)), "closed_forms": rep.status}
        _emit(args, [rec], list(rec))
        return 0 if rep.ok else 1
    _emit(args, [{"coxeter": _word_str(c)} for c in enumerate_coxeter(rs)], ["coxeter"])
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    if suite != "all" and suite not in SUITES and suite not in ALIASES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(['all', *SUITES, *ALIASES])}")
    if args.type:
        types = [_type(args).type]
    else:
        types = types_up_to(args.max_rank)
    results = run_suites([suite], types, args.bound, args.jobs)
    failed = [r for r in results if r.failed]
    records = [r.to_json() for r in results]
    text = []
    for r in results:
        tag = r.status.upper()
        if r.documented:
            tag += f" ({r.detail.get('known_issue')})"
        text.append(f"{tag:<18} {r.suite:<14} {r.type:<4} {r.check}")
    text.append(f"{len(results)} checks, {len(failed)} failed")
    _emit(args, records, ["suite", "type", "check", "status", "documented"], text)
    return 1 if failed else 0


# ---------------------------------------------------------------- parser

def _load_config(path) -> dict:
    if not path:
        return {}
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"config file {path} not found")
    text = p.read_text()
    data = json.loads(text) if p.suffix == ".json" else yaml.safe_load(text)
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must hold a mapping")
    unknown = set(data) - {"bound", "jobs", "max_rank"}
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--type", help="root system type, e.g. A3, G2, E6")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    g.add_argument("--max-rank", type=int, default=None, help="largest rank for sweeps (default 4)")
    g.add_argument("--bound", type=int, default=None,
                   help=f"refuse to enumerate groups larger than this (default {W.DEFAULT_BOUND})")
    g.add_argument("--jobs", type=int, default=None, help="worker processes for verification")
    g.add_argument("--config", help="YAML or JSON file setting bound, jobs and max_rank")

    parser = _Parser(prog="stablepieces", description="G-stable pieces: enumeration, counts, closures.",
                     epilog=LABEL_HELP, formatter_class=argparse.RawDescriptionHelpFormatter,
                     parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_, epilog=LABEL_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=fn)
        return p

    p = add("pieces", cmd_pieces, "list piece labels (J, w)")
    p.add_argument("--with-chain", action="store_true", help="attach the beta-sequence and J_inf")

    p = add("boundary", cmd_boundary, "pieces in the boundary of the unipotent closure")
    p.add_argument("--count", action="store_true", help="print the point count as a polynomial in q")
    p.add_argument("--check", action="store_true", help="compare the closed form with the sum over pieces")

    p = add("closure", cmd_closure, "orbit closure queries")
    p.add_argument("--a", help="orbit label J|x|w whose closure is tested")
    p.add_argument("--b", help="orbit label K|x'|w' tested for membership")
    p.add_argument("--coxeter-piece", action="store_true", help="list the pieces in a Coxeter piece closure")
    p.add_argument("--i", type=int, help="node i, with J = I - {i}")
    p.add_argument("--w", help="Coxeter element as a word")

    p = add("count", cmd_count, "point counts over F_q")
    p.add_argument("--piece", help="count a single piece J|w")

    p = add("coxeter", cmd_coxeter, "Coxeter elements")
    p.add_argument("--i", type=int, help="show the layers and w^J for node i")
    p.add_argument("--conjugate", nargs=2, metavar=("C", "C2"), help="conjugating word over I - {i}")
    p.add_argument("--below", metavar="J|w", help="a Coxeter element of W^J below w")

    p = add("verify", cmd_verify, "run verification suites")
    p.add_argument("--suite", default="all",
                   help=f"one of: all, {', '.join(SUITES)} (aliases: {', '.join(ALIASES)})")
    return parser


# options whose values may legitimately start with "-" (the empty set or word)
_LABEL_OPTIONS = ("--a", "--b", "--w", "--piece", "--below")


def _glue_label_values(argv: list) -> list:
    out = []
    k = 0
    while k < len(argv):
        tok = argv[k]
        if tok in _LABEL_OPTIONS and k + 1 < len(argv) and argv[k + 1].startswith("-") \
                and not argv[k + 1].startswith("--"):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_label_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a command is required")
        cfg = _load_config(args.config)
        for key, default in (("bound", None), ("jobs", 1), ("max_rank", 4)):
            if getattr(args, key) is None:
                setattr(args, key, cfg.get(key, default))
        if args.bound is not None and args.bound < 1:
            raise UsageError("--bound must be positive")
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except UsageError as e:
        print(f"stablepieces: error: {e}", file=sys.stderr)
        return 2
    except W.EnumerationBoundError as e:
        print(f"stablepieces: {e}; raise --bound to allow it", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
