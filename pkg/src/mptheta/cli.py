"""Command-line interface.

Exit codes: 0 success, 1 parse/validation error, 2 internal invariant
breach (route disagreement, rank accounting failure).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import grammar, lifts, reps, universe
from .core import TRIVIAL_CHI, HalfInt, QuadChar
from .gamma import gamma_breakdown
from .grammar import ParseError, lift_json, parse_datum, parse_rep, render
from .lifts import NONSPLIT, SPLIT, RankAccountingError, Tower
from .reps import NotGenericError

OK, USAGE_ERROR, INTERNAL_ERROR = 0, 1, 2


def _emit(payload: dict, fmt: str, text_lines=None):
    if fmt == "text" and text_lines is not None:
        for line in text_lines:
            print(line)
    else:
        print(json.dumps(payload))


def _fail(message: str, pos=None) -> int:
    payload = {"error": message}
    if pos is not None:
        payload["pos"] = pos
    print(json.dumps(payload))
    return USAGE_ERROR


def _classify_one(expr: str, fmt: str) -> int:
    pi = parse_datum(expr)
    route_a = reps.is_generic_lq(pi)
    route_b = reps.is_generic_lq_via_coeff(pi)
    payload = {
        "input": render(pi),
        "generic": route_a.verdict,
        "generic_via_coeff": route_b,
        "witnesses": list(route_a.witnesses),
        "standard_reducible": None,
    }
    lines = [f"input: {payload['input']}",
             f"generic (data route): {route_a.verdict}",
             f"generic (coefficient route): {route_b}"]
    if route_a.witnesses:
        lines += [f"  witness: {w}" for w in route_a.witnesses]
    if route_a.verdict:
        red = reps.standard_module_reducible(pi)
        payload["standard_reducible"] = red.reducible
        payload["reducibility_witnesses"] = list(red.witnesses)
        lines.append(f"standard module reducible: {red.reducible}")
        lines += [f"  witness: {w}" for w in red.witnesses]
    _emit(payload, fmt, lines)
    if route_a.verdict != route_b:
        print(json.dumps({"error": "genericity routes disagree",
                          "input": payload["input"]}), file=sys.stderr)
        return INTERNAL_ERROR
    return OK


def _batch(expr: str, fmt: str, runner) -> int:
    if expr != "-":
        return runner(expr, fmt)
    worst = OK
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            code = runner(line, "json")
        except (ParseError, NotGenericError, ValueError) as exc:
            _fail(str(exc), getattr(exc, "pos", None))
            code = USAGE_ERROR
        worst = max(worst, code)
    return worst


def cmd_classify(args) -> int:
    return _batch(args.expr, args.format, _classify_one)


def cmd_occurrence(args) -> int:
    def run(expr, fmt):
        pi = parse_datum(expr)
        chi = _parse_chi(args.chi)
        fo = lifts.first_occurrence(pi, chi)
        payload = {"input": render(pi),
                   "first_occurrence": {"l": fo.l, "m_down": fo.m_down,
                                        "m_up": fo.m_up,
                                        "down_branch": fo.down_branch}}
        _emit(payload, fmt, [f"input: {payload['input']}",
                             f"l = {fo.l}, m_down = {fo.m_down}, "
                             f"m_up = {fo.m_up} ({fo.down_branch} tower down)"])
        return OK
    return _batch(args.expr, args.format, run)


def _parse_chi(text) -> QuadChar:
    if text in (None, "", "1"):
        return TRIVIAL_CHI
    if text.startswith("chi:"):
        text = text[4:]
    return QuadChar.named(text)


def _parse_tower(text: str) -> Tower:
    parts = text.split(":")
    chi = TRIVIAL_CHI
    branch = None
    i = 0
    while i < len(parts):
        if parts[i] == "chi":
            if i + 1 >= len(parts):
                raise ParseError("tower chi label missing", 0)
            chi = QuadChar.named(parts[i + 1])
            i += 2
        elif parts[i] in (SPLIT, NONSPLIT):
            branch = parts[i]
            i += 1
        else:
            raise ParseError(f"bad tower component {parts[i]!r}", 0)
    return Tower(chi, branch or SPLIT)


def _parse_level(text: str, pi) -> int:
    if text.startswith("m="):
        m = int(text[2:])
        return 2 * pi.rank + 1 - m
    return int(text)


def cmd_lift(args) -> int:
    def run(expr, fmt):
        pi = parse_datum(expr)
        tower = _parse_tower(args.tower)
        level = _parse_level(args.level, pi)
        result = lifts.theta_lift(pi, tower, level)
        if result is None:
            payload = {"input": render(pi), "lift": {"zero": True},
                       "branch": tower.branch, "l": level}
            _emit(payload, fmt, [f"input: {payload['input']}",
                                 f"lift at l={level} on {tower.branch}: zero"])
            return OK
        payload = {"input": render(pi), "lift": lift_json(result)}
        _emit(payload, fmt, [f"input: {payload['input']}",
                             _lift_text(result)])
        return OK
    return _batch(args.expr, args.format, run)


def _lift_text(result) -> str:
    facs = ", ".join(str(f) for f in result.gl_factors)
    sym = result.tempered
    param = "opaque" if sym.param is None else grammar.render(sym.param)
    return (f"theta[l={result.level}] on {result.branch} (m={result.target_dim}): "
            f"L({facs}; theta[{sym.level}]{param})")


def cmd_table(args) -> int:
    def run(expr, fmt):
        pi = parse_datum(expr)
        chi = _parse_chi(args.chi)
        table = lifts.lift_table(pi, chi, args.depth)
        ordered = sorted(table.items(), key=lambda kv: (kv[0][0], -kv[0][1]))
        payload = {"input": render(pi),
                   "lifts": [lift_json(v) for _, v in ordered]}
        _emit(payload, fmt, [f"input: {payload['input']}"]
              + [_lift_text(v) for _, v in ordered])
        return OK
    return _batch(args.expr, args.format, run)


def cmd_gamma_ord(args) -> int:
    segs = [parse_rep(s) for s in args.segments]
    at = HalfInt.parse(args.at)
    order, terms = gamma_breakdown(args.kind, segs, at)
    payload = {"kind": args.kind, "at": at.json(), "order": order,
               "terms": terms}
    _emit(payload, args.format,
          [f"order of {args.kind} gamma at {at}: {order}"]
          + [f"  {t['factor']}: {t['order']:+d}" for t in terms])
    return OK


def cmd_selftest(args) -> int:
    ok = universe.run_selftest(fast=args.fast)
    return OK if ok else INTERNAL_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mptheta",
        description="Classify generic metaplectic Langlands data and "
                    "compute their odd orthogonal theta lifts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    p = add("classify", cmd_classify,
            help="genericity (both routes), reducibility, witnesses")
    p.add_argument("expr", help="datum expression, or - for stdin batch")

    p = add("occurrence", cmd_occurrence, help="first-occurrence indices")
    p.add_argument("expr")
    p.add_argument("--chi", default=None, help="tower character label")

    p = add("lift", cmd_lift, help="one theta lift")
    p.add_argument("expr")
    p.add_argument("--tower", default=SPLIT,
                   help="split | nonsplit | chi:LBL[:split|:nonsplit]")
    p.add_argument("--level", required=True, help="even l, or m=<dim>")

    p = add("table", cmd_table, help="lift table on both branches")
    p.add_argument("expr")
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--chi", default=None)

    p = add("gamma-ord", cmd_gamma_ord,
            help="per-factor gamma order breakdown")
    p.add_argument("kind", choices=("std", "rs", "sym2"))
    p.add_argument("segments", nargs="+", help="segment expression(s)")
    p.add_argument("--at", required=True, help="evaluation point")

    p = add("selftest", cmd_selftest, help="run the enumeration properties")
    p.add_argument("--fast", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        return _fail(str(exc), exc.pos)
    except NotGenericError as exc:
        return _fail(str(exc))
    except (ValueError, TypeError) as exc:
        return _fail(str(exc))
    except RankAccountingError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
