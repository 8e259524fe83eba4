"""Command-line front end: ``snakefrac <command> ...``.

Exit codes: 0 success or PASS, 1 an identity check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from snakefrac import asymptotics, cf_core, identities, labeled, matchings, snake
from snakefrac.gaussian import format_gaussian, parse_gaussian
from snakefrac.laurent import format_poly
from snakefrac.svg import render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class Outcome:
    lines: list
    data: dict = field(default_factory=dict)
    ok: bool = True


# --- argument helpers --------------------------------------------------------

def _shape_arg(text: str) -> tuple:
    """A shape ``d:TURNS`` (no NE choice) or a CF ``a1,a2,...`` (its own NE choice)."""
    if ":" in text:
        return snake.parse_shape(text), None
    return snake.cf_to_snake_with_edge(cf_core.parse_cf(text))


def _gaussian_list(text: str) -> list:
    return [parse_gaussian(t) for t in text.strip().strip("[]").split(",")]


def _graph_arg(args) -> labeled.LabeledSnakeGraph:
    if args.example:
        g = labeled.example_labeled_graph()
    elif args.cf:
        g = labeled.generic_labeling(cf_core.parse_cf(args.cf))
    elif args.file:
        text = sys.stdin.read() if args.file == "-" else _read(args.file)
        g = labeled.parse_labeled(text)
    else:
        raise UsageError("give a labeled-graph file, --cf or --example")
    if args.ne:
        g = g.with_ne(snake.NeChoice(args.ne))
    return g


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _point(text: str) -> tuple:
    parts = [parse_gaussian(t) for t in text.split(",")]
    if len(parts) != 3:
        raise UsageError("a point needs three coordinates x1,x2,x3")
    return tuple(parts)


# --- commands ----------------------------------------------------------------

def cmd_cf(args) -> Outcome:
    op = args.cf_op
    if op == "eval":
        value = cf_core.evaluate_general([parse_gaussian(t) for t in args.cf.split(",")])
        text = format_gaussian(value)
        if "/" not in text and "i" not in text:
            text += "/1"
        return Outcome([text], {"value": text})
    if op == "continuant":
        entries = [parse_gaussian(t) for t in args.cf.split(",")]
        value = format_gaussian(cf_core.continuant_ring(entries))
        return Outcome([value], {"continuant": value})
    if op == "from-rational":
        cf = cf_core.from_rational(cf_core.parse_rational(args.value))
        return Outcome([cf_core.format_cf(cf)], {"cf": cf_core.format_cf(cf)})
    if op == "scale":
        entries = [parse_gaussian(t) for t in args.cf.split(",")]
        scaled = cf_core.scale(entries, parse_gaussian(args.factor))
        text = ",".join(format_gaussian(e) for e in scaled)
        value = format_gaussian(cf_core.evaluate_general(scaled))
        return Outcome([text, f"value = {value}"], {"cf": text, "value": value})
    if op == "reverse":
        cf = cf_core.reverse(cf_core.parse_cf(args.cf))
        return Outcome([cf_core.format_cf(cf)], {"cf": cf_core.format_cf(cf)})
    raise UsageError(f"unknown cf operation {op}")


def cmd_snake(args) -> Outcome:
    op = args.snake_op
    if op == "from-cf":
        cf = cf_core.parse_cf(args.cf)
        shape, signs = snake.cf_to_snake(cf)
        _, ne = snake.cf_to_snake_with_edge(cf)
        data = {"shape": snake.format_shape(shape), "ne": ne.value if ne else None,
                "signs": snake.format_signs(signs)}
        lines = [data["shape"], f"ne = {data['ne']}", f"signs = {data['signs']}"]
        return Outcome(lines, data)
    shape = snake.parse_shape(args.shape)
    if op == "to-cf":
        cf = (snake.snake_to_cf(shape, snake.NeChoice(args.ne)) if args.ne
              else snake.snake_to_cf_canonical(shape))
        return Outcome([cf_core.format_cf(cf)], {"cf": cf_core.format_cf(cf)})
    if op == "chi":
        value = cf_core.format_rational(snake.chi(shape))
        return Outcome([value], {"chi": value})
    if op == "rotate":
        text = snake.format_shape(snake.rotate180(shape))
        return Outcome([text], {"shape": text})
    raise UsageError(f"unknown snake operation {op}")


def cmd_count_matchings(args) -> Outcome:
    shape, _ = _shape_arg(args.target)
    n = matchings.count_matchings(shape)
    if args.enumerate:
        listed = len(matchings.enumerate_matchings(shape))
        if listed != n:
            return Outcome([f"{listed} != {n} FAIL"], {"count": n, "enumerated": listed}, False)
    return Outcome([str(n)], {"count": n})


def cmd_list_matchings(args) -> Outcome:
    shape, _ = _shape_arg(args.target)
    ms = matchings.enumerate_matchings(shape)
    lines = [matchings.format_matching(m) for m in ms]
    return Outcome(lines, {"count": len(ms), "matchings": lines})


def cmd_totient_count(args) -> Outcome:
    cfs = [cf for cf, _ in snake.snakes_with_matching_count_cfs(args.N)]
    texts = [cf_core.format_cf(cf) for cf in cfs]
    return Outcome([str(len(cfs))] + texts, {"count": len(cfs), "cfs": texts})


def cmd_expand(args) -> Outcome:
    g = _graph_arg(args)
    poly = format_poly(labeled.msw_expand(g, args.method))
    return Outcome([poly], {"cf": cf_core.format_cf(g.cf()), "expansion": poly})


def cmd_verify_quotient(args) -> Outcome:
    g = _graph_arg(args)
    rep = labeled.verify_quotient(g)
    L = [format_poly(p) for p in rep.L]
    verdict = "PASS" if rep.holds else "FAIL"
    lines = [f"cf = {cf_core.format_cf(g.cf())}"]
    lines += [f"L{k} = {p}" for k, p in enumerate(L, 1)]
    lines += [f"lhs = {format_poly(rep.lhs)}", f"rhs = {format_poly(rep.rhs)}", verdict]
    data = {"cf": cf_core.format_cf(g.cf()), "L": L, "lhs": format_poly(rep.lhs),
            "rhs": format_poly(rep.rhs), "verdict": verdict}
    return Outcome(lines, data, rep.holds)


def cmd_complex_continuant(args) -> Outcome:
    z = _gaussian_list(args.cf)
    direct = cf_core.continuant_ring(z)
    g, point, a = labeled.complex_specialize(z)
    L_vals = [p.eval(point) for p in labeled.L_sequence(g)]
    via_graph = cf_core.continuant_ring(L_vals)
    ok = via_graph == direct and L_vals == z
    changed = sorted((k for k, v in point.items() if v != 1), key=labeled.natural_key)
    data = {
        "continuant": format_gaussian(direct),
        "a": cf_core.format_cf(a),
        "weights": {k: format_gaussian(point[k]) for k in changed},
        "L": [format_gaussian(v) for v in L_vals],
        "verdict": "PASS" if ok else "FAIL",
    }
    lines = [data["continuant"], f"a = {data['a']}"]
    lines += [f"{k} = {v}" for k, v in data["weights"].items()]
    lines += [f"L = {','.join(data['L'])}",
              f"N[L] = {format_gaussian(via_graph)} {data['verdict']}"]
    return Outcome(lines, data, ok)


def _report_outcome(rep: identities.IdentityReport) -> Outcome:
    data = {"identity": rep.name, "lhs": str(rep.lhs), "rhs": str(rep.rhs),
            "instance": rep.description, "verdict": rep.verdict()}
    return Outcome([str(rep)], data, rep.holds)


def cmd_identity(args) -> Outcome:
    which = args.which
    if which == "a":
        return _report_outcome(identities.check_a(cf_core.parse_cf(args.cf), args.i))
    if which == "b":
        return _report_outcome(identities.check_b(cf_core.parse_cf(args.cf), args.i, args.j))
    if which == "c":
        rep = identities.check_c(cf_core.parse_cf(args.a), cf_core.parse_cf(args.b),
                                 args.i, args.j, args.k, literal_sign=args.literal_sign)
        return _report_outcome(rep)
    if which == "fuzz":
        res = identities.fuzz(args.count, args.seed)
        lines = [f"{k}: {v}" for k, v in res.counts.items()]
        lines += [f"FAIL {r.name} {r.description}" for r in res.failures]
        lines.append("PASS" if res.ok else "FAIL")
        data = {"counts": res.counts, "failures": [r.description for r in res.failures],
                "verdict": "PASS" if res.ok else "FAIL"}
        return Outcome(lines, data, res.ok)
    raise UsageError(f"unknown identity {which}")


def cmd_limit(args) -> Outcome:
    point = _point(args.point)
    digits = args.precision
    rows = asymptotics.limit_table(point, args.imax, args.variant)
    lines, table = [], []
    for row in rows:
        ratio = asymptotics.to_decimal(row.u_over_v, digits)
        growth = None if row.u_ratio is None else asymptotics.to_decimal(row.u_ratio, digits)
        lines.append(f"{row.i} {ratio} {'-' if growth is None else growth}")
        table.append({"i": row.i, "u_over_v": str(ratio),
                      "u_ratio": None if growth is None else str(growth)})
    a = asymptotics.alpha(point)
    b = asymptotics.beta(point)
    data = {"rows": table, "alpha": str(a), "alpha_value": a.render(digits),
            "beta": str(b), "beta_value": b.render(digits)}
    lines += [f"alpha = {a} = {data['alpha_value']}", f"beta = {b} = {data['beta_value']}"]
    return Outcome(lines, data)


def cmd_metallic(args) -> Outcome:
    reports = asymptotics.metallic_checks(args.n)
    lines = [f"{r.name} {r.description} {r.verdict()}" for r in reports]
    ok = all(r.holds for r in reports)
    data = {"rows": [{"row": r.name, "check": r.description, "lhs": str(r.lhs),
                      "rhs": str(r.rhs), "verdict": r.verdict()} for r in reports],
            "verdict": "PASS" if ok else "FAIL"}
    return Outcome(lines + ["PASS" if ok else "FAIL"], data, ok)


def cmd_render(args) -> Outcome:
    labels = tile_labels = None
    if os.path.exists(args.target):
        g = labeled.parse_labeled(_read(args.target))
        shape = g.shape
        labels = {e: g.weight_of(e) for e in matchings.edges_of(shape)}
        tile_labels = dict(g.tile_label)
    else:
        shape, _ = _shape_arg(args.target)
    ms = matchings.enumerate_matchings(shape) if args.matchings else None
    svg = render_svg(shape, labels, tile_labels, ms)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    panels = len(ms) if ms is not None else 1
    return Outcome([f"wrote {args.out} ({panels} panel{'s' if panels != 1 else ''})"],
                   {"out": args.out, "panels": panels})


# --- parser ------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                   help="decimal digits for surds and limits (default 40)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                   help="output format (default text)")
    return p


def _graph_options(p: argparse.ArgumentParser):
    p.add_argument("file", nargs="?", help="labeled-graph file, '-' for stdin")
    p.add_argument("--cf", help="use the generic labeling of this continued fraction")
    p.add_argument("--example", action="store_true", help="use the built-in five-tile example")
    p.add_argument("--ne", choices=("N", "E"), help="override the last-edge reading")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="snakefrac", parents=[common],
                                     description="Snake graphs, continued fractions and expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("cf", cmd_cf, "continued-fraction arithmetic")
    cs = p.add_subparsers(dest="cf_op", required=True)
    for name, help_ in (("eval", "value p/q"), ("continuant", "continuant"),
                        ("reverse", "reversed coefficients")):
        q = cs.add_parser(name, parents=[common], help=help_)
        q.add_argument("cf")
    q = cs.add_parser("from-rational", parents=[common], help="CF of p/q")
    q.add_argument("value")
    q = cs.add_parser("scale", parents=[common], help="entries scaled so the value scales by r")
    q.add_argument("cf")
    q.add_argument("factor")

    p = add("snake", cmd_snake, "snake graph shapes")
    ss = p.add_subparsers(dest="snake_op", required=True)
    q = ss.add_parser("from-cf", parents=[common], help="shape, last edge and signs of a CF")
    q.add_argument("cf")
    q = ss.add_parser("to-cf", parents=[common], help="CF of a shape")
    q.add_argument("shape")
    q.add_argument("--ne", choices=("N", "E"), help="last-edge choice; omitted gives the canonical CF")
    for name, help_ in (("chi", "matching count over tail count"), ("rotate", "rotate by 180 degrees")):
        q = ss.add_parser(name, parents=[common], help=help_)
        q.add_argument("shape")

    p = add("count-matchings", cmd_count_matchings, "number of perfect matchings")
    p.add_argument("target", help="shape d:TURNS or CF a1,a2,...")
    p.add_argument("--enumerate", action="store_true", help="cross-check by enumeration")
    p = add("list-matchings", cmd_list_matchings, "every perfect matching")
    p.add_argument("target", help="shape d:TURNS or CF a1,a2,...")
    p = add("totient-count", cmd_totient_count, "snake graphs with N perfect matchings")
    p.add_argument("N", type=int)

    p = add("expand", cmd_expand, "Laurent expansion of a labeled graph")
    _graph_options(p)
    p.add_argument("--method", choices=("dp", "enumerate"), default="dp")
    p = add("verify-quotient", cmd_verify_quotient, "check the quotient identity")
    _graph_options(p)

    p = add("complex-continuant", cmd_complex_continuant, "Gaussian continuant and its specialization")
    p.add_argument("cf", help="entries such as 2i,-3+i")

    p = add("identity", cmd_identity, "continuant identities")
    ids = p.add_subparsers(dest="which", required=True)
    q = ids.add_parser("a", parents=[common], help="splitting at one index")
    q.add_argument("--cf", required=True)
    q.add_argument("--i", type=int, required=True)
    q = ids.add_parser("b", parents=[common], help="overlapping ranges")
    q.add_argument("--cf", required=True)
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--j", type=int, required=True)
    q = ids.add_parser("c", parents=[common], help="two sequences sharing a window")
    for flag in ("--a", "--b"):
        q.add_argument(flag, required=True)
    for flag in ("--i", "--j", "--k"):
        q.add_argument(flag, type=int, required=True)
    q.add_argument("--literal-sign", action="store_true",
                   help="use (-1)^k in both branches")
    q = ids.add_parser("fuzz", parents=[common], help="random instances of every identity")
    q.add_argument("--count", type=int, default=100)

    p = add("limit", cmd_limit, "finite quotients of the torus family")
    p.add_argument("--point", default="1,1,1")
    p.add_argument("--imax", type=int, default=25)
    p.add_argument("--variant", choices=asymptotics.VARIANTS, default="ALT")
    p = add("metallic", cmd_metallic, "closed-form table checks")
    p.add_argument("--n", type=int, default=10)

    p = add("render", cmd_render, "SVG figure")
    p.add_argument("target", help="shape, CF or labeled-graph file")
    p.add_argument("--out", "-o", required=True)
    p.add_argument("--matchings", action="store_true", help="one panel per perfect matching")
    return parser


def _emit(outcome: Outcome, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(outcome.data, sort_keys=True, indent=2) + "\n")
    else:
        for line in outcome.lines:
            out.write(f"{line}\n")


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for name, default in (("precision", 40), ("seed", 0), ("format", "text")):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        outcome = args.func(args)
    except (UsageError, ValueError, ZeroDivisionError, IndexError, KeyError, OSError) as exc:
        print(f"snakefrac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(outcome, args.format, sys.stdout)
    return EXIT_OK if outcome.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
