"""Command-line front end.

Subcommands::

    coeffs   print a coefficient sequence
    bound    lower bounds for a graph file
    witness  build and verify an independent-set witness
    exact    exact independence number (branch and bound)
    gen      generate a named family member as an edge list
    verify   cross-check bounds, witness and exact solver on one graph
    table    side-by-side c- and d-coefficients for one max degree

Every command accepts ``--json`` where a machine-readable mirror makes
sense.  Output is deterministic: same invocation, same bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from .bounds import bound_report, brooks_bound, c_bound, caro_wei_bound, d_bound, truncated_c_bound
from .coeffs import c_sequence, clipped_sequence, d_sequence, render_decimal
from .exact import DEFAULT_BUDGET, BudgetExceeded, exact_alpha
from .families import (attach_cliques, chain_blocks, cycle_with_pendants,
                       random_connected, regular_blocks, regular_template)
from .graphcore import Graph, ParseError, degree_profile, load_graph, require_in_class, write_edge_list
from .witness import (BaseStep, PeelStep, check_clique_weighting,
                      clipped_weights, peel_witness)

ENV_BUDGET = "ALPHABOUND_BUDGET"


def _exact_str(value) -> str:
    return str(value)


def _decimal_str(value, digits: int = 12) -> str:
    return render_decimal(value, digits)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}")


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"not a range: {text!r} (expected A..B)")
    if a > b:
        raise ValueError(f"empty range: {text!r}")
    return a, b


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{ENV_BUDGET} must be positive")
    return value


# ---------------------------------------------------------------------------
# coeffs

def cmd_coeffs(args) -> int:
    if args.kind == "c":
        seq = c_sequence(args.delta)
    elif args.kind == "d":
        seq = d_sequence(args.delta)
    else:
        tail = _parse_fraction(args.c_delta) if args.c_delta else Fraction(2, 2 * args.delta + 1)
        seq = clipped_sequence(args.delta, tail)
    fmt, digits = args.format
    if fmt == "rational":
        values = [_exact_str(v) for v in seq]
    else:
        values = [_decimal_str(v, digits) for v in seq]
    if args.json:
        print(json.dumps({"kind": seq.kind, "delta": seq.delta, "values": values},
                         indent=2, sort_keys=True))
    else:
        letter = "d" if seq.kind == "d" else "c"     # clipped is a c-variant
        for i, v in enumerate(values, start=1):
            print(f"{letter}[{i}] = {v}")
    return 0


def _parse_format(text: str):
    if text == "rational":
        return "rational", None
    if text == "decimal" or text.startswith("decimal:"):
        digits = 12
        if ":" in text:
            try:
                digits = int(text.partition(":")[2])
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad digit count in {text!r}")
        if digits < 1:
            raise argparse.ArgumentTypeError("digit count must be positive")
        return "decimal", digits
    raise argparse.ArgumentTypeError(f"unknown format {text!r}; use rational or decimal[:N]")


# ---------------------------------------------------------------------------
# bound

def _bound_rows(g: Graph, deltas: tuple[int, ...]):
    report = bound_report(g, truncation_deltas=deltas)
    rows = [("brooks", report.brooks), ("weighted", report.weighted)]
    rows += [(f"truncated[{d}]", report.truncated[d]) for d in sorted(report.truncated)]
    rows += [("euler", report.euler), ("caro-wei", report.caro_wei)]
    return report, rows


def cmd_bound(args) -> int:
    g = load_graph(args.graph)
    delta = require_in_class(g)
    deltas: tuple[int, ...] = ()
    if args.delta_range:
        a, b = args.delta_range
        deltas = tuple(range(a, b + 1))
    report, rows = _bound_rows(g, deltas)
    profile = degree_profile(g)
    if args.json:
        data = {
            "graph": args.graph,
            "n": g.n,
            "m": g.m,
            "delta": delta,
            "degree_classes": {str(i): profile.count(i)
                               for i in range(1, delta + 1) if profile.count(i)},
            "bounds": {name: {"exact": _exact_str(v), "decimal": _decimal_str(v)}
                       for name, v in rows},
            "best": report.best,
        }
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"graph: {args.graph} (n={g.n}, m={g.m}, max degree {delta})")
    classes = ", ".join(f"|V_{i}|={profile.count(i)}"
                        for i in range(1, delta + 1) if profile.count(i))
    print(f"degree classes: {classes}")
    width = max(len(name) for name, _ in rows)
    for name, v in rows:
        print(f"{name.ljust(width)}  {_exact_str(v):>18}  {_decimal_str(v)}")
    print(f"best: {report.best}")
    return 0


# ---------------------------------------------------------------------------
# witness

def _step_dict(step) -> dict:
    if isinstance(step, PeelStep):
        return {
            "type": "peel",
            "vertex": step.vertex,
            "degree": step.degree,
            "neighbors": list(step.neighbors),
            "isolated": list(step.isolated),
            "components": [list(c) for c in step.components],
            "share": str(step.share),
            "isolated_share": str(step.isolated_share),
            "handoff_shares": [str(h) for h in step.handoff_shares],
            "target": str(step.target),
            "owed": str(step.owed),
        }
    assert isinstance(step, BaseStep)
    return {
        "type": step.kind,
        "vertices": list(step.vertices),
        "taken": list(step.taken),
        "target": str(step.target),
        "owed": str(step.owed),
    }


def cmd_witness(args) -> int:
    g = load_graph(args.graph)
    result = peel_witness(g)
    size = len(result.independent_set)
    if args.trace:
        payload = {
            "graph": args.graph,
            "independent_set": list(result.independent_set),
            "certified_bound": str(result.certified_bound),
            "steps": [_step_dict(s) for s in result.trace],
        }
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.json:
        print(json.dumps({
            "size": size,
            "bound": str(result.certified_bound),
            "bound_decimal": _decimal_str(result.certified_bound),
            "independent_set": list(result.independent_set),
            "steps": len(result.trace),
        }, indent=2, sort_keys=True))
        return 0
    print(f"independent set of size {size}: "
          + " ".join(str(v) for v in result.independent_set))
    print(f"certified bound: {result.certified_bound} "
          f"(= {_decimal_str(result.certified_bound)})")
    print(f"check: {size} >= {result.certified_bound}: ok")
    print(f"trace: {len(result.trace)} steps"
          + (f" written to {args.trace}" if args.trace else ""))
    return 0


# ---------------------------------------------------------------------------
# exact

def cmd_exact(args) -> int:
    g = load_graph(args.graph)
    result = exact_alpha(g, budget=_budget(args))
    if args.json:
        print(json.dumps({
            "alpha": result.alpha,
            "nodes": result.nodes_explored,
            "optimal_set": sorted(result.optimal_set),
        }, indent=2, sort_keys=True))
        return 0
    print(f"alpha = {result.alpha}")
    print("optimal set: " + " ".join(str(v) for v in sorted(result.optimal_set)))
    print(f"nodes explored: {result.nodes_explored}")
    return 0


# ---------------------------------------------------------------------------
# gen

def cmd_gen(args) -> int:
    family = args.family
    if family == "regular-blocks":
        if args.delta is None or args.template_size is None:
            raise ValueError("regular-blocks needs --delta and --template-size")
        template = regular_template(args.delta, args.template_size)
        g = regular_blocks(args.delta, template)
        header = f"gen regular-blocks delta={args.delta} template-size={args.template_size}"
    elif family == "chain":
        if args.delta is None or args.blocks is None:
            raise ValueError("chain needs --delta and --blocks")
        g = chain_blocks(args.delta, args.blocks)
        header = f"gen chain delta={args.delta} blocks={args.blocks}"
    elif family == "attach":
        if args.delta is None or args.blocks is None or args.clique is None:
            raise ValueError("attach needs --delta, --blocks and --clique")
        g = attach_cliques(args.delta, args.blocks, args.clique)
        header = f"gen attach delta={args.delta} blocks={args.blocks} clique={args.clique}"
    elif family == "pendant-cycle":
        if args.cycle is None:
            raise ValueError("pendant-cycle needs --cycle")
        g = cycle_with_pendants(args.cycle)
        header = f"gen pendant-cycle cycle={args.cycle}"
    else:
        if args.vertices is None or args.delta is None:
            raise ValueError("random needs --vertices and --delta")
        g = random_connected(args.vertices, args.delta, args.seed)
        header = f"gen random vertices={args.vertices} delta={args.delta} seed={args.seed}"
    text = write_edge_list(g, header=header)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    if g.n == 0:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise ValueError("graph not connected")
    if g.is_complete():
        raise ValueError(
            f"graph is the complete graph on {g.n} vertices; bounds do not apply")
    delta = require_in_class(g)

    checks: list[tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str) -> None:
        checks.append((name, ok, detail))

    deltas: tuple[int, ...] = ()
    if args.delta_range:
        a, b = args.delta_range
        deltas = tuple(range(a, b + 1))
    report, rows = _bound_rows(g, deltas)

    result = peel_witness(g)
    size = len(result.independent_set)
    check("witness covers weighted bound",
          Fraction(size) >= report.weighted,
          f"{size} >= {report.weighted}")

    wcheck = check_clique_weighting(g, clipped_weights(g))
    check("clipped weighting satisfies clique conditions", wcheck.ok,
          f"total {wcheck.total}" if wcheck.ok else
          (f"vertex {wcheck.violating_vertex} over cap"
           if wcheck.violating_vertex is not None
           else f"clique {wcheck.violating_clique} over 1"))

    alpha: Optional[int] = None
    if g.n <= args.exact_threshold:
        alpha = exact_alpha(g, budget=_budget(args)).alpha
        for name, value in rows:
            check(f"{name} bound <= alpha", value <= alpha, f"{value} <= {alpha}")
        check("witness size <= alpha", size <= alpha, f"{size} <= {alpha}")
        if wcheck.ok:
            check("weighting total <= alpha", wcheck.total <= alpha,
                  f"{wcheck.total} <= {alpha}")

    ok_all = all(ok for _, ok, _ in checks)
    if args.json:
        print(json.dumps({
            "graph": args.graph,
            "delta": delta,
            "alpha": alpha,
            "witness_size": size,
            "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in checks],
            "ok": ok_all,
        }, indent=2, sort_keys=True))
    else:
        print(f"graph: {args.graph} (n={g.n}, m={g.m}, max degree {delta})")
        if alpha is not None:
            print(f"alpha = {alpha}")
        for name, ok, detail in checks:
            print(f"check {name}: {'ok' if ok else 'FAIL'} ({detail})")
        print("all checks passed" if ok_all else "VERIFICATION FAILED")
    return 0 if ok_all else 1


# ---------------------------------------------------------------------------
# table

def cmd_table(args) -> int:
    cs = c_sequence(args.delta)
    ds = d_sequence(args.delta)
    digits = args.digits
    rows = []
    for i in range(1, args.delta + 1):
        gap = abs(cs[i] - ds[i])
        rows.append((i, _exact_str(cs[i]), _decimal_str(cs[i], digits),
                     _decimal_str(ds[i], digits), _decimal_str(gap, digits)))
    if args.json:
        print(json.dumps([{"i": i, "c": ce, "c_decimal": cd,
                           "d_decimal": dd, "gap": gp}
                          for i, ce, cd, dd, gp in rows],
                         indent=2, sort_keys=True))
        return 0
    head = ("i", "c exact", "c decimal", "d decimal", "|c - d|")
    widths = [max(len(str(r[k])) for r in rows + [head]) for k in range(5)]
    print("  ".join(h.ljust(w) for h, w in zip(head, widths)))
    for r in rows:
        print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="alphabound",
        description="Degree-weighted lower bounds on the independence number "
                    "of connected bounded-degree graphs, with witnesses.")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("coeffs", help="print a coefficient sequence")
    pc.add_argument("--delta", type=int, required=True)
    pc.add_argument("--kind", choices=("c", "d", "clipped"), default="c")
    pc.add_argument("--c-delta", help="tail value for --kind clipped, e.g. 2/9")
    pc.add_argument("--format", type=_parse_format, default=("rational", None),
                    help="rational (default) or decimal[:digits]")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_coeffs)

    pb = sub.add_parser("bound", help="lower bounds for a graph file")
    pb.add_argument("graph")
    pb.add_argument("--delta-range", type=_parse_range, default=None,
                    help="also evaluate truncated bounds for A..B")
    pb.add_argument("--json", action="store_true")
    pb.set_defaults(func=cmd_bound)

    pw = sub.add_parser("witness", help="independent-set witness for the bound")
    pw.add_argument("graph")
    pw.add_argument("--trace", help="write the step trace to this JSON file")
    pw.add_argument("--json", action="store_true")
    pw.set_defaults(func=cmd_witness)

    pe = sub.add_parser("exact", help="exact independence number")
    pe.add_argument("graph")
    pe.add_argument("--budget", type=int, default=None,
                    help=f"search node budget (default {ENV_BUDGET} or {DEFAULT_BUDGET})")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_exact)

    pg = sub.add_parser("gen", help="generate a family member as an edge list")
    pg.add_argument("family", choices=("regular-blocks", "chain", "attach",
                                       "pendant-cycle", "random"))
    pg.add_argument("--delta", type=int)
    pg.add_argument("--template-size", type=int)
    pg.add_argument("--blocks", type=int)
    pg.add_argument("--clique", type=int)
    pg.add_argument("--cycle", type=int)
    pg.add_argument("--vertices", type=int)
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("-o", "--output")
    pg.set_defaults(func=cmd_gen)

    pv = sub.add_parser("verify", help="cross-check bounds, witness, exact")
    pv.add_argument("graph")
    pv.add_argument("--delta-range", type=_parse_range, default=None)
    pv.add_argument("--exact-threshold", type=int, default=30,
                    help="run the exact solver when n is at most this")
    pv.add_argument("--budget", type=int, default=None)
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("table", help="c- and d-coefficients side by side")
    pt.add_argument("--delta", type=int, required=True)
    pt.add_argument("--digits", type=int, default=12)
    pt.add_argument("--json", action="store_true")
    pt.set_defaults(func=cmd_table)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}; best found so far has size {exc.best_size}",
              file=sys.stderr)
        return 1
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
