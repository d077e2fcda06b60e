"""Command-line front end.

    skeinlab homfly --braid "2:[1,1,1]"
    skeinlab invariant --braid "2:[1,1]" --colors "[1]/[];[1]/[]" --invariant Pnorm --alpha 1
    skeinlab verify integrality --budget 2

Exit codes: 0 success, 2 bad input or component mismatch, 3 resource limit,
4 a quotient that should be Laurent is not.
"""

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .diagram import BraidWord, braid_closure
from .errors import ComponentMismatch, DivisionNotExact, ResourceLimit
from .homfly import DEFAULT_CACHE_SIZE, Evaluator
from .invariants import (
    DEFAULT_COLOR_BUDGET,
    DEFAULT_MAX_CROSSINGS,
    ColoredLink,
    InvariantReport,
    full_W,
    naive_P_link,
    normalized_P_link,
    parse_colors,
    reduced_P_knot,
    reduced_Q_link,
    set_default_evaluator,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_NOT_EXACT = 4

INVARIANTS = ("W", "P", "Q", "Pnorm", "Pnaive")


def _read_arg(text):
    # a value may name a file holding the actual text
    if text and not text.lstrip().startswith(("[", "{")) and ":" not in text:
        path = Path(text)
        if path.is_file():
            return path.read_text()
    return text


def _cache_size(args):
    if args.cache_size is not None:
        return args.cache_size
    env = os.environ.get("SKEINLAB_CACHE_SIZE")
    return int(env) if env else DEFAULT_CACHE_SIZE


def _evaluator(args):
    ev = Evaluator(
        cache_size=_cache_size(args),
        max_crossings=args.max_crossings,
        max_nodes=args.max_nodes,
    )
    set_default_evaluator(ev)
    return ev


def _emit(args, payload, text):
    if args.format == "json":
        if not args.reproducible:
            payload["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S%z")
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_homfly(args):
    braid = BraidWord.parse(_read_arg(args.braid))
    d = braid_closure(braid)
    ev = _evaluator(args)
    value = ev.evaluate(d)
    payload = {
        "braid": braid.to_json(),
        "components": d.component_count,
        "crossings": d.crossing_count,
        "self_writhe": list(d.self_writhe),
        "value": value.to_json(),
        "text": str(value),
        "stats": ev._stats(),
    }
    _emit(args, payload, str(value))
    return EXIT_OK


def _colored_link(args):
    if args.input:
        return ColoredLink.from_json(Path(args.input).read_text())
    if not args.braid:
        raise ValueError("--braid or --input is required")
    braid = BraidWord.parse(_read_arg(args.braid))
    if args.colors:
        colors = parse_colors(_read_arg(args.colors))
    else:
        colors = [([1], [])] * braid.component_count()
    return ColoredLink(braid, tuple(colors))


def cmd_invariant(args):
    cl = _colored_link(args)
    ev = _evaluator(args)
    which = args.invariant
    budget = args.budget
    if which == "W":
        rep = InvariantReport("W", full_W(cl, ev, budget), {"evaluator": ev._stats()})
    elif which == "P":
        rep = reduced_P_knot(cl, ev, budget)
    elif which == "Q":
        rep = reduced_Q_link(cl, args.alpha, ev, budget)
    elif which == "Pnorm":
        rep = normalized_P_link(cl, args.alpha, ev, budget)
    else:
        rep = naive_P_link(cl, ev, budget)
    if rep.finding:
        print(f"warning: {rep.finding}", file=sys.stderr)
    payload = {"link": cl.to_json(), "invariant": which, "alpha": args.alpha}
    payload.update(rep.to_json())
    flags = " ".join(f"{k}={str(v).lower()}" for k, v in rep.flags.items())
    text = "not in the coefficient ring" if rep.value is None else str(rep.value)
    _emit(args, payload, f"{text}\n{flags}")
    return EXIT_OK


def cmd_verify(args):
    _evaluator(args)
    checks = []
    for check in run_suite(args.suite, args.budget):
        checks.append(check)
        if args.format != "json":
            print(check, flush=True)
    failed = [c for c in checks if c.status == "fail"]
    counts = {}
    for c in checks:
        counts[c.status] = counts.get(c.status, 0) + 1
    if args.format == "json":
        _emit(args, {"suite": args.suite, "counts": counts, "checks": [c.to_json() for c in checks]}, "")
    else:
        print(" ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return EXIT_OK if not failed else 1


def _budget_flags(p):
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS, help="largest diagram the evaluator accepts")
    p.add_argument("--max-nodes", type=int, default=None, help="cap on uncached diagrams resolved")
    p.add_argument("--cache-size", type=int, default=None, help="memo entries (default $SKEINLAB_CACHE_SIZE or 2^20)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--reproducible", action="store_true", help="omit the timestamp from JSON output")


def build_parser():
    parser = argparse.ArgumentParser(prog="skeinlab", description="Colored HOMFLYPT invariants of braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homfly", help="framed HOMFLYPT of a braid closure")
    p.add_argument("--braid", required=True, help='"n:[g,...]", braid JSON, or a file holding either')
    _budget_flags(p)
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("invariant", help="colored invariants W, P, Q, Pnorm, Pnaive")
    p.add_argument("--braid", help='"n:[g,...]", braid JSON, or a file holding either')
    p.add_argument("--colors", help='"[2]/[1];[1]/[]" or JSON list of {"lambda":..,"mu":..}')
    p.add_argument("--input", help="colored-link JSON file with braid and colors")
    p.add_argument("--invariant", choices=INVARIANTS, default="W")
    p.add_argument("--alpha", type=int, default=1, help="reference component (1-based)")
    p.add_argument("--budget", type=int, default=DEFAULT_COLOR_BUDGET, help="max |lambda|+|mu| per component")
    _budget_flags(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("verify", help="run built-in verification suites")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--budget", type=int, default=None, help="color size bound used by the suite")
    _budget_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ComponentMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"partial_stats": exc.stats}, sort_keys=True), file=sys.stderr)
        return EXIT_RESOURCE
    except DivisionNotExact as exc:
        print(f"error: quotient not Laurent: {exc}", file=sys.stderr)
        return EXIT_NOT_EXACT
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
