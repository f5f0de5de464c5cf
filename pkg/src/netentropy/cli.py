"""Command-line interface.

Exit codes: 0 success, 1 computation error, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import dynamics, entropy, generators, metrics, replication
from .errors import InvalidLogBaseError, NetEntropyError
from .graph import read_edge_list, write_edge_list

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "structured":
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    width = max(len(k) for k in payload)
    for key, value in payload.items():
        if isinstance(value, dict):
            out.write(f"{key}:\n")
            sub = max(len(k) for k in value)
            for k, v in value.items():
                out.write(f"  {k.ljust(sub)}  {_fmt(v)}\n")
        else:
            out.write(f"{key.ljust(width)}  {_fmt(value)}\n")


def _count(text: str) -> float:
    """Parse counts given as ``616000`` or ``1e11``; integral values become ints."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if math.isfinite(value) and value.is_integer() and abs(value) < 2 ** 53:
        return int(value)
    return value


def cmd_stats(args) -> dict:
    try:
        g = read_edge_list(args.path)
    except (OSError, NetEntropyError) as exc:
        raise UsageError(str(exc)) from exc
    policy = "strict" if args.strict_connectivity else "largest"
    if args.exact:
        sample = None
    elif args.sample_size is not None:
        sample = args.sample_size
    else:
        sample = metrics.default_sample_size(g.n)
    stats = metrics.network_stats(g, policy, sample, args.seed, args.workers)
    payload = {"stats": stats.as_dict()}
    try:
        if stats.L is None:
            raise InvalidLogBaseError("path length undefined for a single node")
        payload["entropy"] = entropy.network_entropy(stats.n, stats.L, stats.C).as_dict()
    except NetEntropyError as exc:
        payload["entropy"] = {"error": type(exc).__name__, "message": str(exc),
                              "H_ideal": entropy.ideal_entropy(stats.n)}
    return payload


def cmd_entropy(args) -> dict:
    return entropy.network_entropy(args.n, args.L, args.C).as_dict()


def cmd_rate(args) -> dict:
    if (args.years is None) == (args.t is None):
        raise UsageError("give exactly one of --years or --t")
    t, unit = (args.years, "year") if args.years is not None else (args.t, args.unit)
    result = dynamics.exponential_rate(args.q1, args.q2, t, unit)
    payload = result.as_dict()
    payload["per_decade"] = result.per("decade")
    payload["per_millennium"] = result.per("millennium")
    return payload


def cmd_date(args) -> dict:
    if args.interpretation == "paper-linear":
        if args.h_end is None:
            raise UsageError("--h-end is required for the paper-linear interpretation")
        return dynamics.paper_linear_duration(args.m, args.h_end, args.unit).as_dict()
    if args.q_start is None or args.q_end is None:
        raise UsageError("--q-start and --q-end are required for the exponential interpretation")
    return dynamics.date_duration(args.m, args.q_start, args.q_end, args.unit).as_dict()


def cmd_value(args) -> dict:
    delta = entropy.value_delta(args.m, args.C, args.L, args.n1, args.A)
    return {"m": args.m, "C": args.C, "L": args.L, "n1": args.n1, "A": args.A,
            "value_delta": delta}


def cmd_generate(args) -> dict:
    kind = args.kind
    if kind == "hierarchy":
        if args.L is None or args.eta is None:
            raise UsageError("hierarchy needs --L and --eta")
        h = generators.nested_hierarchy(args.L, args.eta)
        ok, violations = generators.verify_hierarchy(h)
        text = h.to_json() + "\n"
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        return {"kind": kind, "leaves": h.leaves, "generations": h.depth,
                "valid": ok, "output": args.output or "-",
                **({} if args.output else {"hierarchy": h.to_nested()})}
    if args.n is None:
        raise UsageError(f"{kind} needs --n")
    if kind == "complete":
        g = generators.complete_graph(args.n)
    elif kind == "ring":
        g = generators.ring_lattice(args.n, args.k)
    else:
        g = generators.watts_strogatz(args.n, args.k, args.p, args.seed)
    if args.output:
        write_edge_list(g, args.output)
        return {"kind": kind, "n": g.n, "edges": g.edge_count, "output": args.output}
    return {"kind": kind, "n": g.n, "edges": g.edge_count, "edge_list": g.to_edge_list()}


def cmd_replicate(args) -> dict:
    return {"report": replication.run_all()}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="text (6 significant digits) or structured JSON (full precision)")
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--strict-connectivity", action="store_true",
                        help="fail on disconnected graphs instead of using the largest component")

    parser = argparse.ArgumentParser(
        prog="netentropy",
        description="Small-world statistics, network entropy and entropy dating.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="measure n, L, C and entropy of an edge list")
    p.add_argument("path", help="edge-list file")
    p.add_argument("--sample-size", type=int, help="BFS sources for sampled L")
    p.add_argument("--exact", action="store_true", help="always compute L exactly")
    p.add_argument("--workers", type=int, default=1, help="processes for the BFS sweep")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("entropy", parents=[common], help="evaluate H = C log_L(n)")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--L", type=float, required=True)
    p.add_argument("--C", type=float, required=True)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("rate", parents=[common], help="exponential rate between two quantities")
    p.add_argument("--q1", type=_count, required=True)
    p.add_argument("--q2", type=_count, required=True)
    p.add_argument("--years", type=float, help="interval in years")
    p.add_argument("--t", type=float, help="interval in --unit")
    p.add_argument("--unit", choices=sorted(dynamics.TIME_UNITS), default="year")
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("date", parents=[common], help="entropy dating")
    p.add_argument("--m", type=float, required=True, help="rate per --unit")
    p.add_argument("--q-start", type=_count)
    p.add_argument("--q-end", type=_count)
    p.add_argument("--h-end", type=float)
    p.add_argument("--interpretation", choices=("exponential", "paper-linear"),
                   default="exponential")
    p.add_argument("--unit", choices=sorted(dynamics.TIME_UNITS), default="year")
    p.set_defaults(func=cmd_date)

    p = sub.add_parser("value", parents=[common], help="rate change from adding A nodes")
    p.add_argument("--m", type=float, required=True)
    p.add_argument("--C", type=float, required=True)
    p.add_argument("--L", type=float, required=True)
    p.add_argument("--n1", type=_count, required=True)
    p.add_argument("--A", type=_count, required=True)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("generate", parents=[common], help="write a synthetic graph or hierarchy")
    p.add_argument("kind", choices=("complete", "ring", "ws", "hierarchy"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--L", type=int, help="hierarchy branching")
    p.add_argument("--eta", type=int, help="hierarchy depth")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("replicate", parents=[common], help="recompute the published examples")
    p.set_defaults(func=cmd_replicate)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        payload = args.func(args)
    except UsageError as exc:
        err.write(f"netentropy {args.command}: {exc}\n")
        return EXIT_USAGE
    except NetEntropyError as exc:
        err.write(f"netentropy {args.command}: {type(exc).__name__}: {exc}\n")
        return EXIT_COMPUTE

    if args.command == "replicate":
        report = payload["report"]
        out.write(report.to_json() + "\n" if args.format == "structured" else report.to_text())
        return EXIT_OK if report.passed else EXIT_COMPUTE
    if args.command == "generate" and "edge_list" in payload and args.format == "text":
        out.write(payload["edge_list"])
        return EXIT_OK
    _emit(payload, args.format, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
