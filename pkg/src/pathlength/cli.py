"""Command-line entry point: ``pathlength {analyze,plm,improve,count}``.

Exit codes: 0 success, 1 input error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from pathlength import io
from pathlength.enhance import METHODS, EnhanceError, improve
from pathlength.graph import Graph, GraphError
from pathlength.measures import analyze
from pathlength.tropical import NegativeCycleError, kpath_matrix, path_length_matrix, shortest_path_count

log = logging.getLogger("pathlength")

EXIT_INPUT = 1
EXIT_NUMERIC = 2


def _directed(value: str):
    v = value.lower()
    if v == "auto":
        return None
    if v in ("true", "yes", "1"):
        return True
    if v in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected auto, true or false, got {value!r}")


def _resolve_k(value, g: Graph, required=False) -> int:
    if value is None or value == "full":
        if required:
            raise GraphError("--k is required")
        return max(g.n - 1, 1)
    try:
        k = int(value)
    except ValueError:
        raise GraphError(f"--k must be an integer or 'full', got {value!r}") from None
    if g.n > 1 and not 1 <= k <= g.n - 1:
        raise GraphError(f"--k must lie in [1, {g.n - 1}], got {k}")
    return k


def _load(args) -> Graph:
    return io.read_graph(
        args.file,
        format=args.format,
        directed=args.directed,
        n=args.n,
        allow_negative=args.allow_negative,
    )


def cmd_analyze(args) -> int:
    g = _load(args)
    K = _resolve_k(args.k, g)
    full = path_length_matrix(g)
    level = full if K == full.k else kpath_matrix(g, K)
    report = analyze(full, level)
    if not report.connected:
        log.warning("graph is disconnected: closeness and average path length use the inf convention")
    if args.output == "json":
        out = io.report_json(report) + "\n"
    elif args.output == "csv":
        out = io.report_csv(report, args.decimals)
    else:
        out = io.report_table(report, args.decimals)
    sys.stdout.write(out)
    return 0


def cmd_plm(args) -> int:
    g = _load(args)
    K = _resolve_k(args.k, g)
    sys.stdout.write(io.matrix_text(kpath_matrix(g, K), args.output, args.decimals))
    return 0


def cmd_improve(args) -> int:
    g = _load(args)
    K = _resolve_k(args.k, g, required=True)
    if not 0 < args.factor < 1:
        raise GraphError(f"--factor must lie in (0, 1), got {args.factor}")
    props, g2 = improve(g, K, args.method, args.steps, args.factor, args.tol, args.max_iter)
    out = args.out
    if out is None:
        src = Path(args.file)
        out = src.with_name(src.stem + ".improved.edges")
    io.write_edgelist(g2, out)
    log.info("perturbed graph written to %s", out)
    sys.stdout.write(io.proposals_text(props, args.output, args.decimals))
    if args.output != "json":
        sys.stdout.write(f"# perturbed graph: {out}\n")
    else:
        sys.stdout.write("\n")
    return 0


def cmd_count(args) -> int:
    g = _load(args)
    for v in (args.source, args.target):
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} out of range 1..{g.n}")
    k_hat, p = shortest_path_count(g, args.source - 1, args.target - 1)
    if args.output == "json":
        import json

        sys.stdout.write(json.dumps({"from": args.source, "to": args.target, "length": k_hat, "count": p}) + "\n")
    else:
        length = "inf" if k_hat is None else str(k_hat)
        sys.stdout.write(f"length {length}\ncount {p}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathlength", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file")
    common.add_argument("--format", choices=io.FORMATS, default=None,
                        help="input format (default: by extension, .mtx is Matrix Market)")
    common.add_argument("--directed", type=_directed, default=None, metavar="{auto,true,false}",
                        help="declare directedness (default: detect from symmetry)")
    common.add_argument("--n", type=int, default=None, help="vertex count (default: largest index)")
    common.add_argument("--allow-negative", action="store_true", help="accept negative weights")
    common.add_argument("--decimals", type=int, default=4)

    p = sub.add_parser("analyze", parents=[common], help="all distance-based measures")
    p.add_argument("--k", default="full", help="level K for the K-measures (integer or 'full')")
    p.add_argument("--output", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("plm", parents=[common], help="print the K-path length matrix")
    p.add_argument("--k", default="full")
    p.add_argument("--output", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_plm)

    p = sub.add_parser("improve", parents=[common], help="recommend edge weights to halve")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--k", required=True)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--factor", type=float, default=0.5)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iter", type=int, default=10000)
    p.add_argument("--out", default=None, help="edge list for the perturbed graph")
    p.add_argument("--output", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("count", parents=[common], help="length and number of shortest paths (unweighted)")
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--output", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (NegativeCycleError, EnhanceError, ArithmeticError) as exc:
        log.error("%s", exc)
        return EXIT_NUMERIC
    except (GraphError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
