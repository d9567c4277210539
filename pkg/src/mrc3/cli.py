"""Command-line interface: ``mrc3 {generate,classify,cover,verify,reduce,experiment}``.

Exit codes: 0 cover found / valid, 1 invalid cover, 2 no cover (NONE),
3 infeasible request, 4 parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .coloring import classify, color_gaps
from .experiment import KINDS, generate, run_experiment
from .fileio import (InstanceFile, ParseError, format_cover, read_cover, read_instance,
                     write_cover, write_instance)
from .graph_core import InfeasibleError, InputError, color_name, is_monochromatic, validate_cover
from .mcca import mcca, oracle_cap
from .oracle import solve_exact
from .reduction import min_big_m, reduce_to_complete
from .reload import ReloadCostMatrix, cover_cost

EXIT_OK, EXIT_INVALID, EXIT_NONE, EXIT_INFEASIBLE, EXIT_PARSE = 0, 1, 2, 3, 4


def _err(msg: str) -> None:
    print(f"mrc3: {msg}", file=sys.stderr)


def parse_range(text: str) -> list[int]:
    """'5,8-12,13-21:2' -> [5, 8, 9, 10, 11, 12, 13, 15, ..., 21]."""
    out: list[int] = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        step = 1
        if ":" in item:
            item, st = item.split(":", 1)
            step = int(st)
        if "-" in item:
            lo, hi = item.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1, step))
        else:
            out.append(int(item))
    return out


def cmd_generate(args) -> int:
    try:
        g = generate(args.n, args.kind, args.seed)
    except InfeasibleError as exc:
        if args.kind == "equitable":
            _err(f"K_{{4k+3}} admits no equitable 2-edge-coloring (n={args.n})")
        else:
            _err(str(exc))
        return EXIT_INFEASIBLE
    except InputError as exc:
        _err(str(exc))
        return EXIT_INFEASIBLE
    rho = ReloadCostMatrix.uniform(2, args.reload_cost)
    write_instance(args.out, InstanceFile.from_complete(g, rho))
    print(f"wrote K_{g.n} ({classify(g).value}) to {args.out}")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = read_instance(args.instance, args.asymmetric).complete_graph()
    cls = classify(g)
    print(f"{cls.value} (max color-degree gap {int(color_gaps(g).max())})")
    return EXIT_OK


def cmd_cover(args) -> int:
    f = read_instance(args.instance, args.asymmetric)
    g = f.complete_graph()
    if args.algorithm == "mcca":
        cover, trace = mcca(g)
        if cover is None:
            print(f"NONE ({trace.branch.value})")
            return EXIT_NONE
        detail = f"{trace.branch.value}, {color_name(trace.color)}"
    else:
        if g.n > oracle_cap():
            _err(f"oracle is capped at n <= {oracle_cap()} (set MRC3_ORACLE_CAP)")
            return EXIT_INFEASIBLE
        res = solve_exact(g, f.rho)
        cover = res.witness
        detail = f"oracle, {res.explored} covers evaluated"
    cost = cover_cost(g, f.rho, cover)
    if args.out:
        write_cover(args.out, cover)
    else:
        sys.stdout.write(format_cover(cover))
    print(f"cover: {len(cover)} cycle(s), sizes {cover.sizes}, cost {cost} ({detail})")
    return EXIT_OK


def cmd_verify(args) -> int:
    f = read_instance(args.instance, args.asymmetric)
    g = f.complete_graph()
    cover = read_cover(args.cover)
    ok, why = validate_cover(g.n, cover)
    if not ok:
        print(f"invalid: {why}")
        return EXIT_INVALID
    cols = is_monochromatic(g, cover)
    cost = cover_cost(g, f.rho, cover)
    if all(c is not None and c == cols[0] for c in cols):
        print(f"valid, monochromatic({color_name(cols[0])}), cost {cost}")
    else:
        print(f"valid, mixed, cost {cost}")
    for cyc, c in zip(cover, cols):
        print(f"  {' '.join(map(str, cyc))}: {color_name(c) if c is not None else 'mixed'}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    f = read_instance(args.instance, args.asymmetric)
    inst = f.general()
    try:
        red = reduce_to_complete(inst, args.big_m)
    except InputError as exc:
        _err(f"{exc} (minimum is {min_big_m(inst)})")
        return EXIT_INFEASIBLE
    write_instance(args.out, InstanceFile.from_complete(red.graph, red.rho))
    print(f"wrote K_{inst.n} with {len(red.fresh)} fresh color(s), big_m={red.rho.max_cost()}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    ns = parse_range(args.n)
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    seeds = range(args.seed_start, args.seed_start + args.seeds)
    if args.csv == "-":
        run_experiment(ns, kinds, seeds, sys.stdout, args.workers)
    else:
        with open(args.csv, "w", newline="") as out:
            run_experiment(ns, kinds, seeds, out, args.workers)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mrc3", description="Minimum reload cost cycle covers in 2-edge-colored complete graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_arg(sp):
        sp.add_argument("instance", help="instance file")
        sp.add_argument("--asymmetric", action="store_true", help="allow rho(a,b) != rho(b,a)")

    sp = sub.add_parser("generate", help="write a random equitable / nearly equitable instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", choices=KINDS, default="equitable")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reload-cost", type=int, default=1, help="symmetric red/blue reload cost")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("classify", help="report Equitable / NearlyEquitableOnly / Neither")
    instance_arg(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("cover", help="find a cycle cover (mcca or exact oracle)")
    instance_arg(sp)
    sp.add_argument("--algorithm", choices=("mcca", "oracle"), default="mcca")
    sp.add_argument("--out", help="cover file (default: stdout)")
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("verify", help="check a cover file against an instance")
    instance_arg(sp)
    sp.add_argument("cover")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="complete a general instance with fresh big-M colors")
    instance_arg(sp)
    sp.add_argument("--big-m", type=int, default=None, help="default: n * max(rho) + 1")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("experiment", help="batch-run mcca and write CSV")
    sp.add_argument("--n", default="13-21:2", help="orders, e.g. '5,8-12,13-21:2'")
    sp.add_argument("--kinds", default="nearly-strict", help=f"comma list of {', '.join(KINDS)}")
    sp.add_argument("--seeds", type=int, default=100, help="number of seeds per (n, kind)")
    sp.add_argument("--seed-start", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--csv", default="-", help="output path, '-' for stdout")
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_PARSE
    except InputError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except OSError as exc:
        _err(str(exc))
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
