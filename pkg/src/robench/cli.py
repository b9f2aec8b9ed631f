"""Command-line front-end: instance generation, batch evaluation, 2-D
landscape export and the throughput benchmark.

All numeric outputs are deterministic functions of (--fn, --dim, --seed,
precision); only wall-clock timings vary between runs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import bench, catalog, fileio
from .catalog import Category
from .engine import EngineConfig, initialize, scalar_evaluator
from .errors import BenchmarkError, UnsupportedAtDim2
from .transforms import generate_instance


def _parse_fn_list(text: str) -> list[int]:
    if text == "all":
        return list(range(catalog.FUNCTION_COUNT))
    if text == "cec14":
        return list(bench.CEC14_OVERLAP_IDS)
    return [int(tok) for tok in text.split(",") if tok]


def _parse_dims(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok]


def _parse_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = text.split(":")
        lo, hi = float(lo), float(hi)
    except ValueError:
        raise BenchmarkError(f"bad --range '{text}', expected lo:hi") from None
    if not lo < hi:
        raise BenchmarkError(f"bad --range '{text}', need lo < hi")
    return lo, hi


def cmd_gen(args) -> int:
    fn_ids = _parse_fn_list(args.fn)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for fn in fn_ids:
        try:
            inst = generate_instance(fn, args.dim, args.seed)
        except BenchmarkError as exc:
            raise BenchmarkError(f"function {fn}: {exc}") from None
        path = out_dir / f"instance_f{fn:02d}_d{args.dim}_s{args.seed}.txt"
        fileio.store_instance(inst, path)
        print(path)
    return 0


def cmd_eval(args) -> int:
    precision = "single" if args.single else "double"
    batch = fileio.read_points(args.infile, args.dim, precision)
    engine = initialize(EngineConfig(dim=args.dim, max_concurrency=batch.count,
                                     seed=args.seed, precision=precision))
    result = engine.evaluate(args.fn, batch)
    fileio.write_values(result.values, args.out)
    engine.dispose()
    return 0


def cmd_grid(args) -> int:
    info = catalog.lookup(args.fn)
    if info.category is Category.HYBRID or (
            info.composition is not None and info.composition.hybrid_ids is not None):
        raise UnsupportedAtDim2(
            f"function {args.fn} ({info.name}) embeds hybrids and cannot be "
            f"evaluated on a 2-D grid"
        )
    lo, hi = _parse_range(args.range)
    nodes = np.linspace(lo, hi, args.steps)
    evaluate = scalar_evaluator(args.fn, 2, args.seed)
    values = np.empty((args.steps, args.steps))
    point = np.empty(2)
    for i in range(args.steps):
        point[0] = nodes[i]
        for j in range(args.steps):
            point[1] = nodes[j]
            values[i, j] = evaluate(point)
    fileio.write_grid(args.out, args.fn, args.seed, lo, hi, values)
    return 0


def cmd_bench(args) -> int:
    precision = "single" if args.single else "double"
    report = bench.run_protocol(
        fns=_parse_fn_list(args.fns), dims=_parse_dims(args.dims),
        batch=args.batch, runs=args.runs, seed=args.seed, precision=precision,
    )
    text = report.to_tsv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robench",
        description="Benchmark suite of 37 shifted/rotated test functions "
                    "with deterministic instances and dual-precision batch "
                    "evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate instance files")
    gen.add_argument("--fn", default="all", help="function id, comma list, or 'all'")
    gen.add_argument("--dim", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="output directory")
    gen.set_defaults(run=cmd_gen)

    ev = sub.add_parser("eval", help="evaluate a points file")
    ev.add_argument("--fn", type=int, required=True)
    ev.add_argument("--dim", type=int, required=True)
    ev.add_argument("--seed", type=int, default=0)
    ev.add_argument("--in", dest="infile", required=True, help="points file (one point per row)")
    ev.add_argument("--out", required=True, help="values file to write")
    ev.add_argument("--single", action="store_true", help="single-precision pipeline")
    ev.set_defaults(run=cmd_eval)

    grid = sub.add_parser("grid", help="export a 2-D landscape grid")
    grid.add_argument("--fn", type=int, required=True)
    grid.add_argument("--seed", type=int, default=0)
    grid.add_argument("--range", default="-100:100", help="mesh range lo:hi")
    grid.add_argument("--steps", type=int, default=101, help="nodes per axis")
    grid.add_argument("--out", required=True)
    grid.set_defaults(run=cmd_grid)

    bn = sub.add_parser("bench", help="run the throughput protocol")
    bn.add_argument("--dims", default="10,32,64,96", help="comma-separated dimensions")
    bn.add_argument("--batch", type=int, default=bench.PROTOCOL_BATCH)
    bn.add_argument("--runs", type=int, default=10)
    bn.add_argument("--fns", default="cec14", help="ids, 'all', or 'cec14'")
    bn.add_argument("--seed", type=int, default=0)
    bn.add_argument("--single", action="store_true")
    bn.add_argument("--out", help="report file (default: stdout)")
    bn.set_defaults(run=cmd_bench)

    return parser


def _glue_range(argv):
    """Join '--range lo:hi' into one token so a negative lo is not mistaken
    for an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            value = next(it, None)
            out.append(tok if value is None else f"--range={value}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_glue_range(list(argv)))
    try:
        return args.run(args)
    except BenchmarkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
