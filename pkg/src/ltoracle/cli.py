"""Command-line front end.

Subcommands: gen (write an oracle circuit as JSON), simulate (sample a stored
circuit), amplify (build + run + sample an amplification experiment), and
depth-compare (lowered-depth sweep of both synthesis methods as CSV).

Exit codes: 0 success, 2 invalid arguments (argparse), 3 domain errors such as
m out of range. Default output directory comes from LTORACLE_OUT_DIR (falling
back to the working directory) when --out has no directory part.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from ltoracle import circuit as circuit_io
from ltoracle.amplify import build_amplification, plan_iterations
from ltoracle.circuit import Circuit, depth, peephole_cancel_x
from ltoracle.errors import DomainError
from ltoracle.lowering import (
    SynthesisMethod,
    depth_sweep,
    summarize_sweep,
    sweep_to_csv,
)
from ltoracle.oracles import build_greater_equal, build_less_than, build_range
from ltoracle.sim import histogram_to_csv, histogram_to_json, run, sample

OUT_DIR_ENV = "LTORACLE_OUT_DIR"
DEFAULT_SHOTS = 20000
MAX_SWEEP_WIDTH = 10


def _out_path(arg: str | None, default_name: str) -> Path:
    base = Path(os.environ.get(OUT_DIR_ENV, "."))
    if arg is None:
        path = base / default_name
    else:
        path = Path(arg)
        if path.parent == Path("."):
            path = base / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _make_oracle(args: argparse.Namespace) -> tuple[Circuit, int, int]:
    """Build the requested oracle; returns (circuit, lo, hi) with the marked
    set equal to the interval [lo, hi)."""
    n = args.n
    if args.op == "lt":
        if args.m is None:
            raise DomainError("--op lt needs --m")
        return build_less_than(n, args.m), 0, args.m
    if args.op == "ge":
        if args.m is None:
            raise DomainError("--op ge needs --m")
        return build_greater_equal(n, args.m), args.m, 2**n
    if args.a is None or args.b is None:
        raise DomainError("--op range needs --a and --b")
    return build_range(n, args.a, args.b), args.a, args.b


def _write_histogram(histogram, fmt: str, out: Path) -> None:
    text = histogram_to_csv(histogram) if fmt == "csv" else histogram_to_json(histogram)
    out.write_text(text)


def cmd_gen(args: argparse.Namespace) -> int:
    oracle, _, _ = _make_oracle(args)
    if args.peephole:
        oracle = peephole_cancel_x(oracle)
    out = _out_path(args.out, "circuit.json")
    circuit_io.save(oracle, out)
    metrics = depth(oracle)
    print(f"width={oracle.width} gates={metrics.gate_count} depth={metrics.depth}")
    print(f"wrote {out}")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    loaded = circuit_io.load(Path(args.circuit))
    state = run(loaded)
    histogram = sample(state, args.shots, args.seed)
    out = _out_path(args.out, f"histogram.{args.format}")
    _write_histogram(histogram, args.format, out)
    top = max(histogram.counts, key=lambda s: histogram.counts[s])
    print(
        f"shots={histogram.shots} distinct_states={len(histogram.counts)} "
        f"top_state={top}"
    )
    print(f"wrote {out}")
    return 0


def cmd_amplify(args: argparse.Namespace) -> int:
    oracle, lo, hi = _make_oracle(args)
    marked = hi - lo
    plan = plan_iterations(args.n, marked)
    k = plan.k if args.iterations is None else args.iterations
    circuit = build_amplification(oracle, marked, iterations=k)
    state = run(circuit)
    histogram = sample(state, args.shots, args.seed)
    out = _out_path(args.out, f"histogram.{args.format}")
    _write_histogram(histogram, args.format, out)
    predicted = math.sin((2 * k + 1) * plan.theta) ** 2
    hits = sum(c for s, c in histogram.counts.items() if lo <= s < hi)
    print(
        f"iterations={k} predicted_success={predicted:.9f} "
        f"empirical_success={hits / histogram.shots:.9f}"
    )
    print(f"wrote {out}")
    return 0


def cmd_depth_compare(args: argparse.Namespace) -> int:
    if not 1 <= args.n_min <= args.n_max:
        raise DomainError(f"bad width range: {args.n_min}..{args.n_max}")
    if args.n_max > MAX_SWEEP_WIDTH:
        raise DomainError(f"--n-max capped at {MAX_SWEEP_WIDTH}, got {args.n_max}")
    widths = range(args.n_min, args.n_max + 1)
    reports = depth_sweep(widths, SynthesisMethod.LESS_THAN_ORACLE, peephole=args.peephole)
    reports += depth_sweep(widths, SynthesisMethod.DIAGONAL_BASELINE, peephole=args.peephole)
    out = _out_path(args.out, "depth_compare.csv")
    out.write_text(sweep_to_csv(reports))
    print(f"{'n':>3} {'method':<18} {'mean':>9} {'min':>6} {'max':>6}")
    for row in sorted(summarize_sweep(reports), key=lambda s: (s.n, s.method.value)):
        print(
            f"{row.n:>3} {row.method.value:<18} {row.mean_depth:>9.2f} "
            f"{row.min_depth:>6} {row.max_depth:>6}"
        )
    print(f"wrote {out}")
    return 0


def _add_oracle_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--op", choices=["lt", "ge", "range"], required=True,
                        help="oracle kind: less-than, greater-equal, or half-open range")
    parser.add_argument("--n", type=int, required=True, help="register width in qubits")
    parser.add_argument("--m", type=int, default=None, help="threshold for lt/ge")
    parser.add_argument("--a", type=int, default=None, help="range lower bound (inclusive)")
    parser.add_argument("--b", type=int, default=None, help="range upper bound (exclusive)")


def _add_sampling_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--shots", type=int, default=DEFAULT_SHOTS,
                        help=f"samples to draw (default {DEFAULT_SHOTS})")
    parser.add_argument("--seed", type=int, default=1, help="PRNG seed (default 1)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv",
                        help="histogram file format")
    parser.add_argument("--out", default=None, help="output path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ltoracle",
        description="Threshold phase oracles, amplitude amplification, and depth benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write an oracle circuit as JSON")
    _add_oracle_args(gen)
    gen.add_argument("--peephole", action="store_true", help="cancel adjacent X pairs")
    gen.add_argument("--out", default=None, help="output path")
    gen.set_defaults(func=cmd_gen)

    simulate = sub.add_parser("simulate", help="run a stored circuit and sample it")
    simulate.add_argument("--circuit", required=True, help="circuit JSON file")
    _add_sampling_args(simulate)
    simulate.set_defaults(func=cmd_simulate)

    amplify = sub.add_parser("amplify", help="run an amplification experiment")
    _add_oracle_args(amplify)
    amplify.add_argument("--iterations", type=int, default=None,
                         help="override the planned oracle+diffuser round count")
    _add_sampling_args(amplify)
    amplify.set_defaults(func=cmd_amplify)

    compare = sub.add_parser("depth-compare", help="lowered-depth sweep of both methods")
    compare.add_argument("--n-min", type=int, default=2, help="smallest width (default 2)")
    compare.add_argument("--n-max", type=int, default=7, help="largest width (default 7)")
    compare.add_argument("--peephole", action="store_true",
                         help="apply the X-cancel pass to both methods")
    compare.add_argument("--out", default=None, help="output CSV path")
    compare.set_defaults(func=cmd_depth_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run_main()
