"""Backend benchmark: compiled kernels vs the numpy fallback.

Run as `python -m ltoracle.bench`. Workloads are the package's real hot
paths: a full statevector run of a threshold oracle, one amplification round,
and a dense oracle unitary.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ltoracle.amplify import build_diffuser
from ltoracle.backends import available_backends
from ltoracle.circuit import concat
from ltoracle.oracles import build_less_than
from ltoracle.sim import _run_inplace, zero_state


def _time_run(circuit, amps_factory, kernels, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        amps = amps_factory()
        start = time.perf_counter()
        _run_inplace(circuit, amps, kernels=kernels)
        best = min(best, time.perf_counter() - start)
    return best


def _workloads(width: int):
    threshold = (2**width * 2) // 3 | 1  # odd, so the largest MCZ spans everything
    oracle = build_less_than(width, threshold)
    one_round = concat(oracle, build_diffuser(width))

    def fresh_state():
        return zero_state(width).amplitudes

    unit_width = min(width, 9)
    unit_oracle = build_less_than(unit_width, (2**unit_width * 2) // 3 | 1)

    def fresh_eye():
        dim = 2**unit_width
        flat = np.zeros(dim * dim, dtype=np.complex128)
        flat[:: dim + 1] = 1.0
        return flat

    return [
        (f"oracle_run (n={width})", oracle, fresh_state),
        (f"oracle+diffuser_run (n={width})", one_round, fresh_state),
        (f"oracle_unitary (n={unit_width})", unit_oracle, fresh_eye),
    ]


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--width", type=int, default=16, help="statevector width (default 16)")
    parser.add_argument("--repeats", type=int, default=3, help="best-of repeats (default 3)")
    args = parser.parse_args(argv)

    backends = available_backends()
    names = list(backends)
    print(f"backends: {', '.join(names)} (best of {args.repeats})")
    header = f"{'workload':<28}" + "".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, circuit, factory in _workloads(args.width):
        times = [_time_run(circuit, factory, backends[name], args.repeats) for name in names]
        row = f"{label:<28}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
