"""Lowering to the {CX, RZ, SX, X} basis and depth comparison sweeps.

Rewrite rules (all exact up to global phase, all-to-all connectivity, no
routing, no post-lowering fusion):

  H          -> RZ(pi/2) . SX . RZ(pi/2)
  Z          -> RZ(pi)
  CP(t)      -> RZ(t/2)_c . CX . RZ(-t/2)_t . CX . RZ(t/2)_t
  MCZ size 2 -> H_t . CX . H_t (H expanded by the rule above)
  MCZ size k+1 >= 3 -> Gray-code cascade of 2^k - 1 CP(+-pi/2^{k-1}) gates
                       between the controls and the last listed qubit, then
                       each CP lowered
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from statistics import mean

from ltoracle.circuit import (
    Circuit,
    DepthMetrics,
    Gate,
    GateKind,
    depth,
    peephole_cancel_x,
)
from ltoracle.diagonal import less_than_phases, synthesize_diagonal
from ltoracle.errors import DomainError
from ltoracle.oracles import build_less_than

BASIS = frozenset({GateKind.CX, GateKind.RZ, GateKind.SX, GateKind.X})


def _h_gates(q: int) -> list[Gate]:
    half = math.pi / 2
    return [
        Gate(GateKind.RZ, (q,), half),
        Gate(GateKind.SX, (q,)),
        Gate(GateKind.RZ, (q,), half),
    ]


def _cp_gates(control: int, target: int, angle: float) -> list[Gate]:
    half = angle / 2
    return [
        Gate(GateKind.RZ, (control,), half),
        Gate(GateKind.CX, (control, target)),
        Gate(GateKind.RZ, (target,), -half),
        Gate(GateKind.CX, (control, target)),
        Gate(GateKind.RZ, (target,), half),
    ]


def expand_mcz(gate: Gate) -> list[Gate]:
    """Gray-code cascade of an MCZ on >= 3 qubits into CP and CX gates.

    The last listed qubit is the phase target; the walk accumulates control
    parities onto the highest set pattern bit, re-accumulating whenever a new
    leading bit enters (at that point the lower sources are provably clean).
    Emits exactly 2^k - 1 CP gates for k controls, alternating sign with
    pattern parity.
    """
    if gate.kind is not GateKind.MCZ or len(gate.qubits) < 3:
        raise ValueError(f"expand_mcz wants an MCZ on >= 3 qubits, got {gate}")
    controls = gate.qubits[:-1]
    target = gate.qubits[-1]
    k = len(controls)
    unit = math.pi / (1 << (k - 1))
    out: list[Gate] = []
    previous = 0
    for j in range(1, 1 << k):
        pattern = j ^ (j >> 1)
        changed = pattern ^ previous
        head = pattern.bit_length() - 1
        if changed == 1 << head:
            rest = pattern ^ (1 << head)
            b = 0
            while rest:
                if rest & 1:
                    out.append(Gate(GateKind.CX, (controls[b], controls[head])))
                rest >>= 1
                b += 1
        else:
            out.append(
                Gate(GateKind.CX, (controls[changed.bit_length() - 1], controls[head]))
            )
        sign = 1.0 if pattern.bit_count() % 2 else -1.0
        out.append(Gate(GateKind.CP, (controls[head], target), sign * unit))
        previous = pattern
    return out


def _lower_gate(gate: Gate) -> list[Gate]:
    kind = gate.kind
    if kind in BASIS:
        return [gate]
    if kind is GateKind.H:
        return _h_gates(gate.qubits[0])
    if kind is GateKind.Z:
        return [Gate(GateKind.RZ, gate.qubits, math.pi)]
    if kind is GateKind.CP:
        return _cp_gates(gate.qubits[0], gate.qubits[1], gate.angle)
    if kind is GateKind.MCZ:
        if len(gate.qubits) == 2:
            control, target = gate.qubits
            return [*_h_gates(target), Gate(GateKind.CX, (control, target)), *_h_gates(target)]
        lowered: list[Gate] = []
        for piece in expand_mcz(gate):
            lowered.extend(_lower_gate(piece))
        return lowered
    raise ValueError(f"no lowering rule for {kind.value}")


def lower(circuit: Circuit) -> Circuit:
    """Rewrite every gate into the {CX, RZ, SX, X} basis."""
    out: list[Gate] = []
    for gate in circuit.gates:
        out.extend(_lower_gate(gate))
    return Circuit(circuit.width, out)


class SynthesisMethod(str, Enum):
    LESS_THAN_ORACLE = "less_than_oracle"
    DIAGONAL_BASELINE = "diagonal_baseline"


@dataclass(frozen=True)
class DepthReport:
    n: int
    m: int
    method: SynthesisMethod
    metrics: DepthMetrics


def _build_for(method: SynthesisMethod, n: int, m: int) -> Circuit:
    if method is SynthesisMethod.LESS_THAN_ORACLE:
        return build_less_than(n, m)
    return synthesize_diagonal(less_than_phases(n, m))


def depth_sweep(
    n_values, method: SynthesisMethod, peephole: bool = False
) -> list[DepthReport]:
    """Lowered-circuit metrics for every threshold m at every width in
    n_values. The optional peephole pass applies identically to any method."""
    reports = []
    for n in n_values:
        for m in range(1, 2**n):
            lowered = lower(_build_for(method, n, m))
            if peephole:
                lowered = peephole_cancel_x(lowered)
            reports.append(DepthReport(n=n, m=m, method=method, metrics=depth(lowered)))
    return reports


@dataclass(frozen=True)
class SweepSummary:
    n: int
    method: SynthesisMethod
    mean_depth: float
    min_depth: int
    max_depth: int


def summarize_sweep(reports: list[DepthReport]) -> list[SweepSummary]:
    """Per-(n, method) depth statistics, ordered as first encountered."""
    buckets: dict[tuple[int, SynthesisMethod], list[int]] = {}
    for report in reports:
        buckets.setdefault((report.n, report.method), []).append(report.metrics.depth)
    return [
        SweepSummary(
            n=n,
            method=method,
            mean_depth=mean(depths),
            min_depth=min(depths),
            max_depth=max(depths),
        )
        for (n, method), depths in buckets.items()
    ]


def sweep_to_csv(reports: list[DepthReport]) -> str:
    lines = ["n,m,method,depth,gate_count,two_qubit_count"]
    for r in reports:
        lines.append(
            f"{r.n},{r.m},{r.method.value},{r.metrics.depth},"
            f"{r.metrics.gate_count},{r.metrics.two_qubit_count}"
        )
    return "\n".join(lines) + "\n"
