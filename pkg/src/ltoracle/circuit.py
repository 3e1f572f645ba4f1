"""Gate-level circuit values shared by the builders, passes, and simulator.

Qubit convention: basis index i carries qubit j as bit j, so qubit width-1 is
the most significant bit and |i> means the integer i. Gate kinds are the full
set used anywhere in the package; the lowered basis is {CX, RZ, SX, X}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator

from ltoracle.errors import DomainError


class GateKind(str, Enum):
    H = "H"
    X = "X"
    Z = "Z"
    SX = "SX"
    RZ = "RZ"
    CX = "CX"
    CP = "CP"
    MCZ = "MCZ"


# kinds carrying an angle parameter
_ANGLED = frozenset({GateKind.RZ, GateKind.CP})
# fixed arity per kind; MCZ is variadic (>= 2)
_ARITY = {
    GateKind.H: 1,
    GateKind.X: 1,
    GateKind.Z: 1,
    GateKind.SX: 1,
    GateKind.RZ: 1,
    GateKind.CX: 2,
    GateKind.CP: 2,
}


@dataclass(frozen=True)
class Gate:
    """One gate application: kind, qubit tuple, optional angle in radians.

    CX and CP read qubits as (control, target). MCZ is symmetric: it negates
    the amplitude of every basis state whose listed qubits are all 1; the
    stored order is still meaningful for serialization round-trips.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | None = None


def _check_gate(gate: Gate, width: int) -> None:
    qs = gate.qubits
    if gate.kind is GateKind.MCZ:
        if len(qs) < 2:
            raise DomainError(f"MCZ needs at least 2 qubits, got {len(qs)}")
    elif len(qs) != _ARITY[gate.kind]:
        raise DomainError(
            f"{gate.kind.value} takes {_ARITY[gate.kind]} qubit(s), got {len(qs)}"
        )
    if len(set(qs)) != len(qs):
        raise DomainError(f"duplicate qubit in {gate.kind.value}{qs}")
    for q in qs:
        if not 0 <= q < width:
            raise DomainError(f"qubit {q} out of range for width {width}")
    if (gate.angle is not None) != (gate.kind in _ANGLED):
        raise DomainError(f"{gate.kind.value} angle mismatch: {gate.angle!r}")


class Circuit:
    """Ordered list of gates over a fixed-width register.

    Builder methods validate eagerly and chain. Once built, treat the value as
    immutable: every pass and simulator call leaves its input untouched.
    """

    def __init__(self, width: int, gates: Iterable[Gate] = ()) -> None:
        if width < 1:
            raise DomainError(f"width must be >= 1, got {width}")
        self.width = width
        self.gates: list[Gate] = []
        for gate in gates:
            self.append(gate)

    def append(self, gate: Gate) -> Circuit:
        _check_gate(gate, self.width)
        self.gates.append(gate)
        return self

    def h(self, q: int) -> Circuit:
        return self.append(Gate(GateKind.H, (q,)))

    def x(self, q: int) -> Circuit:
        return self.append(Gate(GateKind.X, (q,)))

    def z(self, q: int) -> Circuit:
        return self.append(Gate(GateKind.Z, (q,)))

    def sx(self, q: int) -> Circuit:
        return self.append(Gate(GateKind.SX, (q,)))

    def rz(self, q: int, angle: float) -> Circuit:
        return self.append(Gate(GateKind.RZ, (q,), float(angle)))

    def cx(self, control: int, target: int) -> Circuit:
        return self.append(Gate(GateKind.CX, (control, target)))

    def cp(self, control: int, target: int, angle: float) -> Circuit:
        return self.append(Gate(GateKind.CP, (control, target), float(angle)))

    def mcz(self, *qubits: int) -> Circuit:
        return self.append(Gate(GateKind.MCZ, tuple(qubits)))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __getitem__(self, index: int) -> Gate:
        return self.gates[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.width == other.width and self.gates == other.gates

    def __repr__(self) -> str:
        return f"Circuit(width={self.width}, gates={len(self.gates)})"


def concat(a: Circuit, b: Circuit) -> Circuit:
    """a's gates followed by b's gates on the same register."""
    if a.width != b.width:
        raise DomainError(f"width mismatch: {a.width} vs {b.width}")
    return Circuit(a.width, [*a.gates, *b.gates])


@dataclass(frozen=True)
class DepthMetrics:
    depth: int
    gate_count: int
    two_qubit_count: int


def depth(circuit: Circuit) -> DepthMetrics:
    """As-soon-as-possible layering: each gate lands one layer after the
    latest layer used by any of its qubits; every gate occupies one layer."""
    last = [0] * circuit.width
    deepest = 0
    two_qubit = 0
    for gate in circuit.gates:
        layer = 1 + max(last[q] for q in gate.qubits)
        for q in gate.qubits:
            last[q] = layer
        if layer > deepest:
            deepest = layer
        if len(gate.qubits) >= 2:
            two_qubit += 1
    return DepthMetrics(depth=deepest, gate_count=len(circuit.gates), two_qubit_count=two_qubit)


def peephole_cancel_x(circuit: Circuit) -> Circuit:
    """Remove adjacent X,X pairs on the same qubit.

    Adjacent means no gate touching that qubit sits between the pair; gates on
    other qubits do not block cancellation.
    """
    kept: list[Gate | None] = []
    pending: dict[int, int] = {}
    for gate in circuit.gates:
        if gate.kind is GateKind.X:
            q = gate.qubits[0]
            slot = pending.pop(q, None)
            if slot is not None:
                kept[slot] = None
                continue
            pending[q] = len(kept)
            kept.append(gate)
        else:
            for q in gate.qubits:
                pending.pop(q, None)
            kept.append(gate)
    return Circuit(circuit.width, [g for g in kept if g is not None])


def to_json_dict(circuit: Circuit) -> dict:
    gates = []
    for gate in circuit.gates:
        entry: dict = {"kind": gate.kind.value, "qubits": list(gate.qubits)}
        if gate.angle is not None:
            # repr round-trips the exact double (17 significant digits max)
            entry["angle"] = float(f"{gate.angle:.17g}")
        gates.append(entry)
    return {"width": circuit.width, "gates": gates}


def from_json_dict(data: dict) -> Circuit:
    if not isinstance(data, dict):
        raise DomainError("circuit JSON must be an object")
    width = data.get("width")
    if not isinstance(width, int):
        raise DomainError(f"bad circuit width: {width!r}")
    raw_gates = data.get("gates")
    if not isinstance(raw_gates, list):
        raise DomainError("circuit JSON needs a gate list")
    circuit = Circuit(width)
    for entry in raw_gates:
        try:
            kind = GateKind(entry["kind"])
        except (KeyError, TypeError, ValueError):
            raise DomainError(f"unknown gate entry: {entry!r}") from None
        qubits = entry.get("qubits")
        if not isinstance(qubits, list) or not all(isinstance(q, int) for q in qubits):
            raise DomainError(f"bad qubit list in {entry!r}")
        angle = entry.get("angle")
        if angle is not None:
            angle = float(angle)
        circuit.append(Gate(kind, tuple(qubits), angle))
    return circuit


def dumps(circuit: Circuit) -> str:
    return json.dumps(to_json_dict(circuit), indent=2) + "\n"


def loads(text: str) -> Circuit:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"not valid JSON: {exc}") from None
    return from_json_dict(data)


def save(circuit: Circuit, path: str | Path) -> None:
    Path(path).write_text(dumps(circuit))


def load(path: str | Path) -> Circuit:
    return loads(Path(path).read_text())
