"""Exact dense statevector simulation and seeded shot sampling.

Conventions, all load-bearing:

- basis index i encodes qubit j as bit j, so |i> is the integer i and qubit
  n-1 is the most significant bit;
- gate matrices: X, Z, H standard; SX = [[1+i, 1-i], [1-i, 1+i]]/2;
  RZ(t) = diag(e^{-it/2}, e^{+it/2}); CX is (control, target);
  CP(t) = diag(1, 1, 1, e^{it}); MCZ negates amplitudes where every listed
  qubit is 1;
- sampling is inverse-CDF over the cumulative probability array, driven by
  numpy's PCG64 generator (np.random.default_rng(seed)). A fixed
  (amplitudes, shots, seed) triple reproduces the histogram bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ltoracle.backends import active as _active_kernels
from ltoracle.backends import backend_name
from ltoracle.circuit import Circuit, Gate, GateKind
from ltoracle.errors import DomainError

__all__ = [
    "StateVector",
    "Histogram",
    "zero_state",
    "apply_gate",
    "run",
    "unitary",
    "basis_action",
    "sample",
    "histogram_to_csv",
    "histogram_to_json",
    "backend_name",
]

_NORM_TOL = 1e-10
# dense unitaries take 16 bytes * 4**n; 12 qubits is 256 MiB
_MAX_UNITARY_WIDTH = 12

_OPCODES = {
    GateKind.X: 0,
    GateKind.Z: 1,
    GateKind.H: 2,
    GateKind.SX: 3,
    GateKind.RZ: 4,
    GateKind.CX: 5,
    GateKind.CP: 6,
    GateKind.MCZ: 7,
}


@dataclass
class StateVector:
    n: int
    amplitudes: np.ndarray

    def copy(self) -> StateVector:
        return StateVector(self.n, self.amplitudes.copy())

    def probabilities(self) -> np.ndarray:
        return (self.amplitudes.real**2 + self.amplitudes.imag**2).astype(float)

    def norm(self) -> float:
        return float(np.sqrt(self.probabilities().sum()))


@dataclass
class Histogram:
    shots: int
    counts: dict[int, int]


def zero_state(n: int) -> StateVector:
    if n < 1:
        raise DomainError(f"need at least 1 qubit, got n={n}")
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n, amps)


def _mask(qubits: tuple[int, ...]) -> int:
    mask = 0
    for q in qubits:
        mask |= 1 << q
    return mask


def _encode(circuit: Circuit):
    count = len(circuit.gates)
    codes = np.empty(count, dtype=np.int32)
    arg0 = np.zeros(count, dtype=np.int64)
    arg1 = np.zeros(count, dtype=np.int64)
    angles = np.zeros(count, dtype=np.float64)
    for i, gate in enumerate(circuit.gates):
        codes[i] = _OPCODES[gate.kind]
        if gate.kind is GateKind.MCZ:
            arg0[i] = _mask(gate.qubits)
        elif gate.kind in (GateKind.CX, GateKind.CP):
            arg0[i] = gate.qubits[0]
            arg1[i] = gate.qubits[1]
        else:
            arg0[i] = gate.qubits[0]
        if gate.angle is not None:
            angles[i] = gate.angle
    return codes, arg0, arg1, angles


def _run_inplace(circuit: Circuit, amps: np.ndarray, kernels=None) -> None:
    codes, arg0, arg1, angles = _encode(circuit)
    (kernels or _active_kernels).run_encoded(amps, codes, arg0, arg1, angles)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """One-gate application; validates against the state's width."""
    out = state.copy()
    _run_inplace(Circuit(state.n, [gate]), out.amplitudes)
    return out


def run(circuit: Circuit, initial: StateVector | None = None) -> StateVector:
    """Evolve |0...0> (or `initial`) through the whole circuit."""
    if initial is None:
        state = zero_state(circuit.width)
    else:
        if initial.n != circuit.width:
            raise DomainError(
                f"state width {initial.n} does not match circuit width {circuit.width}"
            )
        state = initial.copy()
    _run_inplace(circuit, state.amplitudes)
    norm = state.norm()
    assert abs(norm - 1.0) < _NORM_TOL, f"norm drifted to {norm}"
    return state


def unitary(circuit: Circuit) -> np.ndarray:
    """Full matrix of the circuit; column i is the evolution of |i>.

    The flattened identity matrix is evolved in one kernel pass: row bits
    beyond the register act as the batch dimension.
    """
    n = circuit.width
    if n > _MAX_UNITARY_WIDTH:
        raise DomainError(f"unitary() capped at {_MAX_UNITARY_WIDTH} qubits, got {n}")
    dim = 2**n
    flat = np.zeros(dim * dim, dtype=np.complex128)
    flat[:: dim + 1] = 1.0
    _run_inplace(circuit, flat)
    return flat.reshape(dim, dim).T.copy()


_PERMUTATION_PHASE = frozenset(
    {GateKind.X, GateKind.Z, GateKind.CX, GateKind.RZ, GateKind.CP, GateKind.MCZ}
)


def basis_action(circuit: Circuit) -> tuple[np.ndarray, np.ndarray]:
    """Exact action on every basis state for permutation-phase circuits.

    Returns (perm, phase) with |i> -> phase[i] * |perm[i]>. Such circuits send
    each basis state to a single basis state, so tracking (index, phase) pairs
    is the entire simulation. Gates that create superpositions (H, SX) raise.
    """
    dim = 2**circuit.width
    perm = np.arange(dim, dtype=np.int64)
    phase = np.ones(dim, dtype=np.complex128)
    for gate in circuit.gates:
        kind = gate.kind
        if kind not in _PERMUTATION_PHASE:
            raise DomainError(f"basis_action cannot handle {kind.value} gates")
        if kind is GateKind.X:
            perm ^= 1 << gate.qubits[0]
        elif kind is GateKind.Z:
            phase[(perm >> gate.qubits[0]) & 1 == 1] *= -1.0
        elif kind is GateKind.CX:
            control, target = gate.qubits
            sel = (perm >> control) & 1 == 1
            perm[sel] ^= 1 << target
        elif kind is GateKind.RZ:
            hi = (perm >> gate.qubits[0]) & 1 == 1
            phase[hi] *= np.exp(0.5j * gate.angle)
            phase[~hi] *= np.exp(-0.5j * gate.angle)
        elif kind is GateKind.CP:
            control, target = gate.qubits
            sel = ((perm >> control) & (perm >> target)) & 1 == 1
            phase[sel] *= np.exp(1j * gate.angle)
        else:
            mask = _mask(gate.qubits)
            phase[(perm & mask) == mask] *= -1.0
    return perm, phase


def sample(state: StateVector, shots: int, seed: int) -> Histogram:
    """Seeded measurement histogram via inverse CDF.

    Probabilities are normalized before the cumulative sum so float drift in
    the final entry cannot push a draw out of range; zero-probability states
    occupy empty half-open intervals and are never selected.
    """
    if shots < 1:
        raise DomainError(f"shots must be >= 1, got {shots}")
    probs = state.probabilities()
    cumulative = np.cumsum(probs)
    total = cumulative[-1]
    if not total > 0:
        raise DomainError("state has no probability mass")
    cumulative /= total
    cumulative[-1] = 1.0
    draws = np.random.default_rng(seed).random(shots)
    states = np.searchsorted(cumulative, draws, side="right")
    values, counts = np.unique(states, return_counts=True)
    return Histogram(shots=shots, counts={int(v): int(c) for v, c in zip(values, counts)})


def histogram_to_csv(histogram: Histogram) -> str:
    """state,count,frequency rows, states ascending, 10 significant digits."""
    lines = ["state,count,frequency"]
    for state in sorted(histogram.counts):
        count = histogram.counts[state]
        lines.append(f"{state},{count},{count / histogram.shots:.10g}")
    return "\n".join(lines) + "\n"


def histogram_to_json(histogram: Histogram) -> str:
    import json

    rows = [
        {
            "state": state,
            "count": histogram.counts[state],
            "frequency": float(f"{histogram.counts[state] / histogram.shots:.10g}"),
        }
        for state in sorted(histogram.counts)
    ]
    return json.dumps({"shots": histogram.shots, "rows": rows}, indent=2) + "\n"
