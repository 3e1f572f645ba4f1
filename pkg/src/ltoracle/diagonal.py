"""Walsh-spectrum synthesis of diagonal phase unitaries over {RZ, CX}.

Any diagonal diag(e^{i f(x)}) factors over parity functions: writing
f(x) = sum_s alpha_s (-1)^{s.x} with alpha the Walsh spectrum of f, each
nonzero s contributes exp(i alpha_s (-1)^{s.x}), which is RZ(-2 alpha_s)
applied to the parity of the bits selected by s. The s = 0 term is a global
phase and is dropped.

The emitter visits s in binary-reflected Gray-code order (s = j ^ (j >> 1) for
j = 1 .. 2^n - 1). Patterns sharing a leading bit k form one contiguous block;
within a block the parity lives on qubit k and each step toggles one CX source,
so skipped (pruned) coefficients merge into the next XOR difference instead of
emitting dead gates. Cost stays within 2^n - 1 RZ and 2^n - 1 CX gates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ltoracle.circuit import Circuit
from ltoracle.errors import DomainError
from ltoracle.sim import StateVector

PRUNE_TOL = 1e-12


@dataclass
class DiagonalPhases:
    """Target phases: state |i> is to acquire e^{i phases[i]}."""

    n: int
    phases: np.ndarray

    def __post_init__(self) -> None:
        self.phases = np.asarray(self.phases, dtype=float)
        if self.n < 1:
            raise DomainError(f"need at least 1 qubit, got n={self.n}")
        if self.phases.shape != (2**self.n,):
            raise DomainError(
                f"expected {2**self.n} phases for n={self.n}, got shape {self.phases.shape}"
            )
        if not np.all(np.isfinite(self.phases)):
            raise DomainError("phases must be finite")


def less_than_phases(n: int, m: int) -> DiagonalPhases:
    """The sign flip below m as a phase vector: pi where i < m, else 0."""
    if n < 1:
        raise DomainError(f"need at least 1 qubit, got n={n}")
    if not 0 < m < 2**n:
        raise DomainError(f"m out of range: need 0 < m < 2**n = {2**n}, got m={m}")
    phases = np.zeros(2**n)
    phases[:m] = np.pi
    return DiagonalPhases(n, phases)


def reference_apply(phases: DiagonalPhases, state: StateVector) -> StateVector:
    """Dense reference: multiply amplitude i by e^{i phases[i]}."""
    if state.n != phases.n:
        raise DomainError(f"state width {state.n} vs phases width {phases.n}")
    return StateVector(state.n, state.amplitudes * np.exp(1j * phases.phases))


def walsh_spectrum(values: np.ndarray) -> np.ndarray:
    """alpha_s = 2^{-n} sum_i (-1)^{s.i} values_i via the fast transform."""
    work = np.array(values, dtype=float)
    size = work.size
    if size & (size - 1) or size == 0:
        raise DomainError(f"length must be a power of two, got {size}")
    h = 1
    while h < size:
        view = work.reshape(-1, 2, h)
        upper = view[:, 0, :] + view[:, 1, :]
        view[:, 1, :] = view[:, 0, :] - view[:, 1, :]
        view[:, 0, :] = upper
        h *= 2
    return work / size


def _fold_parity(circuit: Circuit, sources: int, target: int) -> None:
    q = 0
    while sources:
        if sources & 1:
            circuit.cx(q, target)
        sources >>= 1
        q += 1


def synthesize_diagonal(phases: DiagonalPhases) -> Circuit:
    """Circuit over {RZ, CX} equal to diag(e^{i phases}) up to global phase."""
    alphas = walsh_spectrum(phases.phases)
    circuit = Circuit(phases.n)
    for k in range(phases.n):
        top = 1 << k
        folded = 0  # lower-bit parity currently XOR-ed onto qubit k
        for j in range(top, 2 * top):
            s = j ^ (j >> 1)
            alpha = alphas[s]
            if abs(alpha) < PRUNE_TOL:
                continue
            wanted = s ^ top
            _fold_parity(circuit, folded ^ wanted, k)
            folded = wanted
            circuit.rz(k, -2.0 * alpha)
        _fold_parity(circuit, folded, k)
    return circuit
