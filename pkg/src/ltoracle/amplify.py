"""Amplitude amplification around a phase oracle.

The schedule comes from the rotation picture: starting from the uniform state,
one oracle+diffuser round advances the angle by 2*theta with
theta = arcsin(sqrt(M/N)), so k rounds succeed with probability
sin^2((2k+1) theta). The planner picks the best k by bounded search instead of
rounding a closed form, which keeps it correct when M > N/2 (there the first
rotation already overshoots and k = 0 can win).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ltoracle.circuit import Circuit
from ltoracle.errors import DomainError


@dataclass(frozen=True)
class AmplificationPlan:
    n: int
    marked: int
    total: int
    theta: float
    k: int
    predicted_success: float


def plan_iterations(n: int, marked: int) -> AmplificationPlan:
    """Smallest iteration count maximizing sin^2((2k+1) theta) over
    k in [0, ceil(pi/(2 theta)) + 1]."""
    if n < 1:
        raise DomainError(f"need at least 1 qubit, got n={n}")
    total = 2**n
    if not 0 < marked <= total:
        raise DomainError(f"marked count out of range: {marked} of {total}")
    theta = math.asin(math.sqrt(marked / total))
    k_cap = math.ceil(math.pi / (2 * theta)) + 1
    best_k = 0
    best_p = -1.0
    for k in range(k_cap + 1):
        p = math.sin((2 * k + 1) * theta) ** 2
        if p > best_p:
            best_k = k
            best_p = p
    return AmplificationPlan(
        n=n, marked=marked, total=total, theta=theta, k=best_k, predicted_success=best_p
    )


def build_diffuser(n: int) -> Circuit:
    """Inversion about the uniform state, up to a global phase.

    H and X layers conjugate a phase flip on |0...0> into 2|s><s| - I. The
    flip is an MCZ over the whole register; with one qubit that degenerates to
    a plain Z.
    """
    if n < 1:
        raise DomainError(f"need at least 1 qubit, got n={n}")
    circuit = Circuit(n)
    for q in range(n):
        circuit.h(q)
    for q in range(n):
        circuit.x(q)
    if n == 1:
        circuit.z(0)
    else:
        circuit.mcz(*range(n - 1, -1, -1))
    for q in range(n):
        circuit.x(q)
    for q in range(n):
        circuit.h(q)
    return circuit


def build_amplification(
    oracle: Circuit, marked: int, iterations: int | None = None
) -> Circuit:
    """Uniform preparation followed by `iterations` oracle+diffuser rounds.

    `marked` is the number of states the oracle flips; it fixes the planned
    iteration count when `iterations` is not forced.
    """
    n = oracle.width
    if iterations is None:
        k = plan_iterations(n, marked).k
    else:
        if iterations < 0:
            raise DomainError(f"iterations must be >= 0, got {iterations}")
        k = iterations
    circuit = Circuit(n)
    for q in range(n):
        circuit.h(q)
    diffuser = build_diffuser(n)
    for _ in range(k):
        for gate in oracle.gates:
            circuit.append(gate)
        for gate in diffuser.gates:
            circuit.append(gate)
    return circuit
