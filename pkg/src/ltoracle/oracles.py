"""Ancilla-free phase oracles for integer comparisons.

build_less_than(n, m) flips the sign of every basis state below the threshold:
|i> -> (-1)^[i<m] |i>. The construction walks the binary expansion of m from
the most significant bit down. A set bit contributes a borrow condition: all
higher bits equal to m's and the current bit 0 means i < m, which after
X-conjugation of the current qubit becomes an all-ones pattern detectable by a
multi-controlled Z. A clear bit only needs X-conjugation so later MCZs still
compare against m's prefix; the trailing loop restores those qubits.

No work qubits are used anywhere: width stays n for every builder.
"""

from __future__ import annotations

from ltoracle.circuit import Circuit, concat
from ltoracle.errors import DomainError


def _check_threshold(n: int, m: int) -> None:
    if n < 1:
        raise DomainError(f"need at least 1 qubit, got n={n}")
    if not 0 < m < 2**n:
        raise DomainError(f"m out of range: need 0 < m < 2**n = {2**n}, got m={m}")


def build_less_than(n: int, m: int) -> Circuit:
    """Phase oracle for [i < m] on n qubits, 0 < m < 2**n."""
    _check_threshold(n, m)
    bits = [(m >> i) & 1 for i in range(n)]
    circuit = Circuit(n)
    if bits[n - 1]:
        circuit.x(n - 1).z(n - 1).x(n - 1)
    else:
        circuit.x(n - 1)
    for i in range(n - 2, -1, -1):
        circuit.x(i)
        if bits[i]:
            circuit.mcz(*range(n - 1, i - 1, -1))
            circuit.x(i)
    for i in range(n):
        if not bits[i]:
            circuit.x(i)
    return circuit


def build_greater_equal(n: int, m: int) -> Circuit:
    """Phase oracle acting as (-1)^[i>=m].

    Complements build_less_than with a global -1, realized as Z,X,Z,X on
    qubit 0 (the product equals -I on one qubit). The action is exact, not
    merely up to phase: -(-1)^[i<m] = (-1)^[i>=m].
    """
    _check_threshold(n, m)
    circuit = build_less_than(n, m)
    circuit.z(0).x(0).z(0).x(0)
    return circuit


def build_range(n: int, a: int, b: int) -> Circuit:
    """Phase oracle for [a <= i < b]: two thresholds multiplied together.

    The full interval (0, 2**n) is rejected: it would be a global phase with
    no marked/unmarked distinction.
    """
    if n < 1:
        raise DomainError(f"need at least 1 qubit, got n={n}")
    size = 2**n
    if not 0 <= a < b <= size:
        raise DomainError(f"empty or inverted range: a={a}, b={b}, n={n}")
    if (a, b) == (0, size):
        raise DomainError(f"range covering all of [0, {size}) marks every state")
    if a == 0:
        return build_less_than(n, b)
    if b == size:
        return build_greater_equal(n, a)
    return concat(build_less_than(n, b), build_less_than(n, a))
