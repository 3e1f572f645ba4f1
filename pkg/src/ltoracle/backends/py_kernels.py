"""Reference numpy gate kernels.

All kernels mutate a flat, C-contiguous complex128 array in place. Bit j of
the flat index is qubit j, and bits above every touched qubit are treated as a
batch dimension: a (B * 2**n,) array behaves as B independent n-qubit
registers. That is what lets one kernel pass compute a full unitary (the
identity matrix flattened row-major evolves row-by-row).

The compiled backend (_kernels.pyx) mirrors these semantics exactly; keep the
two in sync.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

BACKEND_NAME = "python"

_SQRT1_2 = 1.0 / math.sqrt(2.0)
_SX_DIAG = 0.5 + 0.5j
_SX_OFF = 0.5 - 0.5j

# opcodes for run_encoded; shared by both backends
OP_X, OP_Z, OP_H, OP_SX, OP_RZ, OP_CX, OP_CP, OP_MCZ = range(8)

_IOTA: dict[int, np.ndarray] = {}


def _iota(size: int) -> np.ndarray:
    arr = _IOTA.get(size)
    if arr is None:
        arr = np.arange(size, dtype=np.int64)
        _IOTA[size] = arr
    return arr


def _halves(amps: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray]:
    view = amps.reshape(-1, 2, 1 << q)
    return view[:, 0, :], view[:, 1, :]


def apply_x(amps: np.ndarray, q: int) -> None:
    lo, hi = _halves(amps, q)
    tmp = lo.copy()
    lo[...] = hi
    hi[...] = tmp


def apply_z(amps: np.ndarray, q: int) -> None:
    _, hi = _halves(amps, q)
    hi *= -1.0


def apply_h(amps: np.ndarray, q: int) -> None:
    lo, hi = _halves(amps, q)
    s = (lo + hi) * _SQRT1_2
    hi[...] = (lo - hi) * _SQRT1_2
    lo[...] = s


def apply_sx(amps: np.ndarray, q: int) -> None:
    lo, hi = _halves(amps, q)
    s = _SX_DIAG * lo + _SX_OFF * hi
    hi[...] = _SX_OFF * lo + _SX_DIAG * hi
    lo[...] = s


def apply_rz(amps: np.ndarray, q: int, angle: float) -> None:
    lo, hi = _halves(amps, q)
    phase = cmath.exp(-0.5j * angle)
    lo *= phase
    hi *= phase.conjugate()


def _pair_view(amps: np.ndarray, a: int, b: int) -> np.ndarray:
    """Reshape so axes 1 and 3 select the values of qubits max(a,b), min(a,b)."""
    hi_bit, lo_bit = max(a, b), min(a, b)
    return amps.reshape(-1, 2, 1 << (hi_bit - lo_bit - 1), 2, 1 << lo_bit)


def apply_cx(amps: np.ndarray, control: int, target: int) -> None:
    view = _pair_view(amps, control, target)
    if control > target:
        t0 = view[:, 1, :, 0, :].copy()
        view[:, 1, :, 0, :] = view[:, 1, :, 1, :]
        view[:, 1, :, 1, :] = t0
    else:
        t0 = view[:, 0, :, 1, :].copy()
        view[:, 0, :, 1, :] = view[:, 1, :, 1, :]
        view[:, 1, :, 1, :] = t0


def apply_cp(amps: np.ndarray, control: int, target: int, angle: float) -> None:
    view = _pair_view(amps, control, target)
    view[:, 1, :, 1, :] *= cmath.exp(1j * angle)


def apply_mcz(amps: np.ndarray, mask: int) -> None:
    sel = (_iota(amps.size) & mask) == mask
    amps[sel] = -amps[sel]


def run_encoded(
    amps: np.ndarray,
    codes: np.ndarray,
    arg0: np.ndarray,
    arg1: np.ndarray,
    angles: np.ndarray,
) -> None:
    """Apply an encoded gate list (see ltoracle.sim for the encoding)."""
    for i in range(codes.shape[0]):
        op = codes[i]
        if op == OP_X:
            apply_x(amps, int(arg0[i]))
        elif op == OP_Z:
            apply_z(amps, int(arg0[i]))
        elif op == OP_H:
            apply_h(amps, int(arg0[i]))
        elif op == OP_SX:
            apply_sx(amps, int(arg0[i]))
        elif op == OP_RZ:
            apply_rz(amps, int(arg0[i]), float(angles[i]))
        elif op == OP_CX:
            apply_cx(amps, int(arg0[i]), int(arg1[i]))
        elif op == OP_CP:
            apply_cp(amps, int(arg0[i]), int(arg1[i]), float(angles[i]))
        elif op == OP_MCZ:
            apply_mcz(amps, int(arg0[i]))
        else:
            raise ValueError(f"unknown opcode {op}")
