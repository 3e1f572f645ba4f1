# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate kernels.

Semantics and layout match ltoracle.backends.py_kernels exactly: flat
complex128 arrays, bit j of the index is qubit j, high bits batch.
"""

from libc.math cimport cos, sin, sqrt

import numpy as np

BACKEND_NAME = "cython"

ctypedef double complex cplx


cdef void _x(cplx[::1] a, Py_ssize_t bit):
    cdef Py_ssize_t size = a.shape[0]
    cdef Py_ssize_t base, i, j
    cdef cplx tmp
    for base in range(0, size, 2 * bit):
        for i in range(base, base + bit):
            j = i + bit
            tmp = a[i]
            a[i] = a[j]
            a[j] = tmp


cdef void _z(cplx[::1] a, Py_ssize_t bit):
    cdef Py_ssize_t size = a.shape[0]
    cdef Py_ssize_t base, i
    for base in range(bit, size, 2 * bit):
        for i in range(base, base + bit):
            a[i] = -a[i]


cdef void _h(cplx[::1] a, Py_ssize_t bit):
    cdef Py_ssize_t size = a.shape[0]
    cdef Py_ssize_t base, i, j
    cdef double inv = 1.0 / sqrt(2.0)
    cdef cplx lo, hi
    for base in range(0, size, 2 * bit):
        for i in range(base, base + bit):
            j = i + bit
            lo = a[i]
            hi = a[j]
            a[i] = (lo + hi) * inv
            a[j] = (lo - hi) * inv


cdef void _sx(cplx[::1] a, Py_ssize_t bit):
    cdef Py_ssize_t size = a.shape[0]
    cdef Py_ssize_t base, i, j
    cdef cplx d = 0.5 + 0.5j
    cdef cplx o = 0.5 - 0.5j
    cdef cplx lo, hi
    for base in range(0, size, 2 * bit):
        for i in range(base, base + bit):
            j = i + bit
            lo = a[i]
            hi = a[j]
            a[i] = d * lo + o * hi
            a[j] = o * lo + d * hi


cdef void _rz(cplx[::1] a, Py_ssize_t bit, double angle):
    cdef Py_ssize_t size = a.shape[0]
    cdef Py_ssize_t base, i
    cdef cplx p0 = cos(0.5 * angle) - 1j * sin(0.5 * angle)
    cdef cplx p1 = cos(0.5 * angle) + 1j * sin(0.5 * angle)
    for base in range(0, size, 2 * bit):
        for i in range(base, base + bit):
            a[i] = a[i] * p0
            a[i + bit] = a[i + bit] * p1


cdef void _cx(cplx[::1] a, Py_ssize_t cbit, Py_ssize_t tbit):
    cdef Py_ssize_t size = a.shape[0]
    cdef Py_ssize_t i
    cdef cplx tmp
    for i in range(size):
        if (i & cbit) and not (i & tbit):
            tmp = a[i]
            a[i] = a[i | tbit]
            a[i | tbit] = tmp


cdef void _cp(cplx[::1] a, Py_ssize_t cbit, Py_ssize_t tbit, double angle):
    cdef Py_ssize_t size = a.shape[0]
    cdef Py_ssize_t i
    cdef cplx phase = cos(angle) + 1j * sin(angle)
    for i in range(size):
        if (i & cbit) and (i & tbit):
            a[i] = a[i] * phase


cdef void _mcz(cplx[::1] a, Py_ssize_t mask):
    # walk only the matching indices: mask | s for every subset s of the
    # free (non-mask) bits, ascending
    cdef Py_ssize_t free = (a.shape[0] - 1) & ~mask
    cdef Py_ssize_t s = 0
    while True:
        a[mask | s] = -a[mask | s]
        if s == free:
            break
        s = (s - free) & free


def apply_x(a, int q):
    _x(a, (<Py_ssize_t> 1) << q)


def apply_z(a, int q):
    _z(a, (<Py_ssize_t> 1) << q)


def apply_h(a, int q):
    _h(a, (<Py_ssize_t> 1) << q)


def apply_sx(a, int q):
    _sx(a, (<Py_ssize_t> 1) << q)


def apply_rz(a, int q, double angle):
    _rz(a, (<Py_ssize_t> 1) << q, angle)


def apply_cx(a, int control, int target):
    _cx(a, (<Py_ssize_t> 1) << control, (<Py_ssize_t> 1) << target)


def apply_cp(a, int control, int target, double angle):
    _cp(a, (<Py_ssize_t> 1) << control, (<Py_ssize_t> 1) << target, angle)


def apply_mcz(a, mask):
    _mcz(a, <Py_ssize_t> mask)


def run_encoded(cplx[::1] a, int[::1] codes, long long[::1] arg0,
                long long[::1] arg1, double[::1] angles):
    cdef Py_ssize_t i
    cdef int op
    cdef Py_ssize_t one = 1
    for i in range(codes.shape[0]):
        op = codes[i]
        if op == 0:
            _x(a, one << arg0[i])
        elif op == 1:
            _z(a, one << arg0[i])
        elif op == 2:
            _h(a, one << arg0[i])
        elif op == 3:
            _sx(a, one << arg0[i])
        elif op == 4:
            _rz(a, one << arg0[i], angles[i])
        elif op == 5:
            _cx(a, one << arg0[i], one << arg1[i])
        elif op == 6:
            _cp(a, one << arg0[i], one << arg1[i], angles[i])
        elif op == 7:
            _mcz(a, <Py_ssize_t> arg0[i])
        else:
            raise ValueError(f"unknown opcode {op}")
