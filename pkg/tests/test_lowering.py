"""Basis lowering and the oracle-vs-baseline depth sweep."""

import math

import numpy as np
import pytest

from ltoracle import (
    BASIS,
    Circuit,
    DepthReport,
    Gate,
    GateKind,
    SynthesisMethod,
    build_diffuser,
    build_greater_equal,
    build_less_than,
    depth,
    depth_sweep,
    expand_mcz,
    less_than_phases,
    lower,
    summarize_sweep,
    sweep_to_csv,
    synthesize_diagonal,
    unitary,
)


def _agree_up_to_phase(a, b, tol=1e-10):
    anchor = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    ratio = a[anchor] / b[anchor]
    return abs(abs(ratio) - 1.0) < tol and np.abs(a - ratio * b).max() < tol


def test_z_lowering():
    c = lower(Circuit(1).z(0))
    assert list(c) == [Gate(GateKind.RZ, (0,), math.pi)]


def test_h_lowering_matrix():
    c = lower(Circuit(1).h(0))
    assert [g.kind for g in c] == [GateKind.RZ, GateKind.SX, GateKind.RZ]
    sq = 1 / math.sqrt(2)
    h = np.array([[sq, sq], [sq, -sq]], dtype=complex)
    assert _agree_up_to_phase(unitary(c), h)


def test_cp_lowering_matrix():
    for theta in (math.pi, math.pi / 2, -math.pi / 4, 1.234):
        c = lower(Circuit(2).cp(0, 1, theta))
        assert [g.kind for g in c] == [
            GateKind.RZ,
            GateKind.CX,
            GateKind.RZ,
            GateKind.CX,
            GateKind.RZ,
        ]
        ref = np.diag([1.0, 1.0, 1.0, np.exp(1j * theta)])
        assert _agree_up_to_phase(unitary(c), ref), theta


def test_two_qubit_mcz_lowering_matrix():
    c = lower(Circuit(2).mcz(1, 0))
    ref = np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)
    assert _agree_up_to_phase(unitary(c), ref)
    assert all(g.kind in BASIS for g in c)


def test_expand_mcz_rejects_small_gates():
    with pytest.raises(ValueError):
        expand_mcz(Gate(GateKind.MCZ, (1, 0)))
    with pytest.raises(ValueError):
        expand_mcz(Gate(GateKind.X, (0,)))


def test_expand_mcz_three_qubits():
    pieces = expand_mcz(Gate(GateKind.MCZ, (2, 1, 0)))
    kinds = [g.kind for g in pieces]
    assert kinds.count(GateKind.CP) == 3
    assert kinds.count(GateKind.CX) == 2
    assert len(pieces) == 5
    angles = sorted(g.angle for g in pieces if g.kind is GateKind.CP)
    assert angles == pytest.approx([-math.pi / 2, math.pi / 2, math.pi / 2])
    ref = np.diag([1.0] * 7 + [-1.0]).astype(complex)
    assert _agree_up_to_phase(unitary(Circuit(3, pieces)), ref)


def test_expand_mcz_gate_counts():
    # k controls cost 2^k - 1 phases and 2^k - 2 parity swaps
    for size in range(3, 9):
        gate = Gate(GateKind.MCZ, tuple(range(size - 1, -1, -1)))
        pieces = expand_mcz(gate)
        cps = sum(1 for g in pieces if g.kind is GateKind.CP)
        cxs = sum(1 for g in pieces if g.kind is GateKind.CX)
        k = size - 1
        assert cps == 2**k - 1, size
        assert cxs == 2**k - 2, size


def test_expand_mcz_action():
    for size in range(3, 8):
        gate = Gate(GateKind.MCZ, tuple(range(size - 1, -1, -1)))
        u = unitary(Circuit(size, expand_mcz(gate)))
        ref = np.eye(2**size, dtype=complex)
        ref[-1, -1] = -1.0
        assert _agree_up_to_phase(u, ref), size


def test_expand_mcz_qubit_order_irrelevant_to_action():
    scrambled = Gate(GateKind.MCZ, (0, 2, 3, 1))
    u = unitary(Circuit(4, expand_mcz(scrambled)))
    ref = np.eye(16, dtype=complex)
    ref[-1, -1] = -1.0
    assert _agree_up_to_phase(u, ref)


def test_lower_closes_over_basis():
    circuits = [
        build_less_than(5, 19),
        build_greater_equal(4, 7),
        build_diffuser(5),
        synthesize_diagonal(less_than_phases(4, 9)),
    ]
    for c in circuits:
        assert all(g.kind in BASIS for g in lower(c)), c


def test_lower_preserves_action():
    for n in range(1, 6):
        for c in (build_less_than(n, 1), build_less_than(n, 2**n - 1), build_diffuser(n)):
            assert _agree_up_to_phase(unitary(lower(c)), unitary(c)), (n, len(c))


def test_lower_is_identity_on_lowered_input():
    c = lower(build_less_than(4, 11))
    assert lower(c) == c


def test_lowered_cost_grows_with_mcz_size():
    counts = []
    for size in range(3, 9):
        gate = Gate(GateKind.MCZ, tuple(range(size - 1, -1, -1)))
        counts.append(len(lower(Circuit(size, [gate]))))
    assert counts == [17, 41, 89, 185, 377, 761]
    assert all(a < b for a, b in zip(counts, counts[1:]))


def test_single_mcz_oracle_depth():
    metrics = depth(lower(build_less_than(7, 32)))
    assert metrics.depth < 40
    assert metrics == depth(lower(build_less_than(7, 32)))
    assert metrics.depth == 9
    assert metrics.gate_count == 21
    assert metrics.two_qubit_count == 1


def test_depth_sweep_report_shape():
    reports = depth_sweep([2, 3], SynthesisMethod.LESS_THAN_ORACLE)
    assert len(reports) == 3 + 7
    assert all(isinstance(r, DepthReport) for r in reports)
    assert [(r.n, r.m) for r in reports[:3]] == [(2, 1), (2, 2), (2, 3)]
    assert all(r.method is SynthesisMethod.LESS_THAN_ORACLE for r in reports)


def test_depth_sweep_reports_lowered_metrics():
    reports = depth_sweep([2], SynthesisMethod.LESS_THAN_ORACLE)
    assert reports[0].metrics == depth(lower(build_less_than(2, 1)))
    base = depth_sweep([2], SynthesisMethod.DIAGONAL_BASELINE)
    assert base[0].metrics == depth(lower(synthesize_diagonal(less_than_phases(2, 1))))


def test_power_of_two_threshold_depths():
    # the baseline collapses to one RZ at m = 2^(n-1); the oracle cannot
    for n in range(2, 7):
        m = 2 ** (n - 1)
        base = lower(synthesize_diagonal(less_than_phases(n, m)))
        assert depth(base).depth == 1
        oracle = lower(build_less_than(n, m))
        assert depth(oracle).depth == 3


def test_baseline_mean_depth_growth():
    reports = depth_sweep(range(2, 7), SynthesisMethod.DIAGONAL_BASELINE)
    means = {s.n: s.mean_depth for s in summarize_sweep(reports)}
    for n in range(2, 6):
        assert means[n + 1] / means[n] >= 1.8, n


def test_summarize_sweep_statistics():
    reports = depth_sweep([3], SynthesisMethod.LESS_THAN_ORACLE)
    summary = summarize_sweep(reports)
    assert len(summary) == 1
    s = summary[0]
    depths = [r.metrics.depth for r in reports]
    assert s.n == 3
    assert s.min_depth == min(depths)
    assert s.max_depth == max(depths)
    assert s.mean_depth == pytest.approx(sum(depths) / len(depths))


def test_sweep_csv_format():
    reports = depth_sweep([2], SynthesisMethod.DIAGONAL_BASELINE)
    text = sweep_to_csv(reports)
    lines = text.splitlines()
    assert lines[0] == "n,m,method,depth,gate_count,two_qubit_count"
    assert len(lines) == 4
    m = reports[0].metrics
    assert lines[1] == f"2,1,diagonal_baseline,{m.depth},{m.gate_count},{m.two_qubit_count}"
