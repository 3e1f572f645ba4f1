"""End-to-end acceptance checklist.

One test per numbered criterion. Every test prints a single
"criterion N: PASS/FAIL" line (visible with -s, or in the captured output of
a failing run) before asserting, so a full run reads as a checklist.
"""

import math

import numpy as np

from ltoracle import (
    Circuit,
    Gate,
    GateKind,
    basis_action,
    build_amplification,
    build_diffuser,
    build_greater_equal,
    build_less_than,
    build_range,
    concat,
    less_than_phases,
    lower,
    plan_iterations,
    run,
    sample,
    synthesize_diagonal,
    unitary,
)
from ltoracle.circuit import load
from ltoracle.cli import main
from ltoracle.lowering import SynthesisMethod, depth_sweep, summarize_sweep
from ltoracle.sim import StateVector


def _verdict(num, ok):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}")
    return ok


def _phase_distance(a, b):
    """Largest elementwise gap after aligning global phase on b's biggest entry."""
    anchor = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    ratio = a[anchor] / b[anchor]
    if abs(abs(ratio) - 1.0) > 1e-9:
        return float("inf")
    return float(np.abs(a - ratio * b).max())


def test_criterion_1_exhaustive_oracle_signs():
    """Every width 1..10, every threshold: -1 exactly below m, +1 at or above,
    with no amplitude moved (tolerance 1e-12). Runs in seconds."""
    ok = True
    for n in range(1, 11):
        idx = np.arange(2**n)
        for m in range(1, 2**n):
            perm, phase = basis_action(build_less_than(n, m))
            expected = np.where(idx < m, -1.0, 1.0)
            if not np.array_equal(perm, idx):
                ok = False
            if np.abs(phase - expected).max() > 1e-12:
                ok = False
    # amplitude-level cross-check through the dense simulator: every
    # threshold up to width 6, a spread of thresholds at widths 7..10
    for n in range(1, 11):
        if n <= 6:
            ms = range(1, 2**n)
        else:
            step = max(1, (2**n) // 7)
            ms = sorted({1, 2 ** (n - 1), 2**n - 1} | set(range(3, 2**n, step)))
        for m in ms:
            u = unitary(build_less_than(n, m))
            d = np.diag(np.where(np.arange(2**n) < m, -1.0, 1.0).astype(complex))
            if np.abs(u - d).max() > 1e-12:
                ok = False
    assert _verdict(1, ok)


def test_criterion_2_pinned_circuit_via_cli(tmp_path):
    """gen --op lt --n 4 --m 11 emits this exact 11-gate sequence."""
    out = tmp_path / "c.json"
    code = main(["gen", "--op", "lt", "--n", "4", "--m", "11", "--out", str(out)])
    expected = [
        Gate(GateKind.X, (3,)),
        Gate(GateKind.Z, (3,)),
        Gate(GateKind.X, (3,)),
        Gate(GateKind.X, (2,)),
        Gate(GateKind.X, (1,)),
        Gate(GateKind.MCZ, (3, 2, 1)),
        Gate(GateKind.X, (1,)),
        Gate(GateKind.X, (0,)),
        Gate(GateKind.MCZ, (3, 2, 1, 0)),
        Gate(GateKind.X, (0,)),
        Gate(GateKind.X, (2,)),
    ]
    ok = code == 0 and list(load(out)) == expected
    assert _verdict(2, ok)


def test_criterion_3_amplification_analytics():
    """Simulated success equals sin^2((2k+1) asin sqrt(M/N)) within 1e-9 for
    every threshold at widths up to 8, with the three pinned cases on top."""
    ok = True
    worst = 0.0
    for n in range(1, 9):
        for m in range(1, 2**n):
            plan = plan_iterations(n, m)
            state = run(build_amplification(build_less_than(n, m), m))
            success = float(state.probabilities()[:m].sum())
            formula = math.sin((2 * plan.k + 1) * plan.theta) ** 2
            gap = abs(success - formula)
            worst = max(worst, gap)
            if gap > 1e-9:
                ok = False
    pinned = [
        (6, 42, 2, 0.99995, 1e-4),
        (6, 13, 1, 0.972, 1e-3),
        (4, 4, 1, 1.0, 1e-12),
    ]
    for n, m, want_k, want_p, tol in pinned:
        plan = plan_iterations(n, m)
        if plan.k != want_k or abs(plan.predicted_success - want_p) > tol:
            ok = False
    print(f"criterion 3: worst |simulated - formula| = {worst:.3e}")
    assert _verdict(3, ok)


def test_criterion_4_histogram_of_42_of_64():
    """20000 shots of the planned 42-of-64 run: every marked state within 5
    binomial standard deviations of its expected count, under 0.2% leakage."""
    circuit = build_amplification(build_less_than(6, 42), 42)
    histogram = sample(run(circuit), 20000, 7)
    p = 0.99995 / 42
    expected = 20000 * p
    sigma = math.sqrt(20000 * p * (1 - p))
    ok = True
    worst = 0.0
    for state in range(42):
        gap = abs(histogram.counts.get(state, 0) - expected)
        worst = max(worst, gap / sigma)
        if gap > 5 * sigma:
            ok = False
    leaked = sum(c for s, c in histogram.counts.items() if s >= 42) / 20000
    if leaked >= 0.002:
        ok = False
    print(f"criterion 4: worst marked-state deviation {worst:.2f} sigma, leakage {leaked:.4%}")
    assert _verdict(4, ok)


def test_criterion_5_depth_dominance():
    """Lowered oracle depth below lowered baseline depth for every threshold
    at widths 2..8, baseline mean depth growing at least 1.8x per added qubit,
    oracle mean depth growing sub-linearly in comparison.

    This documents a real property gap rather than an implementation bug: at
    m = 2^(n-1) the baseline needs one gate while the oracle needs three, and
    the ancilla-free multi-controlled-Z cascade makes the oracle's lowered
    depth grow exponentially just like the baseline's. The assertion is kept
    as stated and the measured numbers are printed for the record.
    """
    widths = range(2, 9)
    oracle = depth_sweep(widths, SynthesisMethod.LESS_THAN_ORACLE)
    baseline = depth_sweep(widths, SynthesisMethod.DIAGONAL_BASELINE)
    base_depth = {(r.n, r.m): r.metrics.depth for r in baseline}

    wins = ties = losses = 0
    for r in oracle:
        b = base_depth[(r.n, r.m)]
        if r.metrics.depth < b:
            wins += 1
        elif r.metrics.depth == b:
            ties += 1
        else:
            losses += 1
    dominance = losses == 0 and ties == 0

    oracle_mean = {s.n: s.mean_depth for s in summarize_sweep(oracle)}
    base_mean = {s.n: s.mean_depth for s in summarize_sweep(baseline)}
    base_growth = [base_mean[n + 1] / base_mean[n] for n in list(widths)[:-1]]
    oracle_growth = [oracle_mean[n + 1] / oracle_mean[n] for n in list(widths)[:-1]]
    baseline_grows = all(g >= 1.8 for g in base_growth)
    oracle_sublinear = all(o < b for o, b in zip(oracle_growth, base_growth))

    print(f"criterion 5: oracle shallower in {wins}/{len(oracle)} cases, ties {ties}")
    print(f"criterion 5: mean depths (oracle vs baseline): "
          + ", ".join(f"n={n}: {oracle_mean[n]:.1f}/{base_mean[n]:.1f}" for n in widths))
    print(f"criterion 5: baseline growth {[round(g, 3) for g in base_growth]} (>=1.8: {baseline_grows})")
    print(f"criterion 5: oracle growth {[round(g, 3) for g in oracle_growth]} (below baseline: {oracle_sublinear})")
    ok = dominance and baseline_grows and oracle_sublinear
    assert _verdict(5, ok), (
        "the oracle construction does not dominate a pruned Walsh-spectrum "
        "baseline on lowered depth; see the printed sweep statistics"
    )


def test_criterion_6_lowering_soundness_on_random_circuits():
    """200 randomly drawn oracle/diffuser circuits at widths up to 6: the
    lowered form matches the original on every basis state within 1e-9 up to
    global phase."""
    rng = np.random.default_rng(2026)
    ok = True
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 7))
        kind = int(rng.integers(0, 3))
        if kind == 0:
            c = build_diffuser(n)
        elif n == 1:
            c = build_less_than(1, 1)
        elif kind == 1:
            c = build_less_than(n, int(rng.integers(1, 2**n)))
        else:
            c = build_greater_equal(n, int(rng.integers(1, 2**n)))
        gap = _phase_distance(unitary(lower(c)), unitary(c))
        worst = max(worst, gap)
        if gap > 1e-9:
            ok = False
    print(f"criterion 6: worst lowering deviation {worst:.3e}")
    assert _verdict(6, ok)


def test_criterion_7_baseline_soundness():
    """Synthesized diagonal equals the reference diagonal action within 1e-9
    up to global phase, for every threshold at widths up to 6."""
    ok = True
    worst = 0.0
    for n in range(1, 7):
        idx = np.arange(2**n)
        for m in range(1, 2**n):
            phases = less_than_phases(n, m)
            perm, got = basis_action(synthesize_diagonal(phases))
            if not np.array_equal(perm, idx):
                ok = False
                continue
            want = np.exp(1j * phases.phases)
            gap = _phase_distance(got, want)
            worst = max(worst, gap)
            if gap > 1e-9:
                ok = False
    # one dense statevector cross-check per width
    rng = np.random.default_rng(9)
    for n in range(1, 7):
        amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        amps /= np.linalg.norm(amps)
        state = StateVector(n, amps.astype(np.complex128))
        m = int(rng.integers(1, 2**n))
        phases = less_than_phases(n, m)
        got = run(synthesize_diagonal(phases), state).amplitudes
        want = amps * np.exp(1j * phases.phases)
        gap = _phase_distance(got, want)
        worst = max(worst, gap)
        if gap > 1e-9:
            ok = False
    print(f"criterion 7: worst synthesis deviation {worst:.3e}")
    assert _verdict(7, ok)


def test_criterion_8_composition_properties():
    """Range oracles flip exactly the half-open interval, every oracle is
    diagonal, and oracle applications commute, at widths up to 5."""
    ok = True
    # (a) every oracle at width <= 5 is diagonal with unit-modulus signs
    for n in range(1, 6):
        idx = np.arange(2**n)
        oracles = [build_less_than(n, m) for m in range(1, 2**n)]
        oracles += [build_greater_equal(n, m) for m in range(1, 2**n)]
        for a in range(2**n):
            for b in range(a + 1, 2**n + 1):
                if a == 0 and b == 2**n:
                    continue
                oracles.append(build_range(n, a, b))
        for c in oracles:
            perm, phase = basis_action(c)
            if not np.array_equal(perm, idx):
                ok = False
            if np.abs(np.abs(phase) - 1.0).max() > 1e-12:
                ok = False
        # range sign pattern, exhaustive over (a, b)
        for a in range(2**n):
            for b in range(a + 1, 2**n + 1):
                if a == 0 and b == 2**n:
                    continue
                _, phase = basis_action(build_range(n, a, b))
                expected = np.where((idx >= a) & (idx < b), -1.0, 1.0)
                if np.abs(phase - expected).max() > 1e-12:
                    ok = False
    # (b) literal commutativity: both concatenation orders agree on a dense
    # random state, all threshold pairs at width 4 and samples at width 5
    rng = np.random.default_rng(88)

    def _commutes(x, y, n):
        amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        amps /= np.linalg.norm(amps)
        state = StateVector(n, amps.astype(np.complex128))
        fwd = run(concat(x, y), state).amplitudes
        rev = run(concat(y, x), state).amplitudes
        return np.abs(fwd - rev).max() <= 1e-12

    n = 4
    pool4 = [build_less_than(n, m) for m in range(1, 16)]
    pool4 += [build_greater_equal(n, m) for m in range(1, 16)]
    for i, x in enumerate(pool4):
        for y in pool4[i:]:
            if not _commutes(x, y, n):
                ok = False
    n = 5
    pool5 = [build_less_than(n, 7), build_greater_equal(n, 20), build_range(n, 3, 17),
             build_range(n, 8, 32), build_less_than(n, 31), build_range(n, 0, 9)]
    for i, x in enumerate(pool5):
        for y in pool5[i:]:
            if not _commutes(x, y, n):
                ok = False
    assert _verdict(8, ok)
