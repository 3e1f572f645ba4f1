"""Ancilla-free threshold phase oracles, amplitude amplification, exact
statevector simulation, a Walsh-spectrum diagonal-synthesis baseline, and
lowering/depth tooling over a small shared circuit IR."""

from ltoracle.amplify import (
    AmplificationPlan,
    build_amplification,
    build_diffuser,
    plan_iterations,
)
from ltoracle.circuit import (
    Circuit,
    DepthMetrics,
    Gate,
    GateKind,
    concat,
    depth,
    from_json_dict,
    peephole_cancel_x,
    to_json_dict,
)
from ltoracle.diagonal import (
    DiagonalPhases,
    less_than_phases,
    reference_apply,
    synthesize_diagonal,
    walsh_spectrum,
)
from ltoracle.errors import DomainError
from ltoracle.lowering import (
    BASIS,
    DepthReport,
    SynthesisMethod,
    depth_sweep,
    expand_mcz,
    lower,
    summarize_sweep,
    sweep_to_csv,
)
from ltoracle.oracles import build_greater_equal, build_less_than, build_range
from ltoracle.sim import (
    Histogram,
    StateVector,
    apply_gate,
    backend_name,
    basis_action,
    histogram_to_csv,
    histogram_to_json,
    run,
    sample,
    unitary,
    zero_state,
)

__version__ = "0.1.0"

__all__ = [
    "AmplificationPlan",
    "BASIS",
    "Circuit",
    "DepthMetrics",
    "DepthReport",
    "DiagonalPhases",
    "DomainError",
    "Gate",
    "GateKind",
    "Histogram",
    "StateVector",
    "SynthesisMethod",
    "__version__",
    "apply_gate",
    "backend_name",
    "basis_action",
    "build_amplification",
    "build_diffuser",
    "build_greater_equal",
    "build_less_than",
    "build_range",
    "concat",
    "depth",
    "depth_sweep",
    "expand_mcz",
    "from_json_dict",
    "histogram_to_csv",
    "histogram_to_json",
    "less_than_phases",
    "lower",
    "peephole_cancel_x",
    "plan_iterations",
    "reference_apply",
    "run",
    "sample",
    "summarize_sweep",
    "sweep_to_csv",
    "synthesize_diagonal",
    "to_json_dict",
    "unitary",
    "walsh_spectrum",
    "zero_state",
]
