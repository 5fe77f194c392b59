"""Single-amplitude quantum circuit simulation by depth-first path summation.

The core entry point is :func:`path_sum_amplitude`, which computes one
transition amplitude of a gate circuit in memory proportional to the qubit
count plus the number of branching (H) gates, independent of the total path
count.  :func:`statevector_amplitude` is the dense exponential-space
reference backend used to cross-check it at small widths.
"""

from .circuit import (
    MAX_QUBITS,
    AmplitudeQuery,
    BasisState,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    invert_circuit,
    invert_gate,
    make_circuit,
)
from .engine import (
    EngineOptions,
    QueryTimeout,
    TraversalStats,
    end_state_reachable,
    path_sum_amplitude,
)
from .gates import (
    Branch,
    GateClass,
    apply_nonbranching,
    branch_gate,
    classify_gate,
    phase_factor,
)
from .generators import (
    HspLayout,
    gen_hsp_standard,
    gen_layered_hadamard,
    gen_layered_qft,
    gen_qft,
    hsp_layout,
)
from .statevector import (
    MAX_STATEVECTOR_QUBITS,
    StateVector,
    StateVectorLimitError,
    statevector_amplitude,
    statevector_simulate,
)
from .textio import (
    CircuitParseError,
    format_basis_state,
    parse_basis_state,
    parse_circuit,
    serialize_circuit,
)
from .bench import (
    BenchPlan,
    BenchRecord,
    run_benchmark,
    write_csv,
    write_plot_data,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_QUBITS",
    "MAX_STATEVECTOR_QUBITS",
    "AmplitudeQuery",
    "BasisState",
    "BenchPlan",
    "BenchRecord",
    "Branch",
    "Circuit",
    "CircuitError",
    "CircuitParseError",
    "EngineOptions",
    "Gate",
    "GateClass",
    "GateKind",
    "HspLayout",
    "QueryTimeout",
    "StateVector",
    "StateVectorLimitError",
    "TraversalStats",
    "apply_nonbranching",
    "branch_gate",
    "classify_gate",
    "end_state_reachable",
    "format_basis_state",
    "gen_hsp_standard",
    "gen_layered_hadamard",
    "gen_layered_qft",
    "gen_qft",
    "hsp_layout",
    "invert_circuit",
    "invert_gate",
    "make_circuit",
    "parse_basis_state",
    "parse_circuit",
    "path_sum_amplitude",
    "phase_factor",
    "run_benchmark",
    "serialize_circuit",
    "statevector_amplitude",
    "statevector_simulate",
    "write_csv",
    "write_plot_data",
]
