"""Path-summing amplitude engine.

Computes one transition amplitude <end| C |start> by a depth-first walk over
the tree of basis states the circuit can reach.  Non-branching gates extend
the current path in place; each H opens two subtrees.  Working memory is an
amplitude register with one slot per branching level plus a fixed-size frame
per level: O(n + h) for an n-qubit circuit with h branching gates, however
long the circuit and however many paths the walk visits.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ._kernels import pack_circuit, traverse
from .circuit import AmplitudeQuery, BasisState, Circuit, CircuitError


@dataclass(frozen=True)
class EngineOptions:
    """Traversal knobs.

    ``prune`` cuts a path as soon as the end state is out of reach (each
    remaining gate can fix at most one wrong bit); the cut subtree would have
    summed to zero, so the amplitude is unchanged.  ``deadline_s`` caps the
    wall-clock time of one query; exceeding it raises QueryTimeout.
    """

    prune: bool = True
    deadline_s: float | None = None


@dataclass(frozen=True)
class TraversalStats:
    """Counters from one traversal.

    ``recursion_calls`` counts branch descents (the root does not count);
    ``edges_traversed`` counts gate applications, i.e. non-branching gates
    processed plus branch descents; ``max_depth_reached`` is the deepest
    branching level visited; ``prunes`` counts cut subpaths.
    """

    recursion_calls: int
    edges_traversed: int
    prunes: int
    max_depth_reached: int


class QueryTimeout(RuntimeError):
    """A query exceeded its wall-clock deadline."""


def end_state_reachable(current: BasisState, end: BasisState, gates_remaining: int) -> bool:
    """Whether ``end`` is still reachable with ``gates_remaining`` gates left.

    Every supported gate flips at most one bit of a basis state, so the
    Hamming distance to the end state can shrink by at most one per gate.
    """
    if gates_remaining < 0:
        raise CircuitError(f"gates_remaining must be >= 0, got {gates_remaining}")
    return current.hamming_distance(end) <= gates_remaining


def path_sum_amplitude(
    circuit: Circuit,
    query: AmplitudeQuery,
    options: EngineOptions | None = None,
) -> tuple[complex, TraversalStats]:
    """Amplitude <end| C |start> plus traversal counters.

    Worst-case visited edges are bounded by (t + 2) * 2**h for t non-branching
    and h branching gates; pruning only ever lowers the count.
    """
    if options is None:
        options = EngineOptions()
    if query.width != circuit.num_qubits:
        raise CircuitError(
            f"query width {query.width} does not match circuit width {circuit.num_qubits}"
        )
    packed = pack_circuit(circuit)
    h = circuit.branching_count
    # The whole working set: one amplitude slot per branching level (slot 0
    # holds the result) and one frame per level for the explicit stack.
    amp = np.zeros(h + 1, dtype=np.complex128)
    frame_gate = np.zeros(h + 1, dtype=np.int64)
    frame_state = np.zeros(h + 1, dtype=np.int64)
    frame_re = np.zeros(h + 1, dtype=np.float64)
    frame_im = np.zeros(h + 1, dtype=np.float64)
    frame_branch = np.zeros(h + 1, dtype=np.int8)
    if options.deadline_s is not None:
        if options.deadline_s <= 0:
            raise CircuitError(f"deadline_s must be positive, got {options.deadline_s}")
        deadline = time.perf_counter() + options.deadline_s
    else:
        deadline = -1.0
    calls, edges, prunes, max_depth, timed_out = traverse(
        packed.hq,
        packed.cmask,
        packed.fac1,
        packed.flip1,
        packed.fac0,
        packed.flip0,
        query.start.bits,
        query.end.bits,
        options.prune,
        deadline,
        amp,
        frame_gate,
        frame_state,
        frame_re,
        frame_im,
        frame_branch,
    )
    if timed_out:
        raise QueryTimeout(
            f"amplitude query exceeded its deadline of {options.deadline_s} s"
        )
    stats = TraversalStats(
        recursion_calls=int(calls),
        edges_traversed=int(edges),
        prunes=int(prunes),
        max_depth_reached=int(max_depth),
    )
    return complex(amp[0]), stats
