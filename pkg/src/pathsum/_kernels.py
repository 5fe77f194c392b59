"""Flat gate encodings and the hot loops behind both simulation backends.

Every non-branching gate reduces to one conditional micro-operation on a
basis-state mask: if ``(state & cmask) == cmask`` multiply the path phase by
``fac1`` and xor ``flip1`` into the state, otherwise use ``fac0``/``flip0``.
H is kept separate because it is the only gate that branches.

The traversal and state-vector loops below each have a single Python source.
By default they are compiled with numba; set ``PATHSUM_DISABLE_NUMBA=1``
before import to run them as plain interpreted Python instead.  Both variants
stay importable (``traverse``/``traverse_py`` and friends) so the two can be
benchmarked against each other in one process.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, CircuitError, GateKind
from .gates import INV_SQRT2, phase_factor


def _numba_disabled() -> bool:
    flag = os.environ.get("PATHSUM_DISABLE_NUMBA", "")
    return flag.strip().lower() in {"1", "true", "yes", "on"}


NUMBA_ENABLED = False
if not _numba_disabled():
    try:
        from numba import njit, objmode

        NUMBA_ENABLED = True
    except ImportError:
        pass


if NUMBA_ENABLED:

    @njit(cache=True)
    def _clock() -> float:
        with objmode(now="float64"):
            now = time.perf_counter()
        return now

else:

    def _clock() -> float:
        return time.perf_counter()


@dataclass(frozen=True)
class PackedCircuit:
    """Array form of a circuit, one row per gate.

    ``hq[i]`` is the operand qubit when gate i is an H, else -1 and the gate
    is the micro-operation described by the remaining arrays.
    """

    num_qubits: int
    hq: np.ndarray  # int64
    cmask: np.ndarray  # int64
    fac1: np.ndarray  # complex128, factor when (state & cmask) == cmask
    flip1: np.ndarray  # int64, xor mask when the condition holds
    fac0: np.ndarray  # complex128, factor otherwise
    flip0: np.ndarray  # int64, xor mask otherwise


def pack_circuit(circuit: Circuit) -> PackedCircuit:
    length = circuit.num_gates
    hq = np.full(length, -1, dtype=np.int64)
    cmask = np.zeros(length, dtype=np.int64)
    fac1 = np.ones(length, dtype=np.complex128)
    flip1 = np.zeros(length, dtype=np.int64)
    fac0 = np.ones(length, dtype=np.complex128)
    flip0 = np.zeros(length, dtype=np.int64)
    for i, gate in enumerate(circuit.gates):
        kind = gate.kind
        qs = gate.qubits
        if kind is GateKind.H:
            hq[i] = qs[0]
        elif kind is GateKind.I:
            pass
        elif kind is GateKind.X:
            flip1[i] = 1 << qs[0]
        elif kind is GateKind.Y:
            # Y|0> = i|1>, Y|1> = -i|0>: flip either way, sign from the old bit
            cmask[i] = 1 << qs[0]
            fac1[i] = -1j
            flip1[i] = 1 << qs[0]
            fac0[i] = 1j
            flip0[i] = 1 << qs[0]
        elif kind is GateKind.Z:
            cmask[i] = 1 << qs[0]
            fac1[i] = -1.0
        elif kind is GateKind.S:
            cmask[i] = 1 << qs[0]
            fac1[i] = 1j
        elif kind is GateKind.T:
            cmask[i] = 1 << qs[0]
            fac1[i] = phase_factor(math.pi / 4)
        elif kind is GateKind.P:
            cmask[i] = 1 << qs[0]
            fac1[i] = phase_factor(gate.theta)
        elif kind is GateKind.CP:
            cmask[i] = (1 << qs[0]) | (1 << qs[1])
            fac1[i] = phase_factor(gate.theta)
        elif kind is GateKind.CNOT:
            cmask[i] = 1 << qs[0]
            flip1[i] = 1 << qs[1]
        elif kind is GateKind.CCX:
            cmask[i] = (1 << qs[0]) | (1 << qs[1])
            flip1[i] = 1 << qs[2]
        else:
            raise CircuitError(f"unhandled gate kind {kind!r}")
    return PackedCircuit(circuit.num_qubits, hq, cmask, fac1, flip1, fac0, flip0)


def _traverse_impl(
    hq,
    cmask,
    fac1,
    flip1,
    fac0,
    flip0,
    start,
    end,
    prune,
    deadline,
    amp,
    frame_gate,
    frame_state,
    frame_re,
    frame_im,
    frame_branch,
):
    """Depth-first walk of the computation tree for one amplitude query.

    ``amp`` has one slot per branching depth plus slot 0 for the result;
    the ``frame_*`` arrays are the explicit stack, one frame per pending
    branching gate.  The caller allocates everything: this function performs
    no allocation, so its working set is exactly the O(n + h) arrays passed
    in.  Returns (calls, edges, prunes, max_depth, timed_out); the result is
    left in ``amp[0]``.
    """
    length = hq.shape[0]
    state = start
    phase_re = 1.0
    phase_im = 0.0
    pos = 0
    depth = 0
    calls = 0
    edges = 0
    prunes = 0
    max_depth = 0
    while True:
        # Forward: run gates until the path ends or dies.
        pruned = False
        while pos < length:
            if deadline > 0.0 and (edges & 8191) == 0:
                if _clock() > deadline:
                    return calls, edges, prunes, max_depth, True
            if prune:
                # Branch-free popcount of state ^ end (all constants fit in
                # int64; bit 63 never set for < 63-bit masks, so the final
                # mask makes the multiply overflow-safe in plain Python too).
                # The int() cast is a no-op when compiled; interpreted, it
                # keeps numpy int64 scalars read from the frame arrays from
                # turning the exact Python multiply into a wrapping one.
                d = int(state ^ end)
                d = d - ((d >> 1) & 0x5555555555555555)
                d = (d & 0x3333333333333333) + ((d >> 2) & 0x3333333333333333)
                d = (d + (d >> 4)) & 0x0F0F0F0F0F0F0F0F
                dist = ((d * 0x0101010101010101) & 0x7FFFFFFFFFFFFFFF) >> 56
                if dist > length - pos:
                    # Each remaining gate fixes at most one wrong bit, so this
                    # subpath can no longer reach the end state.
                    prunes += 1
                    pruned = True
                    break
            q = hq[pos]
            if q >= 0:
                # Branching gate: open a frame, descend the cleared branch.
                amp[depth] = 0j
                frame_gate[depth] = pos
                frame_state[depth] = state
                frame_re[depth] = phase_re
                frame_im[depth] = phase_im
                frame_branch[depth] = 0
                state = state & ~(1 << q)
                phase_re = phase_re * INV_SQRT2
                phase_im = phase_im * INV_SQRT2
                pos += 1
                depth += 1
                calls += 1
                edges += 1
                if depth > max_depth:
                    max_depth = depth
            else:
                if (state & cmask[pos]) == cmask[pos]:
                    f = fac1[pos]
                    state = state ^ flip1[pos]
                else:
                    f = fac0[pos]
                    state = state ^ flip0[pos]
                fr = f.real
                fi = f.imag
                if fr != 1.0 or fi != 0.0:
                    new_re = phase_re * fr - phase_im * fi
                    phase_im = phase_re * fi + phase_im * fr
                    phase_re = new_re
                pos += 1
                edges += 1
        if pruned:
            amp[depth] = 0j
        elif state == end:
            amp[depth] = complex(phase_re, phase_im)
        else:
            amp[depth] = 0j
        # Backward: fold the finished subtree into its parent, then either
        # take the parent's second branch or keep popping.
        while True:
            if depth == 0:
                return calls, edges, prunes, max_depth, False
            parent = depth - 1
            amp[parent] = amp[parent] + amp[depth]
            if frame_branch[parent] == 0:
                frame_branch[parent] = 1
                gate_pos = frame_gate[parent]
                saved = frame_state[parent]
                q = hq[gate_pos]
                if (saved >> q) & 1:
                    factor = -INV_SQRT2
                else:
                    factor = INV_SQRT2
                phase_re = frame_re[parent] * factor
                phase_im = frame_im[parent] * factor
                state = saved | (1 << q)
                pos = gate_pos + 1
                calls += 1
                edges += 1
                break
            depth = parent


def _sv_hadamard_impl(psi, q):
    """In-place H butterfly on qubit q of a dense state vector."""
    stride = 1 << q
    size = psi.shape[0]
    for base in range(0, size, stride << 1):
        for i in range(base, base + stride):
            a = psi[i]
            b = psi[i + stride]
            psi[i] = (a + b) * INV_SQRT2
            psi[i + stride] = (a - b) * INV_SQRT2


def _sv_microop_impl(psi, out, cmask, f1, flip1, f0, flip0):
    """One conditional micro-operation, scattering psi into out."""
    for i in range(psi.shape[0]):
        if (i & cmask) == cmask:
            out[i ^ flip1] = psi[i] * f1
        else:
            out[i ^ flip0] = psi[i] * f0


traverse_py = _traverse_impl
sv_hadamard_py = _sv_hadamard_impl
sv_microop_py = _sv_microop_impl

if NUMBA_ENABLED:
    traverse = njit(cache=True)(_traverse_impl)
    sv_hadamard = njit(cache=True)(_sv_hadamard_impl)
    sv_microop = njit(cache=True)(_sv_microop_impl)
else:
    traverse = _traverse_impl
    sv_hadamard = _sv_hadamard_impl
    sv_microop = _sv_microop_impl


def warm_up():
    """Trigger compilation of the compiled kernels outside any timed region."""
    # One H gate, queried |0> -> |0>, with pruning on so every code path
    # (including the popcount and clock helpers) gets compiled here.
    hq = np.zeros(1, dtype=np.int64)
    zeros = np.zeros(1, dtype=np.int64)
    ones = np.ones(1, dtype=np.complex128)
    amp = np.zeros(2, dtype=np.complex128)
    traverse(
        hq, zeros, ones, zeros, ones, zeros, 0, 0, True, -1.0,
        amp,
        np.zeros(2, dtype=np.int64),
        np.zeros(2, dtype=np.int64),
        np.zeros(2, dtype=np.float64),
        np.zeros(2, dtype=np.float64),
        np.zeros(2, dtype=np.int8),
    )
    psi = np.zeros(2, dtype=np.complex128)
    psi[0] = 1.0
    sv_hadamard(psi, 0)
    sv_microop(psi, np.empty_like(psi), 1, 1j, 0, 1.0 + 0j, 0)
