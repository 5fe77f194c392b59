"""Gate semantics: classification, per-state actions, and the invariants the
pruning rule and the traversal lean on.  Also pins the kernels' flat micro-op
encoding against the readable reference semantics, kind by kind.
"""
import math

import numpy as np
import pytest

from conftest import random_gate, random_state
from pathsum import (
    BasisState,
    CircuitError,
    Gate,
    GateClass,
    GateKind,
    apply_nonbranching,
    branch_gate,
    classify_gate,
    invert_gate,
    make_circuit,
    phase_factor,
)
from pathsum._kernels import pack_circuit
from pathsum.circuit import ccx, cnot, cp, h, identity, p, s, t, x, y, z

INV_SQRT2 = math.sqrt(0.5)


def test_classification():
    assert classify_gate(GateKind.H) is GateClass.BRANCHING
    for kind in GateKind:
        if kind is not GateKind.H:
            assert classify_gate(kind) is GateClass.NON_BRANCHING
    assert classify_gate(GateKind.CCX) is GateClass.NON_BRANCHING
    assert classify_gate(GateKind.CP) is GateClass.NON_BRANCHING


def test_apply_nonbranching_examples():
    b = apply_nonbranching(x(0), BasisState(0, 1))
    assert (b.state.bits, b.factor) == (1, 1.0 + 0j)
    b = apply_nonbranching(z(0), BasisState(1, 1))
    assert (b.state.bits, b.factor) == (1, -1.0 + 0j)
    b = apply_nonbranching(cp(0, 1, math.pi / 2), BasisState(0b11, 2))
    assert b.state.bits == 0b11
    assert abs(b.factor - 1j) < 1e-15
    b = apply_nonbranching(ccx(0, 1, 2), BasisState(0b011, 3))
    assert (b.state.bits, b.factor) == (0b111, 1.0 + 0j)


def test_y_phases():
    assert apply_nonbranching(y(0), BasisState(0, 1)).factor == 1j
    assert apply_nonbranching(y(0), BasisState(1, 1)).factor == -1j
    assert apply_nonbranching(y(0), BasisState(0, 1)).state.bits == 1
    assert apply_nonbranching(y(0), BasisState(1, 1)).state.bits == 0


def test_phase_gates_only_fire_on_set_bit():
    for gate, factor in [
        (s(0), 1j),
        (t(0), phase_factor(math.pi / 4)),
        (p(0, 1.25), phase_factor(1.25)),
    ]:
        assert apply_nonbranching(gate, BasisState(0, 1)).factor == 1.0 + 0j
        assert apply_nonbranching(gate, BasisState(1, 1)).factor == factor


def test_controlled_gates_respect_controls():
    assert apply_nonbranching(cnot(0, 1), BasisState(0b01, 2)).state.bits == 0b11
    assert apply_nonbranching(cnot(0, 1), BasisState(0b10, 2)).state.bits == 0b10
    assert apply_nonbranching(ccx(0, 1, 2), BasisState(0b001, 3)).state.bits == 0b001
    assert apply_nonbranching(cp(0, 1, 1.0), BasisState(0b01, 2)).factor == 1.0 + 0j
    assert apply_nonbranching(identity(0), BasisState(1, 1)).state.bits == 1


def test_class_mismatch_rejected():
    with pytest.raises(CircuitError, match="branching"):
        apply_nonbranching(h(0), BasisState(0, 1))
    with pytest.raises(CircuitError, match="not a branching"):
        branch_gate(x(0), BasisState(0, 1))


def test_branch_gate_rows():
    low, high = branch_gate(h(0), BasisState(0, 1))
    assert (low.state.bits, high.state.bits) == (0, 1)
    assert low.factor == INV_SQRT2 and high.factor == INV_SQRT2
    low, high = branch_gate(h(0), BasisState(1, 1))
    assert (low.state.bits, high.state.bits) == (0, 1)
    assert low.factor == INV_SQRT2 and high.factor == -INV_SQRT2
    # same rule on a higher qubit: "01" has qubit 1 set
    low, high = branch_gate(h(1), BasisState(0b10, 2))
    assert (low.state.bits, high.state.bits) == (0b00, 0b10)
    assert low.factor == INV_SQRT2 and high.factor == -INV_SQRT2


def test_branch_factors_unit_row_norm():
    rng = np.random.default_rng(5)
    for _ in range(200):
        n = int(rng.integers(1, 8))
        gate = random_gate(rng, n)
        state = random_state(rng, n)
        if gate.kind.is_branching:
            branches = branch_gate(gate, state)
            assert len(branches) == 2
        else:
            branches = [apply_nonbranching(gate, state)]
        total = sum(abs(b.factor) ** 2 for b in branches)
        assert abs(total - 1.0) < 1e-12


def test_each_gate_changes_at_most_one_bit():
    rng = np.random.default_rng(6)
    for _ in range(300):
        n = int(rng.integers(1, 9))
        gate = random_gate(rng, n)
        state = random_state(rng, n)
        if gate.kind.is_branching:
            successors = [b.state for b in branch_gate(gate, state)]
        else:
            successors = [apply_nonbranching(gate, state).state]
        for succ in successors:
            assert state.hamming_distance(succ) <= 1


def test_inverse_gate_restores_state_with_unit_factor():
    # Applying g then invert_gate(g) must return the original basis state
    # with combined factor 1; this is what makes the inversion table right
    # for S and T even though their inverses are spelled as P gates.
    rng = np.random.default_rng(8)
    for _ in range(300):
        n = int(rng.integers(1, 8))
        gate = random_gate(rng, n)
        if gate.kind.is_branching:
            continue
        state = random_state(rng, n)
        fwd = apply_nonbranching(gate, state)
        back = apply_nonbranching(invert_gate(gate), fwd.state)
        assert back.state == state
        assert abs(fwd.factor * back.factor - 1.0) < 1e-15


def _packed_successor(packed, i, bits):
    """Replay gate i of a packed circuit on a bare bitmask, micro-op style."""
    if packed.hq[i] >= 0:
        raise AssertionError("branching gate in micro-op replay")
    if (bits & packed.cmask[i]) == packed.cmask[i]:
        return bits ^ int(packed.flip1[i]), complex(packed.fac1[i])
    return bits ^ int(packed.flip0[i]), complex(packed.fac0[i])


def test_packed_encoding_matches_reference_semantics():
    rng = np.random.default_rng(9)
    for _ in range(400):
        n = int(rng.integers(1, 9))
        gate = random_gate(rng, n)
        if gate.kind.is_branching:
            continue
        circuit = make_circuit(n, [gate])
        packed = pack_circuit(circuit)
        state = random_state(rng, n)
        want = apply_nonbranching(gate, state)
        got_bits, got_factor = _packed_successor(packed, 0, state.bits)
        assert got_bits == want.state.bits
        assert got_factor == want.factor  # identical constants, bit-exact


def test_packed_hadamard_marked():
    packed = pack_circuit(make_circuit(3, [h(2), x(0)]))
    assert packed.hq[0] == 2
    assert packed.hq[1] == -1
