"""Shared test helpers: random circuits, an independent matrix oracle, and
the malformed-input corpus for the text format.

The matrix oracle builds dense gate unitaries straight from the textbook
2x2 / controlled definitions, deliberately not reusing the package's gate
semantics, so tests can compare three independent routes to the same number.
"""
from __future__ import annotations

import math

import numpy as np

from pathsum import AmplitudeQuery, BasisState, Gate, GateKind, make_circuit

SINGLE_KINDS = [
    GateKind.H,
    GateKind.X,
    GateKind.Y,
    GateKind.Z,
    GateKind.S,
    GateKind.T,
    GateKind.P,
    GateKind.I,
]
TWO_KINDS = [GateKind.CP, GateKind.CNOT]
THREE_KINDS = [GateKind.CCX]


def random_gate(rng: np.random.Generator, n: int) -> Gate:
    pool = list(SINGLE_KINDS)
    if n >= 2:
        pool.extend(TWO_KINDS)
    if n >= 3:
        pool.extend(THREE_KINDS)
    kind = pool[int(rng.integers(len(pool)))]
    qubits = tuple(int(q) for q in rng.choice(n, size=kind.arity, replace=False))
    theta = float(rng.uniform(-2 * math.pi, 2 * math.pi)) if kind.takes_angle else None
    return Gate(kind, qubits, theta)


def random_circuit(rng: np.random.Generator, n: int, length: int):
    return make_circuit(n, [random_gate(rng, n) for _ in range(length)])


def random_state(rng: np.random.Generator, n: int) -> BasisState:
    return BasisState(int(rng.integers(1 << n)), n)


def random_query(rng: np.random.Generator, n: int) -> AmplitudeQuery:
    return AmplitudeQuery(random_state(rng, n), random_state(rng, n))


_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.diag([1, -1]).astype(complex)
_S = np.diag([1, 1j]).astype(complex)
_T = np.diag([1, np.exp(1j * math.pi / 4)]).astype(complex)
_I = np.eye(2, dtype=complex)


def _single_qubit_matrix(kind: GateKind, theta) -> np.ndarray:
    if kind is GateKind.H:
        return _H
    if kind is GateKind.X:
        return _X
    if kind is GateKind.Y:
        return _Y
    if kind is GateKind.Z:
        return _Z
    if kind is GateKind.S:
        return _S
    if kind is GateKind.T:
        return _T
    if kind is GateKind.P:
        return np.diag([1, np.exp(1j * theta)]).astype(complex)
    if kind is GateKind.I:
        return _I
    raise AssertionError(kind)


def gate_unitary(gate: Gate, n: int) -> np.ndarray:
    """Dense 2**n x 2**n unitary of one gate (qubit i is bit i of the index)."""
    dim = 1 << n
    full = np.zeros((dim, dim), dtype=complex)
    kind = gate.kind
    if kind.arity == 1:
        u = _single_qubit_matrix(kind, gate.theta)
        q = gate.qubits[0]
        for col in range(dim):
            b = (col >> q) & 1
            for b2 in (0, 1):
                row = (col & ~(1 << q)) | (b2 << q)
                full[row, col] += u[b2, b]
        return full
    if kind is GateKind.CP:
        controls, target = gate.qubits[:1], gate.qubits[1]
        action = np.diag([1, np.exp(1j * gate.theta)]).astype(complex)
    elif kind is GateKind.CNOT:
        controls, target = gate.qubits[:1], gate.qubits[1]
        action = _X
    elif kind is GateKind.CCX:
        controls, target = gate.qubits[:2], gate.qubits[2]
        action = _X
    else:
        raise AssertionError(kind)
    for col in range(dim):
        if all((col >> c) & 1 for c in controls):
            b = (col >> target) & 1
            for b2 in (0, 1):
                row = (col & ~(1 << target)) | (b2 << target)
                full[row, col] += action[b2, b]
        else:
            full[col, col] = 1.0
    return full


def circuit_unitary(circuit) -> np.ndarray:
    """Product of the per-gate unitaries, later gates applied on the left."""
    dim = 1 << circuit.num_qubits
    full = np.eye(dim, dtype=complex)
    for gate in circuit.gates:
        full = gate_unitary(gate, circuit.num_qubits) @ full
    return full


# Malformed circuit files with the exact position the parser must report and
# a fragment the diagnostic must contain.  Shared by the format tests and the
# acceptance gate.
BAD_CIRCUIT_CORPUS = [
    ("", 1, 1, "missing 'qubits"),
    ("# just a comment\n", 1, 1, "missing 'qubits"),
    ("h 0\n", 1, 1, "expected a 'qubits"),
    ("qubits\n", 1, 1, "missing qubit count"),
    ("qubits x\n", 1, 8, "not a positive integer"),
    ("qubits -2\n", 1, 8, "not a positive integer"),
    ("qubits 0\n", 1, 8, "between 1 and 62"),
    ("qubits 63\n", 1, 8, "between 1 and 62"),
    ("qubits 2 3\n", 1, 10, "unexpected argument"),
    ("qubits 2\nqubits 2\n", 2, 1, "duplicate 'qubits'"),
    ("qubits 2\nfoo 0\n", 2, 1, "unknown gate 'foo'"),
    ("qubits 2\nh\n", 2, 1, "expects 1 qubit operand"),
    ("qubits 2\nh 0 1\n", 2, 5, "unexpected extra argument"),
    ("qubits 2\ncx 0\n", 2, 1, "expects 2 qubit operand"),
    ("qubits 2\ncx 0 0\n", 2, 6, "duplicate operand"),
    ("qubits 2\ncx 0 2\n", 2, 6, "out of range"),
    ("qubits 2\nh 5\n", 2, 3, "out of range"),
    ("qubits 2\nh -1\n", 2, 3, "not a non-negative integer"),
    ("qubits 2\nh 1.5\n", 2, 3, "not a non-negative integer"),
    ("qubits 2\np 0\n", 2, 1, "missing its angle"),
    ("qubits 2\np 0 abc\n", 2, 5, "not a number"),
    ("qubits 2\np 0 inf\n", 2, 5, "not finite"),
    ("qubits 2\ncp 0 1 1.0 2\n", 2, 12, "unexpected extra argument"),
    ("qubits 2\nx0\n", 2, 1, "unknown gate 'x0'"),
    ("qubits 2\nh 0 # fine\nccx 0 1\n", 3, 1, "expects 3 qubit operand"),
]
