"""Circuit data model: gate kinds, gates, circuits, basis states, and queries.

Basis states are bit masks in a single machine word: bit i is qubit i, so the
leftmost character of a bitstring like "0110" names qubit 0.  Circuits are
immutable after construction and every structural rule is checked up front,
which lets the simulation backends assume well-formed input.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Masks must stay comfortably inside a signed 64-bit word for the compiled
# kernels, hence 62 rather than 63 or 64.
MAX_QUBITS = 62


class CircuitError(ValueError):
    """Invalid gate, circuit, basis state, or query construction.

    ``gate_index`` and ``arg_index`` locate the offending gate / operand when
    the error refers to one, so callers that know source positions (the text
    parser) can turn them into line and column numbers.
    """

    def __init__(self, message, gate_index=None, arg_index=None):
        super().__init__(message)
        self.gate_index = gate_index
        self.arg_index = arg_index


class GateKind(Enum):
    """Supported gate set.  Enum values double as the file-format mnemonics."""

    I = "id"
    X = "x"
    Y = "y"
    Z = "z"
    S = "s"
    T = "t"
    P = "p"
    CP = "cp"
    CNOT = "cx"
    CCX = "ccx"
    H = "h"

    @property
    def arity(self) -> int:
        if self in (GateKind.CP, GateKind.CNOT):
            return 2
        if self is GateKind.CCX:
            return 3
        return 1

    @property
    def takes_angle(self) -> bool:
        return self in (GateKind.P, GateKind.CP)

    @property
    def is_branching(self) -> bool:
        # H is the only gate that maps a basis state to a superposition; every
        # other supported gate permutes basis states and/or multiplies a phase.
        return self is GateKind.H


@dataclass(frozen=True)
class Gate:
    """One gate application: a kind, its operand qubits, and an optional angle.

    For controlled kinds the controls come first: ``CNOT (control, target)``,
    ``CCX (control, control, target)``, ``CP (control, target)``.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    theta: float | None = None

    def describe(self) -> str:
        parts = [self.kind.value] + [str(q) for q in self.qubits]
        if self.theta is not None:
            parts.append(f"{self.theta:.17g}")
        return " ".join(parts)


def _gate_problem(gate: Gate, num_qubits: int):
    """Return (message, arg_index) for the first rule ``gate`` breaks, else None."""
    if not isinstance(gate.kind, GateKind):
        return f"unknown gate kind {gate.kind!r}", None
    kind = gate.kind
    if len(gate.qubits) != kind.arity:
        return (
            f"{kind.value} expects {kind.arity} qubit operand(s), got {len(gate.qubits)}",
            None,
        )
    seen = set()
    for i, q in enumerate(gate.qubits):
        if not isinstance(q, int) or isinstance(q, bool):
            return f"qubit operand {q!r} is not an integer", i
        if q < 0 or q >= num_qubits:
            return f"qubit {q} out of range for a {num_qubits}-qubit circuit", i
        if q in seen:
            return f"duplicate operand {q}", i
        seen.add(q)
    if kind.takes_angle:
        if gate.theta is None:
            return f"{kind.value} requires an angle", None
        if not math.isfinite(gate.theta):
            return f"angle {gate.theta!r} is not finite", None
    elif gate.theta is not None:
        return f"{kind.value} does not take an angle", None
    return None


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence on ``num_qubits`` qubits.  Immutable.

    ``branching_count`` (h) and ``nonbranching_count`` (t) are recomputed from
    the gate list on every access so they can never go stale.
    """

    num_qubits: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        if not isinstance(self.num_qubits, int) or isinstance(self.num_qubits, bool):
            raise CircuitError(f"qubit count {self.num_qubits!r} is not an integer")
        if self.num_qubits < 1 or self.num_qubits > MAX_QUBITS:
            raise CircuitError(
                f"qubit count must be between 1 and {MAX_QUBITS}, got {self.num_qubits}"
            )
        object.__setattr__(self, "gates", tuple(self.gates))
        for i, gate in enumerate(self.gates):
            if not isinstance(gate, Gate):
                raise CircuitError(f"gate {i}: not a Gate: {gate!r}", gate_index=i)
            problem = _gate_problem(gate, self.num_qubits)
            if problem is not None:
                message, arg_index = problem
                raise CircuitError(
                    f"gate {i}: {message}", gate_index=i, arg_index=arg_index
                )

    @property
    def num_gates(self) -> int:
        return len(self.gates)

    @property
    def branching_count(self) -> int:
        return sum(1 for g in self.gates if g.kind.is_branching)

    @property
    def nonbranching_count(self) -> int:
        return self.num_gates - self.branching_count


def make_circuit(num_qubits: int, gates) -> Circuit:
    """Validate and freeze a gate sequence into a Circuit."""
    return Circuit(num_qubits, tuple(gates))


# The self-inverse kinds map to themselves; S and T are replaced by explicit
# phase rotations of the opposite angle, P and CP negate theta.
def invert_gate(gate: Gate) -> Gate:
    kind = gate.kind
    if kind is GateKind.S:
        return Gate(GateKind.P, gate.qubits, -math.pi / 2)
    if kind is GateKind.T:
        return Gate(GateKind.P, gate.qubits, -math.pi / 4)
    if kind.takes_angle:
        return Gate(kind, gate.qubits, -gate.theta)
    return gate


def invert_circuit(circuit: Circuit) -> Circuit:
    """The inverse circuit: inverted gates in reverse order."""
    return Circuit(circuit.num_qubits, tuple(invert_gate(g) for g in reversed(circuit.gates)))


@dataclass(frozen=True)
class BasisState:
    """A computational basis state of ``width`` qubits, stored as a bit mask."""

    bits: int
    width: int

    def __post_init__(self):
        if not isinstance(self.width, int) or isinstance(self.width, bool):
            raise CircuitError(f"width {self.width!r} is not an integer")
        if self.width < 1 or self.width > MAX_QUBITS:
            raise CircuitError(
                f"width must be between 1 and {MAX_QUBITS}, got {self.width}"
            )
        if not isinstance(self.bits, int) or isinstance(self.bits, bool):
            raise CircuitError(f"bits {self.bits!r} is not an integer")
        if self.bits < 0 or self.bits >> self.width:
            raise CircuitError(
                f"bits {self.bits:#x} out of range for width {self.width}"
            )

    @classmethod
    def zeros(cls, width: int) -> "BasisState":
        return cls(0, width)

    def bit(self, qubit: int) -> int:
        if qubit < 0 or qubit >= self.width:
            raise CircuitError(f"qubit {qubit} out of range for width {self.width}")
        return (self.bits >> qubit) & 1

    def with_bit_flipped(self, qubit: int) -> "BasisState":
        if qubit < 0 or qubit >= self.width:
            raise CircuitError(f"qubit {qubit} out of range for width {self.width}")
        return BasisState(self.bits ^ (1 << qubit), self.width)

    def hamming_distance(self, other: "BasisState") -> int:
        if self.width != other.width:
            raise CircuitError(
                f"width mismatch: {self.width} vs {other.width}"
            )
        return (self.bits ^ other.bits).bit_count()


@dataclass(frozen=True)
class AmplitudeQuery:
    """One amplitude question: <end| C |start> for a circuit C."""

    start: BasisState
    end: BasisState

    def __post_init__(self):
        if self.start.width != self.end.width:
            raise CircuitError(
                "query start and end states have different widths: "
                f"{self.start.width} vs {self.end.width}"
            )

    @property
    def width(self) -> int:
        return self.start.width


# Readable constructors for building circuits in code.
def h(q: int) -> Gate:
    return Gate(GateKind.H, (q,))


def x(q: int) -> Gate:
    return Gate(GateKind.X, (q,))


def y(q: int) -> Gate:
    return Gate(GateKind.Y, (q,))


def z(q: int) -> Gate:
    return Gate(GateKind.Z, (q,))


def s(q: int) -> Gate:
    return Gate(GateKind.S, (q,))


def t(q: int) -> Gate:
    return Gate(GateKind.T, (q,))


def p(q: int, theta: float) -> Gate:
    return Gate(GateKind.P, (q,), theta)


def cp(control: int, target: int, theta: float) -> Gate:
    return Gate(GateKind.CP, (control, target), theta)


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


def ccx(control1: int, control2: int, target: int) -> Gate:
    return Gate(GateKind.CCX, (control1, control2, target))


def identity(q: int) -> Gate:
    return Gate(GateKind.I, (q,))
