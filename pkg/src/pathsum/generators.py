"""Seeded generators for the benchmark circuit families.

All randomness comes from SplitMix64, so a (family, n, seed) triple denotes
the same circuit everywhere and forever.  Every family is sandwich-shaped:
a branching block, a middle layer of random Toffolis, and a second branching
block; only the branching blocks differ between families.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._rng import SplitMix64
from .circuit import Circuit, CircuitError, Gate, ccx, cp, h, make_circuit


def gen_qft(qubits) -> list[Gate]:
    """Quantum Fourier transform on the given qubits, no terminal swaps.

    The standard cascade: H on each qubit, then controlled phases from every
    later qubit, where a control k positions away contributes 2*pi/2**(k+1).
    """
    order = list(qubits)
    if len(order) != len(set(order)):
        raise CircuitError(f"QFT qubit list has duplicates: {order}")
    if not order:
        raise CircuitError("QFT needs at least one qubit")
    gates = []
    for i, target in enumerate(order):
        gates.append(h(target))
        for k, control in enumerate(order[i + 1:], start=2):
            gates.append(cp(control, target, 2.0 * math.pi / 2.0**k))
    return gates


def _random_toffolis(rng: SplitMix64, n: int, count: int) -> list[Gate]:
    """``count`` Toffolis on distinct qubit triples; first two drawn are controls."""
    gates = []
    for _ in range(count):
        c1, c2, target = rng.distinct(n, 3)
        gates.append(ccx(c1, c2, target))
    return gates


def gen_layered_hadamard(n: int, seed: int) -> Circuit:
    """H on every qubit, n random Toffolis, H on every qubit again."""
    if n < 3:
        raise CircuitError(f"layered-Hadamard circuits need n >= 3, got {n}")
    rng = SplitMix64(seed)
    gates = [h(q) for q in range(n)]
    gates.extend(_random_toffolis(rng, n, n))
    gates.extend(h(q) for q in range(n))
    return make_circuit(n, gates)


def gen_layered_qft(n: int, seed: int) -> Circuit:
    """QFT on every qubit, n random Toffolis, QFT on every qubit again."""
    if n < 3:
        raise CircuitError(f"layered-QFT circuits need n >= 3, got {n}")
    rng = SplitMix64(seed)
    gates = gen_qft(range(n))
    gates.extend(_random_toffolis(rng, n, n))
    gates.extend(gen_qft(range(n)))
    return make_circuit(n, gates)


@dataclass(frozen=True)
class HspLayout:
    """Register split for the hidden-subgroup-style family."""

    a_qubits: range
    b_qubits: range


def hsp_layout(n: int, a_size: int | None = None) -> HspLayout:
    """First ``a_size`` qubits (default floor(2n/3)) form the a register."""
    if a_size is None:
        a_size = (2 * n) // 3
    if a_size < 2 or a_size > n - 1:
        raise CircuitError(
            f"hsp a-register size must be in [2, {n - 1}] for n={n}, got {a_size}"
        )
    return HspLayout(range(a_size), range(a_size, n))


def gen_hsp_standard(n: int, seed: int, a_size: int | None = None) -> Circuit:
    """H on the a register, n Toffolis from a into b, then QFT on a.

    Each Toffoli draws two distinct controls from a and a target from b;
    repeats across Toffolis are allowed.
    """
    if n < 5:
        raise CircuitError(f"hsp circuits need n >= 5, got {n}")
    layout = hsp_layout(n, a_size)
    a = layout.a_qubits
    b = layout.b_qubits
    rng = SplitMix64(seed)
    gates = [h(q) for q in a]
    for _ in range(n):
        c1, c2 = rng.distinct(len(a), 2)
        target = rng.below(len(b))
        gates.append(ccx(a[c1], a[c2], b[target]))
    gates.extend(gen_qft(a))
    return make_circuit(n, gates)
