"""Rewriting circuits so they simulate the mirror of their gate.

Let ``C = U_d(pi/4, pi/4, pi/4) = e^{i pi/4} SWAP``.  For a circuit
``W = A G_i B`` where ``G_i`` is one application, ``C W = (S A S) (C G_i) B``
with ``S`` the qubit swap.  Replacing ``G_i`` by ``C G_i`` and swapping the
qubits of everything applied afterwards therefore turns ``W`` into ``C W``,
the mirror gate, exactly.  Gates of the form ``U_d`` are swap symmetric, so
only the local layers change.
"""

import numpy as np

from ..canonical import kak
from ..errors import IndexOutOfRangeError
from ..matcore import canonical_gate, check_unitary
from .circuit import CONTROLLED, MIRROR_CONTROLLED, BaseGate, _assemble, retarget
from .controlled import controlled_for_class, universal_budget

PI4 = np.pi / 4
MIRROR_MATRIX = canonical_gate(PI4, PI4, PI4)


def mirror_gate(gate):
    """``(base, phase)`` with ``e^{i phase} base.matrix() = C gate.matrix()``.

    Controlled and mirror-controlled gates map onto each other by name; the
    scalar ``C C = i`` shows up as a phase of ``pi/2``.
    """
    if gate.kind == CONTROLLED:
        return BaseGate.mirror_controlled(gate.param), 0.0
    if gate.kind == MIRROR_CONTROLLED:
        return BaseGate.controlled(gate.param), np.pi / 2
    label = f"mirror of {gate.describe()}"
    return BaseGate.custom(MIRROR_MATRIX @ gate.matrix(), label=label), 0.0


def mirror_rewrite(circuit, index):
    """Circuit evaluating to ``C`` times the evaluation of ``circuit``.

    The application at ``index`` becomes its mirror and every layer and gate
    after it is conjugated by the qubit swap.

    Raises:
        IndexOutOfRangeError: unless ``0 <= index < circuit.n``.
    """
    index = int(index)
    if not 0 <= index < circuit.n:
        raise IndexOutOfRangeError(f"index {index} outside 0..{circuit.n - 1}")
    gates = circuit.gates()
    mirrored, extra = mirror_gate(gates[index])
    gates = gates[:index] + [mirrored] + [g.swapped() for g in gates[index + 1:]]
    layers = list(circuit.layers[:index + 1]) + [layer.swapped() for layer in circuit.layers[index + 1:]]
    base = mirrored if index == 0 else circuit.base
    return _assemble(base, layers, circuit.phase + extra, gates)


def mirror_all(circuit):
    """Rewrite every application; the result evaluates to ``C^n`` times the original."""
    for i in range(circuit.n):
        circuit = mirror_rewrite(circuit, i)
    return circuit


def synth_mirror_universal(target, gamma):
    """Universal circuit over ``U_d(pi/4, pi/4, pi/4 + gamma/2)``, the mirror of ``G(gamma)``.

    A controlled-gate circuit for ``C^{-n} target`` (up to locals) is built
    first and every application is then mirrored.  Since ``C^2 = i``, only
    the parity of ``n`` matters: odd budgets synthesize the mirror of the
    target.
    """
    target = check_unitary(target, 4, name="target")
    n = universal_budget(gamma)
    inner = MIRROR_MATRIX @ target if n % 2 else target
    k = kak(inner)
    circuit, _ = controlled_for_class(k.coords, gamma, n)
    return retarget(mirror_all(circuit), target)


__all__ = ["MIRROR_MATRIX", "mirror_gate", "mirror_rewrite", "mirror_all", "synth_mirror_universal"]
