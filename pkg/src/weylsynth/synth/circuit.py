"""Simulation circuits: local layers alternating with applications of a base gate."""

from dataclasses import dataclass

import numpy as np

from ..canonical import local_relation
from ..errors import DomainError, MalformedCircuitError
from ..matcore import (
    SWAP,
    UNITARY_TOL,
    LocalLayer,
    canonical_gate,
    check_unitary,
    controlled_gate,
    distance_up_to_phase,
    phase_aligned_error,
)

PI4 = np.pi / 4

CONTROLLED = "controlled"
SUPERCONTROLLED = "supercontrolled"
MIRROR_CONTROLLED = "mirror_controlled"
CUSTOM = "custom"

KINDS = (CONTROLLED, SUPERCONTROLLED, MIRROR_CONTROLLED, CUSTOM)


@dataclass(frozen=True, eq=False)
class BaseGate:
    """The entangling gate a circuit is built from.

    Use the constructors :meth:`controlled`, :meth:`supercontrolled`,
    :meth:`mirror_controlled` and :meth:`custom` rather than calling the
    class directly.
    """

    kind: str
    param: float = None
    custom_matrix: np.ndarray = None
    label: str = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown base gate kind {self.kind!r}")
        if self.kind == CUSTOM:
            m = check_unitary(self.custom_matrix, 4, name="custom base gate")
            m.setflags(write=False)
            object.__setattr__(self, "custom_matrix", m)
        elif self.param is None or not np.isfinite(self.param):
            raise ValueError(f"{self.kind} base gate needs a finite parameter")
        else:
            object.__setattr__(self, "param", float(self.param))

    @classmethod
    def controlled(cls, gamma):
        """``exp(i gamma/2 ZZ)`` with ``0 < gamma <= pi/2``."""
        if not 0 < gamma <= np.pi / 2 + 1e-12:
            raise DomainError(f"controlled gate needs 0 < gamma <= pi/2, got {gamma}")
        return cls(CONTROLLED, gamma)

    @classmethod
    def supercontrolled(cls, alpha2):
        """``U_d(pi/4, alpha2, 0)`` with ``0 <= alpha2 <= pi/4``."""
        if not -1e-12 <= alpha2 <= PI4 + 1e-12:
            raise DomainError(f"super controlled gate needs 0 <= alpha2 <= pi/4, got {alpha2}")
        return cls(SUPERCONTROLLED, alpha2)

    @classmethod
    def mirror_controlled(cls, gamma):
        """``U_d(pi/4, pi/4, pi/4 + gamma/2)``, the mirror of ``controlled(gamma)``."""
        return cls(MIRROR_CONTROLLED, gamma)

    @classmethod
    def custom(cls, matrix, label=None):
        return cls(CUSTOM, custom_matrix=matrix, label=label)

    def matrix(self):
        if self.kind == CONTROLLED:
            return controlled_gate(self.param)
        if self.kind == SUPERCONTROLLED:
            return canonical_gate(PI4, self.param, 0.0)
        if self.kind == MIRROR_CONTROLLED:
            return canonical_gate(PI4, PI4, PI4 + self.param / 2)
        return np.array(self.custom_matrix)

    def is_swap_symmetric(self):
        return self.kind != CUSTOM or np.allclose(SWAP @ self.custom_matrix @ SWAP,
                                                  self.custom_matrix, atol=1e-14)

    def swapped(self):
        """The gate with qubit roles exchanged."""
        if self.is_swap_symmetric():
            return self
        return BaseGate.custom(SWAP @ self.custom_matrix @ SWAP, label=self.label)

    def same_as(self, other):
        if self.kind != other.kind:
            return False
        if self.kind == CUSTOM:
            return np.array_equal(self.custom_matrix, other.custom_matrix)
        return self.param == other.param

    def describe(self):
        if self.kind == CUSTOM:
            return self.label or "custom"
        return f"{self.kind}({self.param:.17g})"

    def __repr__(self):
        return f"BaseGate<{self.describe()}>"


@dataclass(frozen=True, eq=False)
class Circuit:
    """``e^{i phase} L_n G L_{n-1} ... G L_0``, with ``L_0`` applied first.

    ``overrides``, when given, has one entry per application; a non-``None``
    entry replaces ``base`` in that slot.  Application ``i`` sits between
    ``layers[i]`` and ``layers[i + 1]``.
    """

    base: BaseGate
    layers: tuple
    phase: float = 0.0
    overrides: tuple = None

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise MalformedCircuitError("a circuit needs at least one local layer")
        for layer in layers:
            if not isinstance(layer, LocalLayer):
                raise MalformedCircuitError(f"layers must be LocalLayer, got {type(layer).__name__}")
        object.__setattr__(self, "layers", layers)
        if self.overrides is not None:
            overrides = tuple(self.overrides)
            if len(overrides) != len(layers) - 1:
                raise MalformedCircuitError(
                    f"{len(overrides)} overrides for {len(layers) - 1} applications")
            if all(o is None for o in overrides):
                overrides = None
            object.__setattr__(self, "overrides", overrides)
        object.__setattr__(self, "phase", float(self.phase))

    @property
    def n(self):
        return len(self.layers) - 1

    def gate(self, i):
        if self.overrides is not None and self.overrides[i] is not None:
            return self.overrides[i]
        return self.base

    def gates(self):
        return [self.gate(i) for i in range(self.n)]

    def evaluate(self):
        return evaluate(self)

    def with_outer(self, post=None, pre=None, phase=0.0):
        """Absorb extra local layers on the outside: ``e^{i phase} post C pre``."""
        layers = list(self.layers)
        if pre is not None:
            layers[0] = layers[0] @ pre
        if post is not None:
            layers[-1] = post @ layers[-1]
        return Circuit(self.base, layers, self.phase + phase, self.overrides)

    def then(self, other):
        """The circuit applying ``self`` first and ``other`` second."""
        layers = list(self.layers[:-1]) + [other.layers[0] @ self.layers[-1]] + list(other.layers[1:])
        gates = self.gates() + other.gates()
        return _assemble(self.base, layers, self.phase + other.phase, gates)


def _assemble(base, layers, phase, gates):
    overrides = [None if g.same_as(base) else g for g in gates]
    return Circuit(base, layers, phase, overrides)


def evaluate(circuit, tol=UNITARY_TOL):
    """Matrix of ``circuit``; raises :class:`MalformedCircuitError` on bad layers."""
    for i, layer in enumerate(circuit.layers):
        if not layer.is_unitary(tol):
            raise MalformedCircuitError(f"layer {i} is not unitary")
    u = circuit.layers[0].matrix()
    for i in range(circuit.n):
        u = circuit.gate(i).matrix() @ u
        u = circuit.layers[i + 1].matrix() @ u
    return np.exp(1j * circuit.phase) * u


def retarget(circuit, target, tol=1e-7):
    """Dress ``circuit`` with outer local layers so it evaluates to ``target`` exactly.

    ``target`` must be locally equivalent to the circuit's evaluation.
    """
    target = check_unitary(target, 4, name="target")
    phase, post, pre = local_relation(target, evaluate(circuit), tol)
    return circuit.with_outer(post, pre, phase)


def dressing(block, gate_matrix, tol=1e-7):
    """``(phase, post, pre)`` with ``block = e^{i phase} post gate pre``."""
    return local_relation(block, gate_matrix, tol)


def residual(circuit, target):
    """Phase-insensitive distance between the circuit and ``target``."""
    return distance_up_to_phase(evaluate(circuit), target)


def max_error(circuit, target):
    return phase_aligned_error(evaluate(circuit), target)
