"""Synthesis of arbitrary two-qubit gates over a given base gate."""

import numpy as np

from ..canonical import kak, local_relation, weyl_coordinates
from ..errors import UnsupportedBaseError
from ..matcore import check_unitary
from .circuit import CONTROLLED, CUSTOM, MIRROR_CONTROLLED, SUPERCONTROLLED, BaseGate, Circuit
from .controlled import controlled_for_class, universal_budget
from .mirror import synth_mirror_universal
from .supercontrolled import synth_supercontrolled3

PI4 = np.pi / 4
CLASS_TOL = 1e-9


def recognize_base(base, tol=CLASS_TOL):
    """A named base gate locally equivalent to ``base``, or ``None``.

    Named gates are returned as is.  A custom matrix is matched by its
    chamber coordinates: ``(g/2, 0, 0)`` is controlled, ``(pi/4, a, 0)`` is
    super controlled and ``(pi/4, pi/4, pi/4 - g/2)`` is mirror controlled.
    """
    if base.kind != CUSTOM:
        return base
    c1, c2, c3 = weyl_coordinates(base.custom_matrix)
    if abs(c2) <= tol and abs(c3) <= tol and c1 > tol:
        return BaseGate.controlled(min(2 * c1, np.pi / 2))
    if abs(c1 - PI4) <= tol and abs(c3) <= tol:
        return BaseGate.supercontrolled(min(c2, PI4))
    if abs(c1 - PI4) <= tol and abs(c2 - PI4) <= tol and c3 < PI4 - tol:
        return BaseGate.mirror_controlled(min(np.pi / 2 - 2 * c3, np.pi / 2))
    return None


def rebase(circuit, base, tol=1e-7):
    """The same operator written with every application replaced by ``base``.

    Each slot gate ``G_i`` is written as ``e^{i phi} P G' Q`` with ``G'`` the
    new base and the local factors are merged into the neighbouring layers.

    Raises:
        UnsupportedBaseError: if some slot gate is not locally equivalent to ``base``.
    """
    new = base.matrix()
    layers = list(circuit.layers)
    phase = circuit.phase
    for i, gate in enumerate(circuit.gates()):
        try:
            phi, post, pre = local_relation(gate.matrix(), new, tol)
        except ValueError as exc:
            raise UnsupportedBaseError(
                f"slot {i} holds {gate.describe()}, not equivalent to {base.describe()}") from exc
        layers[i] = pre @ layers[i]
        layers[i + 1] = layers[i + 1] @ post
        phase += phi
    return Circuit(base, layers, phase)


def synth_universal(target, base):
    """Circuit over ``base`` evaluating to ``target`` up to global phase.

    Super controlled bases always use three applications.  Controlled bases
    use :func:`universal_budget` applications.  Mirror-controlled bases are
    handled by mirroring a controlled-gate circuit, and custom bases are
    recognized by class and rebased.

    Raises:
        UnsupportedBaseError: for a custom base of no recognized class.
    """
    target = check_unitary(target, 4, name="target")
    if base.kind == CUSTOM:
        named = recognize_base(base)
        if named is None:
            raise UnsupportedBaseError(
                f"base with coordinates {tuple(weyl_coordinates(base.custom_matrix))} "
                "is not controlled, super controlled or mirror controlled")
        return rebase(synth_universal(target, named), base)
    if base.kind == MIRROR_CONTROLLED:
        return synth_mirror_universal(target, base.param)
    k = kak(target)
    if base.kind == SUPERCONTROLLED:
        inner = synth_supercontrolled3(*k.coords, base.param)
    elif base.kind == CONTROLLED:
        inner, _ = controlled_for_class(k.coords, base.param, universal_budget(base.param))
    else:
        raise UnsupportedBaseError(f"unsupported base {base!r}")
    return inner.with_outer(k.post, k.pre, k.phase)


__all__ = ["recognize_base", "rebase", "synth_universal"]
