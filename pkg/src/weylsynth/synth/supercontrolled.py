"""Circuits over the super controlled gate ``U_d(pi/4, alpha2, 0)``.

Three applications reach every two-qubit gate and two reach every
``U_d(h1, h2, 0)``.  The constructions go through three gates ``U_A``,
``U_B`` and ``U_C``, each locally equivalent to the base gate and defined by
where they send a fixed input basis.  Unlike the controlled-gate
constructions, ``(h1, h2, h3)`` here are the coordinates themselves: the
target is ``U_d(h1, h2, h3)``.
"""

from functools import lru_cache

import numpy as np

from ..errors import DomainError
from ..matcore import I2, MAGIC, LocalLayer, dagger, rot_z
from .circuit import BaseGate, Circuit, dressing


def _check_alpha(alpha2):
    if not -1e-12 <= alpha2 <= np.pi / 4 + 1e-12:
        raise DomainError(f"super controlled gate needs 0 <= alpha2 <= pi/4, got {alpha2}")


def build_uabc(alpha2):
    """The gates ``(U_A, U_B, U_C)`` for a given ``alpha2``.

    ``U_A`` sends the magic basis ``|Phi_1..4>`` to ``|00>, |01>, |10>,
    e^{4 i alpha2} |11>``.  ``U_B`` sends ``|00>, |01>, |10>, |11>`` to
    ``(c|0> + s|1>)|0>, |01>, e^{8 i alpha2}|11>, (s|0> - c|1>)|0>`` with
    ``c, s = cos 2 alpha2, sin 2 alpha2``.  ``U_C`` sends
    ``(c|0> + s|1>)|0>, |01>, |11>, (s|0> - c|1>)|0>`` to
    ``|Phi_1>, |Phi_2>, e^{-4 i alpha2}|Phi_3>, |Phi_4>``.
    """
    _check_alpha(alpha2)
    c, s = np.cos(2 * alpha2), np.sin(2 * alpha2)
    ua = np.diag([1, 1, 1, np.exp(4j * alpha2)]) @ dagger(MAGIC)

    ub = np.zeros((4, 4), dtype=complex)
    ub[:, 0] = [c, 0, s, 0]
    ub[:, 1] = [0, 1, 0, 0]
    ub[:, 2] = [0, 0, 0, np.exp(8j * alpha2)]
    ub[:, 3] = [s, 0, -c, 0]

    inputs = np.zeros((4, 4), dtype=complex)
    inputs[:, 0] = [c, 0, s, 0]
    inputs[:, 1] = [0, 1, 0, 0]
    inputs[:, 2] = [0, 0, 0, 1]
    inputs[:, 3] = [s, 0, -c, 0]
    outputs = MAGIC * np.array([1, 1, np.exp(-4j * alpha2), 1])
    uc = outputs @ dagger(inputs)
    return ua, ub, uc


@lru_cache(maxsize=64)
def _dressings(alpha2):
    base = BaseGate.supercontrolled(alpha2)
    ua, ub, uc = build_uabc(alpha2)
    g = base.matrix()
    return {
        "A": dressing(ua, g),
        "B": dressing(ub, g),
        "C": dressing(uc, g),
        "A_inv": dressing(dagger(ua), g),
    }


def _chain(base, blocks, middles, phase=0.0):
    """Circuit for ``blocks[-1] middles[-1] ... middles[0] blocks[0]``.

    Each block is a ``(phase, post, pre)`` dressing of the base gate.
    """
    layers = [blocks[0][2]]
    total = phase + blocks[0][0]
    for mid, (ph, post, pre), (_, prev_post, _) in zip(middles, blocks[1:], blocks[:-1]):
        layers.append(pre @ mid @ prev_post)
        total += ph
    layers.append(blocks[-1][1])
    return Circuit(base, layers, total)


def synth_supercontrolled2(h1, h2, alpha2):
    """Two applications realizing ``U_d(h1, h2, 0)`` as ``U_A^-1 (Rz x Rz) U_A``."""
    d = _dressings(float(alpha2))
    middle = LocalLayer(rot_z(2 * h1), rot_z(-2 * h2))
    return _chain(BaseGate.supercontrolled(alpha2), [d["A"], d["A_inv"]], [middle])


def synth_supercontrolled3(h1, h2, h3, alpha2):
    """Three applications realizing ``U_d(h1, h2, h3)``.

    The product is ``e^{-2 i alpha2} U_C (1 x Rz) U_B (Rz x Rz) U_A``; with
    the scalar taken at ``alpha2`` the result matches the target including
    global phase.
    """
    d = _dressings(float(alpha2))
    first = LocalLayer(rot_z(2 * (h1 + 2 * alpha2)), rot_z(-2 * h2))
    second = LocalLayer(I2, rot_z(2 * h3))
    return _chain(BaseGate.supercontrolled(alpha2), [d["A"], d["B"], d["C"]], [first, second],
                  phase=-2 * alpha2)
