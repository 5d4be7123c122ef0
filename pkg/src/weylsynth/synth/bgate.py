"""Two applications of ``U_d(a1/2, 0, a3/2)`` producing the B gate ``U_d(pi/4, pi/8, 0)``."""

import numpy as np

from ..canonical import axis_swap_clifford
from ..errors import InfeasibleError
from ..matcore import LocalLayer, canonical_gate, dagger, rot_y
from .circuit import BaseGate, Circuit
from .compose import solve_locals_t5

B_COORDS = (np.pi / 4, np.pi / 8, 0.0)


def b_gate():
    return canonical_gate(*B_COORDS)


def t7_feasible(a1, a3, tol=1e-12):
    """Whether ``cos(2a1 + 2a3) <= -1/sqrt(2)`` and ``cos(2a1 - 2a3) <= 1/sqrt(2)``."""
    bound = 1 / np.sqrt(2)
    return bool(np.cos(2 * a1 + 2 * a3) <= -bound + tol and np.cos(2 * a1 - 2 * a3) <= bound + tol)


def synth_b_from_t7(a1, a3):
    """Circuit ``U1 (Ry(s1) x Ry(s2)) U2`` locally equivalent to the B gate.

    ``U1 = U_d(a1/2, 0, a3/2)`` is the base gate.  ``U2 = U_d(a3/2, 0, a1/2)``
    is the same gate with the x and z axes exchanged by a Clifford on each
    qubit.  The rotation angles make the composition land on
    ``x + y = 3 pi/4`` and ``x - y = pi/4``.
    """
    if not t7_feasible(a1, a3):
        raise InfeasibleError(
            f"(a1, a3) = ({a1}, {a3}) fails cos(2a1+2a3) ≤ −1/√2 or cos(2a1−2a3) ≤ 1/√2")
    s1, s2 = solve_locals_t5((a1, 0.0, a3), (a3, 0.0, a1), 3 * np.pi / 4, np.pi / 4)
    u1 = canonical_gate(a1 / 2, 0.0, a3 / 2)
    base = BaseGate.custom(u1, label=f"U_d({a1 / 2:.6g}, 0, {a3 / 2:.6g})")
    v = axis_swap_clifford(0, 2)
    vd = dagger(v)
    # U2 = (V^dag x V^dag) U1 (V x V)
    layers = [LocalLayer(v, v), LocalLayer(rot_y(s1) @ vd, rot_y(s2) @ vd), LocalLayer.identity()]
    return Circuit(base, layers)
