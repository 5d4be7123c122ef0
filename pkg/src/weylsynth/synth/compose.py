"""Composition law for two canonical gates joined by a layer of y-rotations.

For ``W = U_d(a/2) (Ry(s1) x Ry(s2)) U_d(b/2)`` the class of ``W`` is
``U_d(x/2, y/2, (a2 + b2)/2)`` with

    cos(x + y) = cos(a1 + a3) cos(b1 + b3) - cos(s1 - s2) sin(a1 + a3) sin(b1 + b3)
    cos(x - y) = cos(a1 - a3) cos(b1 - b3) - cos(s1 + s2) sin(a1 - a3) sin(b1 - b3)

The y-rotations commute with ``YY``, which is why the middle coordinates
simply add.

Both relations have the shape ``cos t = cos p cos q - cos s sin p sin q``.
Evaluating ``t`` or ``s`` through arccos loses half the digits near the ends
of the range (``arccos(1 - e) ~ sqrt(2 e)``), exactly where boundary targets
live, so both directions go through half-angle products and ``atan2``.
"""

from typing import NamedTuple

import numpy as np

from ..errors import InfeasibleError
from ..matcore import canonical_gate, rot_y, tensor

ARCCOS_TOL = 1e-9


class ComposeResult(NamedTuple):
    x: float
    y: float
    z: float

    @property
    def coords(self):
        """Raw canonical coordinates ``(x/2, y/2, z/2)``."""
        return (self.x / 2, self.y / 2, self.z / 2)


def _combined_angle(p, q, s):
    """``t`` in ``[0, pi]`` with ``cos t = cos p cos q - cos s sin p sin q``."""
    spq = np.sin(p) * np.sin(q)
    hs = np.sin(s / 2) ** 2
    hc = np.cos(s / 2) ** 2
    # pick the forms that add non-negative terms
    if spq >= 0:
        sin2 = np.sin((p - q) / 2) ** 2 + hc * spq
        cos2 = np.cos((p + q) / 2) ** 2 + hs * spq
    else:
        sin2 = np.sin((p + q) / 2) ** 2 - hs * spq
        cos2 = np.cos((p - q) / 2) ** 2 - hc * spq
    return 2 * float(np.arctan2(np.sqrt(max(sin2, 0.0)), np.sqrt(max(cos2, 0.0))))


def _joining_angle(p, q, t, tol):
    """``s`` in ``[0, pi]`` with ``cos t = cos p cos q - cos s sin p sin q``.

    Raises :class:`InfeasibleError` when no real ``s`` exists, i.e. when the
    implied ``cos s`` leaves ``[-1, 1]`` by more than ``tol``.
    """
    spq = np.sin(p) * np.sin(q)
    if abs(spq) < 1e-14:
        gap = np.cos(p) * np.cos(q) - np.cos(t)
        if abs(gap) > tol:
            raise InfeasibleError(
                f"target {t!r} unreachable: the rotation has no effect and cos differs by {gap:.3e}")
        return 0.0
    # sin^2(s/2) and cos^2(s/2); they sum to one
    hs = np.sin((p + q + t) / 2) * np.sin((p + q - t) / 2) / spq
    hc = np.sin((t + p - q) / 2) * np.sin((t - p + q) / 2) / spq
    # cos s = hc - hs, so leaving [-1, 1] by tol means a half-square below -tol/2
    if hs < -tol / 2 or hc < -tol / 2:
        raise InfeasibleError(
            f"target {t!r} outside the reachable interval [{abs(p - q)!r}, {p + q!r}]")
    return 2 * float(np.arctan2(np.sqrt(max(hs, 0.0)), np.sqrt(max(hc, 0.0))))


def compose_t5(a, b, s1, s2):
    """Class of ``U_d(a/2) (Ry(s1) x Ry(s2)) U_d(b/2)`` as ``(x, y, z)``.

    ``x + y`` and ``x - y`` come out on the ``[0, pi]`` branch and
    ``z = a2 + b2``.
    """
    a1, a2, a3 = a
    b1, b2, b3 = b
    total = _combined_angle(a1 + a3, b1 + b3, s1 - s2)
    diff = _combined_angle(a1 - a3, b1 - b3, s1 + s2)
    return ComposeResult((total + diff) / 2, (total - diff) / 2, a2 + b2)


def t5_product(a, b, s1, s2):
    """The explicit matrix ``U_d(a/2) (Ry(s1) x Ry(s2)) U_d(b/2)``."""
    return (canonical_gate(*(np.asarray(a, dtype=float) / 2)) @ tensor(rot_y(s1), rot_y(s2))
            @ canonical_gate(*(np.asarray(b, dtype=float) / 2)))


def solve_locals_t5(a, b, target_sum, target_diff, tol=ARCCOS_TOL):
    """Rotation angles ``(s1, s2)`` steering the composition to given targets.

    Solves for ``compose_t5(a, b, s1, s2)`` having ``x + y = target_sum`` and
    ``x - y = target_diff`` (both in ``[0, pi]``).  ``s1 - s2`` and
    ``s1 + s2`` are returned on the ``[0, pi]`` branch.
    """
    a1, _, a3 = a
    b1, _, b3 = b
    minus = _joining_angle(a1 + a3, b1 + b3, target_sum, tol)
    plus = _joining_angle(a1 - a3, b1 - b3, target_diff, tol)
    return (plus + minus) / 2, (plus - minus) / 2
