"""Circuits over the controlled gate ``G(gamma) = exp(i gamma/2 ZZ)``.

Targets are written as ``U_d(h1/2, h2/2, h3/2)``; with chamber coordinates
``c`` this means ``h = 2 c``, so ``0 <= |h3| <= h2 <= h1 <= pi/2``.
"""

import math

import numpy as np

from ..canonical import axis_swap_clifford, weyl_normalize
from ..errors import DomainError, InfeasibleError, OutOfRegionError
from ..matcore import LocalLayer, canonical_gate, dagger, rot_y
from .circuit import BaseGate, Circuit, retarget
from .compose import solve_locals_t5

REGION_TOL = 1e-9
HALF_PI = np.pi / 2

# V^dag ZZ V = XX (and back) for V (x) V with V a quarter turn about y
_XZ = axis_swap_clifford(0, 2)


def _check_gamma(gamma):
    if not 0 < gamma <= HALF_PI + 1e-12:
        raise DomainError(f"controlled gate needs 0 < gamma <= pi/2, got {gamma}")


def _require(conditions, what):
    """Raise :class:`OutOfRegionError` naming every failed ``(ok, text)`` pair."""
    failed = [text for ok, text in conditions if not ok]
    if failed:
        raise OutOfRegionError(f"{what}: violates " + "; ".join(failed), failed)


def universal_budget(gamma):
    """Applications of ``G(gamma)`` that suffice for any two-qubit gate: ``ceil(3 pi / (2 gamma))``."""
    if not np.isfinite(gamma) or not 0 < gamma <= HALF_PI + 1e-12:
        raise DomainError(f"universal_budget needs 0 < gamma <= pi/2, got {gamma}")
    return int(math.ceil(3 * np.pi / (2 * gamma) - 1e-9))


def _two_controlled(h1, h2, gamma1, gamma2):
    """``G(gamma1) (Ry(s1) x Ry(s2)) G(gamma2)`` with angles solved for class ``(h1, h2)``."""
    s1, s2 = solve_locals_t5((0.0, 0.0, gamma1), (0.0, 0.0, gamma2), h1 + h2, h1 - h2)
    layers = [LocalLayer.identity(), LocalLayer(rot_y(s1), rot_y(s2)), LocalLayer.identity()]
    base = BaseGate.controlled(gamma1)
    overrides = None
    if gamma1 != gamma2:
        overrides = [BaseGate.controlled(gamma2), None]
    return Circuit(base, layers, 0.0, overrides)


def _pair_class(raw, n, gamma):
    """Doubled chamber coordinates ``(h1, h2)`` of a raw ``(u, v, 0)``-type class."""
    c = weyl_normalize(raw)[0]
    if abs(c.c3) > REGION_TOL:
        raise OutOfRegionError(f"class {tuple(c)} is not reachable by controlled gates (c3 != 0)",
                               ["h3 = 0"])
    h1, h2 = 2 * c.c1, 2 * c.c2
    _require([(h1 + h2 <= n * gamma + REGION_TOL, "h1+h2 ≤ nγ")],
             f"class h=({h1:.6g}, {h2:.6g}) with n={n}, γ={gamma:.6g}")
    return h1, h2


def _peel_circuit(h1, h2, gamma, n):
    """Peeling recursion: ``U_d(h1/2, h2/2, 0) = U_d((h1-gamma)/2, h2/2, 0) exp(i gamma/2 XX)``."""
    if n == 2:
        return _two_controlled(h1, h2, gamma, gamma)
    rest = _controlled_to(((h1 - gamma) / 2, h2 / 2, 0.0), gamma, n - 1)
    xd = dagger(_XZ)
    # exp(i gamma/2 XX) = (V^dag x V^dag) G (V x V)
    peel = Circuit(BaseGate.controlled(gamma), [LocalLayer(_XZ, _XZ), LocalLayer(xd, xd)])
    return peel.then(rest)


def _controlled_to(raw, gamma, n):
    """``n`` applications of ``G(gamma)`` evaluating exactly to ``canonical_gate(*raw)``.

    ``raw`` must be locally equivalent to ``U_d(h1/2, h2/2, 0)`` with
    ``h1 + h2 <= n gamma`` after normalization.
    """
    h1, h2 = _pair_class(raw, n, gamma)
    return retarget(_peel_circuit(h1, h2, gamma, n), canonical_gate(*raw))


def synth_two_controlled(h1, h2, gamma1, gamma2):
    """Two controlled gates ``G(gamma1) L G(gamma2)`` realizing ``U_d(h1/2, h2/2, 0)`` exactly.

    Requires ``0 <= h2 <= h1 <= pi/2``, ``gamma1 - gamma2 <= h1 - h2`` and
    ``h1 + h2 <= gamma1 + gamma2`` with ``0 < gamma2 <= gamma1 <= pi/2``.
    """
    _check_gamma(gamma1)
    _check_gamma(gamma2)
    if gamma2 > gamma1:
        raise DomainError("synth_two_controlled expects gamma2 <= gamma1")
    t = REGION_TOL
    _require([
        (0 <= h2 + t, "0 ≤ h2"),
        (h2 <= h1 + t, "h2 ≤ h1"),
        (h1 <= HALF_PI + t, "h1 ≤ π/2"),
        (gamma1 - gamma2 <= h1 - h2 + t, "γ1−γ2 ≤ h1−h2"),
        (h1 + h2 <= gamma1 + gamma2 + t, "h1+h2 ≤ γ1+γ2"),
    ], "synth_two_controlled")
    circuit = _two_controlled(h1, h2, gamma1, gamma2)
    return retarget(circuit, canonical_gate(h1 / 2, h2 / 2, 0.0))


def synth_controlled_n(h1, h2, gamma, n):
    """``n`` applications of ``G(gamma)`` realizing ``U_d(h1/2, h2/2, 0)`` exactly.

    Requires ``0 <= h2 <= h1 <= pi/2``, ``h1 + h2 <= n gamma`` and ``n >= 2``.
    One application is peeled off as ``exp(i gamma/2 XX)`` at a time until
    two remain; if the budget exceeds what the target needs, the peeled
    remainder simply lands on the other side of zero and is reflected back.
    """
    _check_gamma(gamma)
    if n < 2:
        raise DomainError(f"synth_controlled_n needs n >= 2, got {n}")
    t = REGION_TOL
    _require([
        (0 <= h2 + t, "0 ≤ h2"),
        (h2 <= h1 + t, "h2 ≤ h1"),
        (h1 <= HALF_PI + t, "h1 ≤ π/2"),
        (h1 + h2 <= n * gamma + t, "h1+h2 ≤ nγ"),
    ], "synth_controlled_n")
    return _controlled_to((h1 / 2, h2 / 2, 0.0), gamma, n)


def synth_controlled_t4(h1, h2, h3, gamma, n):
    """``n >= 4`` applications of ``G(gamma)`` realizing ``U_d(h1/2, h2/2, h3/2)``.

    With ``m = ceil(n/3)`` the target splits into two commuting factors,
    ``exp(i/2 [(m gamma - |h3|) XX + h3 ZZ])`` built from ``m`` applications
    and ``exp(i/2 [(h1 - m gamma + |h3|) XX + h2 YY])`` from the other
    ``n - m``.
    """
    _check_gamma(gamma)
    if n < 4:
        raise DomainError(f"synth_controlled_t4 needs n >= 4, got {n}")
    t = REGION_TOL
    _require([
        (abs(h3) <= h2 + t, "|h3| ≤ h2"),
        (h2 <= h1 + t, "h2 ≤ h1"),
        (h1 <= HALF_PI + t, "h1 ≤ π/2"),
        (h1 + h2 + abs(h3) <= n * gamma + t, "h1+h2+|h3| ≤ nγ"),
    ], "synth_controlled_t4")
    m = math.ceil(n / 3)
    first = _controlled_to(((m * gamma - abs(h3)) / 2, 0.0, h3 / 2), gamma, m)
    second = _controlled_to(((h1 - m * gamma + abs(h3)) / 2, h2 / 2, 0.0), gamma, n - m)
    return first.then(second)


def t6_c1_interval(h1, h2, h3, gamma):
    """Feasible range for the intermediate coordinate ``c1`` of the 3-application construction."""
    s, d = h1 + h2, h1 - h2
    lo = max(gamma, s - gamma, d - gamma)
    hi = min(2 * gamma - abs(h3), np.pi - gamma, s + gamma, d + gamma)
    return lo, hi


def synth_controlled_t6(h1, h2, h3, gamma):
    """Three applications of ``G(gamma)`` realizing ``U_d(h1/2, h2/2, h3/2)``.

    Two applications build ``U_d(c1/2, h3/2, 0)``; the third is joined
    through a layer of y-rotations solved from the composition law.
    """
    _check_gamma(gamma)
    t = REGION_TOL
    cap = min(3 * gamma - abs(h3), np.pi)
    _require([
        (0 <= h1 - h2 + t, "0 ≤ h1−h2"),
        (h1 - h2 <= cap + t, "h1−h2 ≤ min(3γ−|h3|, π)"),
        (0 <= h1 + h2 + t, "0 ≤ h1+h2"),
        (h1 + h2 <= cap + t, "h1+h2 ≤ min(3γ−|h3|, π)"),
        (abs(h2) <= gamma + t, "|h2| ≤ γ"),
        (abs(h3) <= h2 + t, "|h3| ≤ h2"),
    ], "synth_controlled_t6")
    lo, hi = t6_c1_interval(h1, h2, h3, gamma)
    if lo > hi + t:
        raise InfeasibleError(f"empty c1 interval [{lo:.6g}, {hi:.6g}]")
    c1 = (lo + hi) / 2 if lo <= hi else lo
    pair = _controlled_to((c1 / 2, h3 / 2, 0.0), gamma, 2)
    s1, s2 = solve_locals_t5((c1, h3, 0.0), (0.0, 0.0, gamma), h1 + h2, h1 - h2)
    single = Circuit(BaseGate.controlled(gamma), [LocalLayer.identity(), LocalLayer(rot_y(s1), rot_y(s2))])
    return retarget(single.then(pair), canonical_gate(h1 / 2, h2 / 2, h3 / 2))


def controlled_for_class(coords, gamma, n=None):
    """Dispatch a chamber point to the construction matching the budget ``n``.

    ``n`` defaults to :func:`universal_budget`.  Returns ``(circuit, path)``
    where ``path`` names the construction used; the circuit evaluates
    exactly to ``canonical_gate(*coords)``.
    """
    h1, h2, h3 = (2 * x for x in coords)
    if n is None:
        n = universal_budget(gamma)
    if n < 2:
        raise DomainError(f"need at least 2 applications, got {n}")
    if n == 2:
        _require([(abs(h3) <= REGION_TOL, "h3 = 0"),
                  (h1 + h2 <= 2 * gamma + REGION_TOL, "h1+h2 ≤ nγ")],
                 "two applications")
        return synth_controlled_n(h1, h2, gamma, 2), "two-controlled"
    if n == 3:
        try:
            return synth_controlled_t6(h1, h2, h3, gamma), "three-controlled"
        except OutOfRegionError:
            # outside the three-application subregion; peeling still covers h3 = 0
            if abs(h3) > REGION_TOL:
                raise
        return synth_controlled_n(h1, h2, gamma, 3), "peeling"
    return synth_controlled_t4(h1, h2, h3, gamma, n), "split"


__all__ = [
    "synth_two_controlled",
    "synth_controlled_n",
    "synth_controlled_t4",
    "synth_controlled_t6",
    "t6_c1_interval",
    "universal_budget",
    "controlled_for_class",
]
