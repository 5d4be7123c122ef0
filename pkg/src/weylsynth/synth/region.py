"""Reachable coordinate regions for circuits over controlled gates.

Points are doubled chamber coordinates ``h = 2 c``; the gate simulated is
``U_d(h1/2, h2/2, h3/2)``.
"""

from dataclasses import dataclass

import numpy as np

from ..canonical import weyl_normalize
from ..errors import DomainError, OutOfRegionError, UnsupportedBaseError
from .circuit import CONTROLLED
from .controlled import REGION_TOL, synth_controlled_t6

HALF_PI = np.pi / 2


@dataclass(frozen=True)
class Constraint:
    """``coeffs . h <= bound`` (or ``==`` when ``equality``).

    Constraints that share a ``label`` jointly express a single inequality
    such as ``h1+h2+|h3| <= n gamma``.
    """

    coeffs: tuple
    bound: float
    label: str
    equality: bool = False

    def slack(self, h):
        """Non-negative when satisfied; for equalities, minus the absolute gap."""
        value = float(np.dot(self.coeffs, h))
        if self.equality:
            return -abs(value - self.bound)
        return self.bound - value

    def holds(self, h, tol=REGION_TOL):
        return self.slack(h) >= -tol


def _chamber(include_h3_zero=False):
    out = [
        Constraint((0, -1, 1), 0.0, "|h3| ≤ h2"),
        Constraint((0, -1, -1), 0.0, "|h3| ≤ h2"),
        Constraint((-1, 1, 0), 0.0, "h2 ≤ h1"),
        Constraint((1, 0, 0), HALF_PI, "h1 ≤ π/2"),
    ]
    if include_h3_zero:
        out = [Constraint((0, -1, 0), 0.0, "0 ≤ h2"), out[2], out[3],
               Constraint((0, 0, 1), 0.0, "h3 = 0", equality=True)]
    return out


def normalize_point(h):
    """Map a doubled coordinate triple to its chamber representative."""
    c = weyl_normalize(np.asarray(h, dtype=float) / 2)[0]
    return tuple(2 * x for x in c)


@dataclass(frozen=True)
class Region:
    """Coordinates reachable with ``n`` applications of a controlled gate.

    ``constraints`` is the necessary condition; a point outside cannot be
    simulated.  ``sufficiency`` is ``"full"`` when every point inside has a
    construction and ``"partial"`` when only a subregion is covered
    constructively (see :meth:`constructive`).
    """

    n: int
    gammas: tuple
    constraints: tuple
    sufficiency: str = "full"

    def labels(self):
        """Distinct inequality labels in order."""
        seen = []
        for c in self.constraints:
            if c.label not in seen:
                seen.append(c.label)
        return seen

    def _point(self, h, normalize):
        return normalize_point(h) if normalize else tuple(float(x) for x in h)

    def violations(self, h, normalize=True, tol=REGION_TOL):
        """Labels of the violated inequalities, most violated first."""
        p = self._point(h, normalize)
        worst = {}
        for c in self.constraints:
            s = c.slack(p)
            if s < -tol:
                worst[c.label] = min(worst.get(c.label, 0.0), s)
        return sorted(worst, key=worst.get)

    def contains(self, h, normalize=True, tol=REGION_TOL):
        return not self.violations(h, normalize, tol)

    def binding(self, h, normalize=True):
        """Label of the constraint with the least slack (the most violated one outside)."""
        p = self._point(h, normalize)
        return min(self.constraints, key=lambda c: c.slack(p)).label

    def constructive(self, h, normalize=True, tol=REGION_TOL):
        """Whether the package has a construction for ``h`` within this budget."""
        if not self.contains(h, normalize, tol):
            return False
        if self.sufficiency == "full":
            return True
        h1, h2, h3 = self._point(h, normalize)
        if abs(h3) <= tol:
            return True
        try:
            synth_controlled_t6(h1, h2, h3, self.gammas[0])
        except (OutOfRegionError, ValueError):
            return False
        return True

    def describe(self):
        return "; ".join(self.labels())


def _gamma_of(base):
    if getattr(base, "kind", None) != CONTROLLED:
        raise UnsupportedBaseError(f"reachable regions are defined for controlled gates, got {base!r}")
    return base.param


def reachable_region(base, n):
    """Necessary region for ``n`` applications of the controlled gate ``base``.

    Two applications give ``{0 <= h2 <= h1 <= pi/2, h3 = 0, h1+h2 <= 2 gamma}``,
    which is also sufficient.  Three or more give ``h1+h2+|h3| <= n gamma``
    inside the chamber; sufficient for ``n >= 4`` and for a subregion when
    ``n = 3``.
    """
    gamma = _gamma_of(base)
    n = int(n)
    if n < 2:
        raise DomainError(f"reachable_region needs n >= 2, got {n}")
    if n == 2:
        budget = [Constraint((1, 1, 0), 2 * gamma, "h1+h2 ≤ nγ")]
        return Region(n, (gamma,), tuple(budget + _chamber(include_h3_zero=True)))
    label = "h1+h2+|h3| ≤ nγ"
    budget = [Constraint((1, 1, 1), n * gamma, label), Constraint((1, 1, -1), n * gamma, label)]
    return Region(n, (gamma,), tuple(budget + _chamber()), "full" if n >= 4 else "partial")


def two_controlled_region(gamma1, gamma2):
    """Region of ``G(gamma1) L G(gamma2)`` with ``gamma2 <= gamma1``."""
    if not 0 < gamma2 <= gamma1 <= HALF_PI + 1e-12:
        raise DomainError("need 0 < gamma2 <= gamma1 <= pi/2")
    constraints = [
        Constraint((1, 1, 0), gamma1 + gamma2, "h1+h2 ≤ γ1+γ2"),
        Constraint((-1, 1, 0), -(gamma1 - gamma2), "γ1−γ2 ≤ h1−h2"),
    ] + _chamber(include_h3_zero=True)
    return Region(2, (gamma1, gamma2), tuple(constraints))


__all__ = ["Constraint", "Region", "normalize_point", "reachable_region", "two_controlled_region"]
