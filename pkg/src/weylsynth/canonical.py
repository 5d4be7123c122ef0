"""Canonical (KAK) decomposition of two-qubit gates.

Every two-qubit unitary factors as ``e^{i phase} (A1 x B1) U_d(c) (A0 x B0)``
with ``U_d(c) = exp(i (c1 XX + c2 YY + c3 ZZ))`` and ``c`` in the Weyl
chamber ``pi/4 >= c1 >= c2 >= |c3| >= 0``.  The coordinates ``c`` label the
local-equivalence class of the gate.
"""

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .matcore import (
    EQUAL_TOL,
    MAGIC,
    MAGIC_DAG,
    PAULIS,
    UNITARY_TOL,
    LocalLayer,
    canonical_gate,
    check_unitary,
    eigenphases,
    factor_local,
)

PI4 = np.pi / 4
PI2 = np.pi / 2

# c1 within this distance of pi/4 counts as lying on the face where
# (pi/4, c2, c3) ~ (pi/4, c2, -c3); there we pick c3 >= 0.
FACE_TOL = 1e-10

# Mixing coefficients for diagonalizing Re(M) + t Im(M).  Any generic t works;
# several are tried so an accidental eigenvalue collision of the mix cannot
# spoil the basis.
_MIX_COEFFS = (1.0, 0.5772156649, 2.7182818285, -1.4142135624, 0.3183098862, -4.6692016091)


class CanonicalCoords(NamedTuple):
    """Weyl-chamber coordinates ``(c1, c2, c3)`` in radians."""

    c1: float
    c2: float
    c3: float

    @property
    def h(self):
        """Doubled coordinates ``(2 c1, 2 c2, 2 c3)``, the ``h`` used by controlled-gate results."""
        return (2 * self.c1, 2 * self.c2, 2 * self.c3)

    def is_normalized(self, tol=1e-12):
        c1, c2, c3 = self
        return PI4 + tol >= c1 and c1 + tol >= c2 and c2 + tol >= abs(c3)

    def max_diff(self, other):
        return float(max(abs(x - y) for x, y in zip(self, other)))


@dataclass(frozen=True)
class KakDecomposition:
    phase: float
    pre: LocalLayer
    coords: CanonicalCoords
    post: LocalLayer

    def matrix(self):
        return (np.exp(1j * self.phase) * self.post.matrix()
                @ canonical_gate(*self.coords) @ self.pre.matrix())

    def reconstruction_error(self, u):
        return float(np.max(np.abs(self.matrix() - np.asarray(u))))


@dataclass(frozen=True)
class LocalInvariant:
    """Eigenphases of ``M = U_m^T U_m`` for the determinant-one rescaling of a gate.

    ``U_m`` is the gate in the magic basis.  The phases are sorted and lie in
    ``(-pi, pi]``; they sum to zero modulo ``2 pi``.  The determinant-one
    rescaling is fixed only up to a fourth root of unity, which flips every
    eigenvalue's sign, so comparisons are made modulo that sign.
    """

    phases: tuple

    def distance(self, other):
        z1 = np.exp(1j * np.array(self.phases))
        z2 = np.exp(1j * np.array(other.phases))
        best = np.inf
        for sign in (1, -1):
            for perm in itertools.permutations(range(4)):
                best = min(best, float(np.max(np.abs(z1 - sign * z2[list(perm)]))))
        return best

    def matches(self, other, tol=EQUAL_TOL):
        return self.distance(other) <= tol


# --- Weyl normalization -------------------------------------------------------

_I2 = np.eye(2, dtype=complex)


def axis_swap_clifford(i, j):
    """SU(2) Clifford ``V`` with ``V^dag s_i V = +-s_j`` (and vice versa).

    It is the quarter turn ``exp(-i pi/4 s_k)`` about the third axis.
    """
    k = 3 - i - j
    return (np.cos(PI4) * _I2 - 1j * np.sin(PI4) * PAULIS[k])


class _Normalizer:
    """Tracks ``U_d(raw) = e^{i phase} post U_d(c) pre`` while ``c`` is rewritten."""

    def __init__(self, raw):
        self.c = [float(x) for x in raw]
        self.post = LocalLayer.identity()
        self.pre = LocalLayer.identity()
        self.phase = 0.0

    def shift(self, j, k):
        """``c_j -> c_j - k pi/2`` using ``U_d(pi/2 e_j) = i s_j s_j``."""
        if k == 0:
            return
        self.c[j] -= k * PI2
        # (i s_j s_j)^k = e^{-i k pi/2} (i s_j)^k x (i s_j)^k, and (i s)^2 = -1
        if k % 2:
            p = 1j * PAULIS[j]
            self.pre = LocalLayer(p, p) @ self.pre
        self.phase -= k * PI2

    def swap(self, i, j):
        v = axis_swap_clifford(i, j)
        vd = v.conj().T
        self.post = self.post @ LocalLayer(vd, vd)
        self.pre = LocalLayer(v, v) @ self.pre
        self.c[i], self.c[j] = self.c[j], self.c[i]

    def flip(self, i, j):
        """Negate ``c_i`` and ``c_j`` by conjugating qubit A with the third Pauli."""
        k = 3 - i - j
        w = 1j * PAULIS[k]
        self.post = self.post @ LocalLayer(w.conj().T, _I2)
        self.pre = LocalLayer(w, _I2) @ self.pre
        self.c[i] = -self.c[i]
        self.c[j] = -self.c[j]


def weyl_normalize(raw, face_tol=FACE_TOL):
    """Move raw coordinates into the Weyl chamber.

    Returns ``(coords, post, pre, phase)`` such that
    ``canonical_gate(*raw) == e^{i phase} post.matrix() @ canonical_gate(*coords) @ pre.matrix()``.
    Only pi/2 shifts, axis permutations and paired sign flips are used, each
    realized by Pauli or Clifford single-qubit gates of unit determinant.
    """
    nz = _Normalizer(raw)
    for j in range(3):
        nz.shift(j, int(np.floor((nz.c[j] + PI4) / PI2)))

    # order by magnitude, largest first
    for i, j in ((0, 1), (1, 2), (0, 1)):
        if abs(nz.c[i]) < abs(nz.c[j]):
            nz.swap(i, j)

    c1, c2, _ = nz.c
    if c1 < 0 and c2 < 0:
        nz.flip(0, 1)
    elif c1 < 0:
        nz.flip(0, 2)
    elif c2 < 0:
        nz.flip(1, 2)

    if nz.c[0] > PI4 - face_tol and nz.c[2] < 0:
        nz.shift(0, 1)
        nz.flip(0, 2)

    return CanonicalCoords(*(x + 0.0 for x in nz.c)), nz.post, nz.pre, nz.phase


# --- KAK -----------------------------------------------------------------------

def _real_orthogonal_eigenbasis(m):
    """Real orthogonal ``P`` with ``P^T m P`` diagonal, for symmetric unitary ``m``."""
    a = m.real
    b = m.imag
    a = (a + a.T) / 2
    b = (b + b.T) / 2
    best = None
    for t in _MIX_COEFFS:
        _, p = np.linalg.eigh(a + t * b)
        d = p.T @ m @ p
        err = np.max(np.abs(d - np.diag(np.diag(d))))
        if best is None or err < best[0]:
            best = (err, p)
        if err < 1e-13:
            break
    return best[1]


def kak(u, tol=UNITARY_TOL):
    """Canonical decomposition of a two-qubit unitary.

    Returns a :class:`KakDecomposition` whose ``coords`` lie in the Weyl
    chamber and whose four local factors have unit determinant.
    """
    u = check_unitary(u, 4, tol)
    det_root = np.linalg.det(u) ** 0.25
    us = u / det_root
    um = MAGIC_DAG @ us @ MAGIC
    m = um.T @ um

    p = _real_orthogonal_eigenbasis(m)
    if np.linalg.det(p) < 0:
        p[:, 0] = -p[:, 0]
    d = np.diag(p.T @ m @ p)
    lam = np.angle(d) / 2
    k1 = (um @ p * np.exp(-1j * lam)).real
    if np.linalg.det(k1) < 0:
        lam[0] += np.pi
        k1[:, 0] = -k1[:, 0]

    global_phase = lam.mean()
    lam = lam - global_phase
    raw = ((lam[0] + lam[1]) / 2, (lam[1] + lam[3]) / 2, (lam[0] + lam[3]) / 2)

    a1, b1, ph1 = factor_local(MAGIC @ k1 @ MAGIC_DAG)
    a0, b0, ph0 = factor_local(MAGIC @ p.T @ MAGIC_DAG)
    coords, npost, npre, nphase = weyl_normalize(raw)

    phase = float(np.angle(det_root) + global_phase + nphase + ph1 + ph0)
    return KakDecomposition(
        phase=phase,
        pre=npre @ LocalLayer(a0, b0),
        coords=coords,
        post=LocalLayer(a1, b1) @ npost,
    )


def weyl_coordinates(u):
    return kak(u).coords


def local_invariant(u, tol=UNITARY_TOL):
    u = check_unitary(u, 4, tol)
    us = u / np.linalg.det(u) ** 0.25
    um = MAGIC_DAG @ us @ MAGIC
    ev = np.linalg.eigvals(um.T @ um)
    phases = np.angle(ev)
    phases[phases <= -np.pi] += 2 * np.pi
    return LocalInvariant(tuple(float(x) for x in np.sort(phases)))


def canonical_invariant(c1, c2, c3):
    """The :class:`LocalInvariant` of ``canonical_gate(c)``, from the eigenphase formulas."""
    phases = np.angle(np.exp(2j * eigenphases(c1, c2, c3)))
    return LocalInvariant(tuple(float(x) for x in np.sort(phases)))


def chamber_distance(a, b):
    """Largest coordinate difference between two chamber points.

    The face ``c1 = pi/4`` identifies ``(pi/4, c2, c3)`` with
    ``(pi/4, c2, -c3)``, so ``b`` is also compared through that reflection,
    ``(pi/2 - b1, b2, -b3)``; this keeps the distance continuous across it.
    """
    a = np.asarray(a, dtype=float)
    b1, b2, b3 = (float(x) for x in b)
    direct = np.max(np.abs(a - (b1, b2, b3)))
    reflected = np.max(np.abs(a - (np.pi / 2 - b1, b2, -b3)))
    return float(min(direct, reflected))


def is_locally_equivalent(u, v, tol=EQUAL_TOL):
    return chamber_distance(kak(u).coords, kak(v).coords) <= tol


def local_relation(u, v, tol=1e-7):
    """Find ``(phase, post, pre)`` with ``u = e^{i phase} post v pre``.

    Both arguments must be locally equivalent; their chamber coordinates
    must agree to ``tol`` or ``ValueError`` is raised.
    """
    ku = kak(u)
    kv = kak(v)
    if ku.coords.max_diff(kv.coords) > tol:
        raise ValueError(
            f"gates are not locally equivalent: {tuple(ku.coords)} vs {tuple(kv.coords)}")
    post = ku.post @ kv.post.dagger()
    pre = kv.pre.dagger() @ ku.pre
    return ku.phase - kv.phase, post, pre


def mirror_coords(c):
    """Chamber coordinates of the mirror class ``U_d(c + pi/4)``."""
    c1, c2, c3 = c
    return weyl_normalize((c1 + PI4, c2 + PI4, c3 + PI4))[0]


_SWAP_CLASS = canonical_gate(PI4, PI4, PI4)


def mirror_of(u, tol=UNITARY_TOL):
    """A mirror gate of ``u``: ``U_d(pi/4, pi/4, pi/4) u``, i.e. ``e^{i pi/4} SWAP u``."""
    u = check_unitary(u, 4, tol)
    return _SWAP_CLASS @ u
