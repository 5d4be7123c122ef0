"""Numerical foundation for two-qubit gate work.

Matrices are plain ``numpy`` complex arrays.  Two-qubit matrices use the
computational basis ``|00>, |01>, |10>, |11>`` with qubit A as the left
(most significant) Kronecker factor.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonUnitaryInputError

UNITARY_TOL = 1e-10
EQUAL_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=complex)

SWAP = np.array([[1, 0, 0, 0],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1]], dtype=complex)

# Columns are |Phi_1>..|Phi_4>, phases included.
MAGIC = np.array([[1, 0, 0, 1j],
                  [0, 1j, 1, 0],
                  [0, 1j, -1, 0],
                  [1, 0, 0, -1j]], dtype=complex) / np.sqrt(2)
MAGIC_DAG = MAGIC.conj().T


def eigenphases(c1, c2, c3):
    """Phases ``lambda_j`` with ``U_d(c)|Phi_j> = exp(i lambda_j)|Phi_j>``."""
    return np.array([c1 - c2 + c3,
                     c1 + c2 - c3,
                     -c1 - c2 - c3,
                     -c1 + c2 + c3])


def tensor(a, b):
    """Kronecker product with ``a`` acting on qubit A."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def canonical_gate(c1, c2, c3):
    """Return ``exp(i (c1 XX + c2 YY + c3 ZZ))``.

    Evaluated in closed form: the magic basis diagonalizes all three
    exponent terms at once.
    """
    lam = eigenphases(c1, c2, c3)
    return (MAGIC * np.exp(1j * lam)) @ MAGIC_DAG


def controlled_gate(gamma):
    """The controlled gate ``exp(i gamma/2 ZZ)``, i.e. ``canonical_gate(0, 0, gamma/2)``."""
    p = np.exp(0.5j * gamma)
    return np.diag([p, p.conjugate(), p.conjugate(), p])


def rot_y(theta):
    """``exp(i theta/2 Y)``; note the plus sign in the exponent."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, s], [-s, c]], dtype=complex)


def rot_z(theta):
    """``exp(i theta/2 Z)``."""
    p = np.exp(0.5j * theta)
    return np.array([[p, 0], [0, p.conjugate()]], dtype=complex)


def rot_x(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)


def dagger(u):
    return np.asarray(u).conj().T


def unitarity_error(u):
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def is_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    if not np.all(np.isfinite(u)):
        return False
    return unitarity_error(u) <= tol


def check_unitary(u, dim=None, tol=UNITARY_TOL, name="matrix"):
    """Return ``u`` as a complex array, raising if it is not unitary."""
    u = np.asarray(u, dtype=complex)
    if dim is not None and u.shape != (dim, dim):
        raise NonUnitaryInputError(f"{name} must be {dim}x{dim}, got shape {u.shape}")
    if not np.all(np.isfinite(u)):
        raise NonUnitaryInputError(f"{name} has non-finite entries")
    if not is_unitary(u, tol):
        raise NonUnitaryInputError(
            f"{name} is not unitary (max |U^dag U - I| = {unitarity_error(u):.3e})")
    return u


def distance_up_to_phase(u, v):
    """``1 - |tr(u^dag v)| / d``; zero iff ``u`` and ``v`` differ by a global phase."""
    u = np.asarray(u)
    v = np.asarray(v)
    d = u.shape[0]
    overlap = abs(np.vdot(u, v)) / d
    return float(max(0.0, 1.0 - overlap))


def phase_aligned_error(u, v):
    """Max-norm of ``u - e^{i phi} v`` for the best phase ``phi``.

    Linear in the perturbation, unlike :func:`distance_up_to_phase`, which
    is quadratic, so it is the sharper check for near-equal matrices.
    """
    u = np.asarray(u)
    v = np.asarray(v)
    ov = np.vdot(v, u)
    phase = ov / abs(ov) if abs(ov) > 0 else 1.0
    return float(np.max(np.abs(u - phase * v)))


def _haar(dim, seed):
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def haar_random_u2(seed=None):
    """Haar-random 2x2 unitary.  ``seed`` is anything ``default_rng`` accepts."""
    return _haar(2, seed)


def haar_random_u4(seed=None):
    return _haar(4, seed)


def to_su(u):
    """Rescale ``u`` to unit determinant (principal root)."""
    u = np.asarray(u, dtype=complex)
    return u / np.linalg.det(u) ** (1.0 / u.shape[0])


@dataclass(frozen=True, eq=False)
class LocalLayer:
    """A product gate ``a (x) b`` of single-qubit unitaries."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in ("a", "b"):
            m = np.array(getattr(self, name), dtype=complex)
            if m.shape != (2, 2):
                raise ValueError(f"LocalLayer.{name} must be 2x2, got {m.shape}")
            if not np.all(np.isfinite(m)):
                raise ValueError(f"LocalLayer.{name} has non-finite entries")
            m.setflags(write=False)
            object.__setattr__(self, name, m)

    @classmethod
    def identity(cls):
        return cls(I2, I2)

    def matrix(self):
        return tensor(self.a, self.b)

    def __matmul__(self, other):
        """Layer product; ``(self @ other)`` applies ``other`` first."""
        return LocalLayer(self.a @ other.a, self.b @ other.b)

    def dagger(self):
        return LocalLayer(dagger(self.a), dagger(self.b))

    def swapped(self):
        """The same layer with the qubit roles exchanged (SWAP conjugation)."""
        return LocalLayer(self.b, self.a)

    def is_unitary(self, tol=UNITARY_TOL):
        return is_unitary(self.a, tol) and is_unitary(self.b, tol)

    def __repr__(self):
        return f"LocalLayer(a={self.a.tolist()}, b={self.b.tolist()})"


def factor_local(m, tol=1e-7):
    """Split a 4x4 product gate into ``(a, b, phase)`` with ``m = e^{i phase} a (x) b``.

    ``a`` and ``b`` are returned with unit determinant.  Raises ``ValueError``
    if ``m`` is not (numerically) a tensor product.
    """
    m = np.asarray(m, dtype=complex)
    # realign m[(i a),(j b)] -> r[(i j),(a b)]; a rank-one r is vec(a) vec(b)^T
    r = m.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    u, s, vh = np.linalg.svd(r)
    if s[1] > tol * s[0]:
        raise ValueError("matrix is not a tensor product of single-qubit gates")
    a = (u[:, 0] * np.sqrt(s[0])).reshape(2, 2)
    b = (vh[0, :] * np.sqrt(s[0])).reshape(2, 2)
    a = a / np.sqrt(np.linalg.det(a))
    b = b / np.sqrt(np.linalg.det(b))
    phase = np.angle(np.vdot(tensor(a, b), m) / 4)
    return a, b, float(phase)
