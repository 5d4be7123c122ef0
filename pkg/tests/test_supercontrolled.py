import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylsynth.canonical import weyl_coordinates
from weylsynth.errors import DomainError
from weylsynth.matcore import MAGIC, SWAP, canonical_gate, dagger, phase_aligned_error, rot_z, tensor
from weylsynth.synth.circuit import SUPERCONTROLLED, evaluate
from weylsynth.synth.supercontrolled import build_uabc, synth_supercontrolled2, synth_supercontrolled3

ALPHAS = [0.0, np.pi / 8, np.pi / 6, 0.3, np.pi / 4]
coord = st.floats(-np.pi, np.pi, allow_nan=False)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_blocks_are_unitary_and_in_base_class(alpha):
    for u in build_uabc(alpha):
        assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-14)
        assert np.allclose(weyl_coordinates(u), (np.pi / 4, alpha, 0), atol=1e-12)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_block_actions(alpha):
    ua, ub, uc = build_uabc(alpha)
    c, s = np.cos(2 * alpha), np.sin(2 * alpha)
    e = np.eye(4)
    # U_A takes the magic basis to the computational basis (last with a phase)
    assert np.allclose(ua @ MAGIC, np.diag([1, 1, 1, np.exp(4j * alpha)]))
    assert np.allclose(ub @ e[:, 0], [c, 0, s, 0])
    assert np.allclose(ub @ e[:, 2], [0, 0, 0, np.exp(8j * alpha)])
    assert np.allclose(uc @ np.array([c, 0, s, 0]), MAGIC[:, 0])
    assert np.allclose(uc @ e[:, 3], np.exp(-4j * alpha) * MAGIC[:, 2])


@pytest.mark.parametrize("alpha", ALPHAS)
def test_two_block_identity(alpha):
    ua, _, _ = build_uabc(alpha)
    h1, h2 = 0.37, -0.21
    got = dagger(ua) @ tensor(rot_z(2 * h1), rot_z(-2 * h2)) @ ua
    assert np.allclose(got, canonical_gate(h1, h2, 0), atol=1e-13)


@pytest.mark.parametrize("alpha", ALPHAS)
@given(coord, coord, coord)
def test_three_applications_exact(alpha, h1, h2, h3):
    c = synth_supercontrolled3(h1, h2, h3, alpha)
    assert c.n == 3
    assert all(g.kind == SUPERCONTROLLED for g in c.gates())
    # holds entrywise, with the global phase included
    assert np.max(np.abs(evaluate(c) - canonical_gate(h1, h2, h3))) < 1e-12


@pytest.mark.parametrize("alpha", ALPHAS)
@given(coord, coord)
def test_two_applications_exact(alpha, h1, h2):
    c = synth_supercontrolled2(h1, h2, alpha)
    assert c.n == 2
    assert np.max(np.abs(evaluate(c) - canonical_gate(h1, h2, 0))) < 1e-12


def test_swap_class():
    c = synth_supercontrolled3(np.pi / 4, np.pi / 4, np.pi / 4, np.pi / 8)
    assert np.allclose(weyl_coordinates(evaluate(c)), weyl_coordinates(SWAP), atol=1e-12)


def test_h3_zero_agrees_with_two_applications():
    a = evaluate(synth_supercontrolled3(0.5, 0.2, 0.0, np.pi / 6))
    b = evaluate(synth_supercontrolled2(0.5, 0.2, np.pi / 6))
    assert phase_aligned_error(a, b) < 1e-12


def test_domain():
    with pytest.raises(DomainError):
        build_uabc(1.0)
