import numpy as np
import pytest

from weylsynth.canonical import chamber_distance, is_locally_equivalent, mirror_coords, mirror_of, weyl_coordinates
from weylsynth.errors import IndexOutOfRangeError
from weylsynth.matcore import CNOT, SWAP, LocalLayer, haar_random_u4, phase_aligned_error
from weylsynth.synth.circuit import CONTROLLED, CUSTOM, MIRROR_CONTROLLED, BaseGate, Circuit, evaluate
from weylsynth.synth.mirror import MIRROR_MATRIX, mirror_all, mirror_gate, mirror_rewrite, synth_mirror_universal
from weylsynth.synth.universal import synth_universal
from weylsynth.verify import random_circuit

CNOT_BASE = BaseGate.controlled(np.pi / 2)
DCNOT_COORDS = (np.pi / 4, np.pi / 4, 0)


def test_mirror_matrix_is_scaled_swap():
    assert np.allclose(MIRROR_MATRIX, np.exp(1j * np.pi / 4) * SWAP)
    assert np.allclose(MIRROR_MATRIX @ MIRROR_MATRIX, 1j * np.eye(4))


@pytest.mark.parametrize("seed", range(30))
@pytest.mark.parametrize("index", [0, 1, 2])
def test_rewrite_gives_mirror_class(seed, index):
    c = random_circuit(CNOT_BASE, 3, seed)
    w = evaluate(c)
    r = mirror_rewrite(c, index)
    assert chamber_distance(weyl_coordinates(evaluate(r)), mirror_coords(weyl_coordinates(w))) < 1e-9
    # the rewrite is exact, not only up to local gates
    assert phase_aligned_error(evaluate(r), MIRROR_MATRIX @ w) < 1e-12


def test_rewrite_replaces_slot_and_swaps_later_layers():
    c = random_circuit(CNOT_BASE, 3, 4)
    r = mirror_rewrite(c, 1)
    assert [g.kind for g in r.gates()] == [CONTROLLED, MIRROR_CONTROLLED, CONTROLLED]
    assert r.layers[0] is c.layers[0] and r.layers[1] is c.layers[1]
    for old, new in zip(c.layers[2:], r.layers[2:]):
        assert np.array_equal(new.a, old.b) and np.array_equal(new.b, old.a)


def test_double_rewrite_restores_class():
    for seed in range(10):
        c = random_circuit(CNOT_BASE, 3, seed)
        rr = mirror_rewrite(mirror_rewrite(c, 1), 1)
        assert is_locally_equivalent(evaluate(rr), evaluate(c))
        # C C = i exactly
        assert phase_aligned_error(evaluate(rr), 1j * evaluate(c)) < 1e-12


def test_single_identity_layer_circuit():
    u = haar_random_u4(12)
    c = Circuit(BaseGate.custom(u), [LocalLayer.identity()] * 2)
    r = mirror_rewrite(c, 0)
    assert r.base.kind == CUSTOM
    assert phase_aligned_error(evaluate(r), mirror_of(u)) < 1e-14


def test_custom_gates_after_index_are_swapped():
    u = haar_random_u4(13)
    c = random_circuit(BaseGate.custom(u), 3, 1)
    r = mirror_rewrite(c, 0)
    assert phase_aligned_error(evaluate(r), MIRROR_MATRIX @ evaluate(c)) < 1e-12


@pytest.mark.parametrize("index", [-1, 3, 10])
def test_index_out_of_range(index):
    with pytest.raises(IndexOutOfRangeError):
        mirror_rewrite(random_circuit(CNOT_BASE, 3, 0), index)


def test_mirror_gate_names():
    g, phase = mirror_gate(BaseGate.controlled(0.4))
    assert g.kind == MIRROR_CONTROLLED and phase == 0.0
    back, phase = mirror_gate(g)
    assert back.kind == CONTROLLED and phase == pytest.approx(np.pi / 2)
    assert np.allclose(np.exp(1j * phase) * back.matrix(), MIRROR_MATRIX @ g.matrix())


def test_cnot_universal_family_mirrors_to_dcnot_family():
    for seed in range(20):
        target = haar_random_u4(seed)
        c = synth_universal(MIRROR_MATRIX @ target, CNOT_BASE)
        m = mirror_all(c)
        assert m.n == 3
        for g in m.gates():
            assert np.allclose(weyl_coordinates(g.matrix()), DCNOT_COORDS, atol=1e-12)
        # C^3 C T = C^4 T = -T
        assert phase_aligned_error(evaluate(m), -target) < 1e-12


@pytest.mark.parametrize("gamma", [np.pi / 2, np.pi / 3, np.pi / 4])
def test_synth_mirror_universal(gamma):
    for seed in range(10):
        target = haar_random_u4(seed + 100)
        c = synth_mirror_universal(target, gamma)
        assert all(g.kind == MIRROR_CONTROLLED for g in c.gates())
        assert phase_aligned_error(evaluate(c), target) < 1e-12


def test_cnot_mirror_is_dcnot():
    assert np.allclose(weyl_coordinates(mirror_of(CNOT)), DCNOT_COORDS, atol=1e-12)
