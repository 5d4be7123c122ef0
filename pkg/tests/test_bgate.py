import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylsynth.canonical import chamber_distance, weyl_coordinates
from weylsynth.errors import InfeasibleError
from weylsynth.matcore import canonical_gate
from weylsynth.synth.bgate import B_COORDS, b_gate, synth_b_from_t7, t7_feasible
from weylsynth.synth.circuit import evaluate


def test_b_gate_class():
    assert np.allclose(weyl_coordinates(b_gate()), (np.pi / 4, np.pi / 8, 0), atol=1e-12)


@pytest.mark.parametrize("a1,a3", [(3 * np.pi / 8, np.pi / 8), (np.pi / 2, 0.0), (np.pi / 2, np.pi / 8)])
def test_builds_b_gate(a1, a3):
    assert t7_feasible(a1, a3)
    c = synth_b_from_t7(a1, a3)
    assert c.n == 2
    assert np.allclose(c.base.matrix(), canonical_gate(a1 / 2, 0, a3 / 2))
    assert chamber_distance(weyl_coordinates(evaluate(c)), B_COORDS) < 1e-10


def test_second_application_is_axis_swapped():
    a1, a3 = 3 * np.pi / 8, np.pi / 8
    c = synth_b_from_t7(a1, a3)
    g = c.base.matrix()
    # the first layer is V x V and the next starts with V^dag x V^dag
    v = c.layers[0].a
    u2 = np.kron(v.conj().T, v.conj().T) @ g @ np.kron(v, v)
    assert np.allclose(u2, canonical_gate(a3 / 2, 0, a1 / 2), atol=1e-12)


@pytest.mark.parametrize("a1,a3", [(0.0, 0.0), (0.3, 0.1), (np.pi / 4, 0.0)])
def test_infeasible(a1, a3):
    assert not t7_feasible(a1, a3)
    with pytest.raises(InfeasibleError):
        synth_b_from_t7(a1, a3)


@given(st.floats(0, np.pi, allow_nan=False), st.floats(-np.pi / 2, np.pi / 2, allow_nan=False))
def test_feasible_region_always_builds(a1, a3):
    if not t7_feasible(a1, a3, tol=-1e-9):
        return
    c = synth_b_from_t7(a1, a3)
    assert chamber_distance(weyl_coordinates(evaluate(c)), B_COORDS) < 1e-8
