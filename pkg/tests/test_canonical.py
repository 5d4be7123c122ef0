import itertools

import numpy as np
import pytest
from conftest import chamber_points
from hypothesis import given
from hypothesis import strategies as st

from weylsynth.canonical import (
    CanonicalCoords,
    axis_swap_clifford,
    canonical_invariant,
    chamber_distance,
    is_locally_equivalent,
    kak,
    local_invariant,
    local_relation,
    mirror_coords,
    mirror_of,
    weyl_coordinates,
    weyl_normalize,
)
from weylsynth.errors import NonUnitaryInputError
from weylsynth.matcore import (
    CNOT,
    I4,
    PAULIS,
    SWAP,
    LocalLayer,
    canonical_gate,
    controlled_gate,
    dagger,
    eigenphases,
    haar_random_u2,
    haar_random_u4,
    phase_aligned_error,
    tensor,
)

PI4 = np.pi / 4
DCNOT = CNOT @ SWAP @ CNOT @ SWAP


def dress(u, seed):
    rng = np.random.default_rng(seed)
    left = tensor(haar_random_u2(rng), haar_random_u2(rng))
    right = tensor(haar_random_u2(rng), haar_random_u2(rng))
    return left @ u @ right


def in_chamber(c, slack=1e-12):
    c1, c2, c3 = c
    return PI4 + slack >= c1 >= c2 - slack and c2 + slack >= abs(c3)


@pytest.mark.parametrize("gate,expected", [
    (CNOT, (PI4, 0, 0)),
    (DCNOT, (PI4, PI4, 0)),
    (SWAP, (PI4, PI4, PI4)),
    (I4, (0, 0, 0)),
    (controlled_gate(np.pi / 2), (PI4, 0, 0)),
])
def test_named_gate_coordinates(gate, expected):
    assert np.allclose(weyl_coordinates(gate), expected, atol=1e-12)
    assert np.allclose(weyl_coordinates(dress(gate, 7)), expected, atol=1e-9)


def test_kak_round_trip_haar():
    worst = 0.0
    for seed in range(1000):
        u = haar_random_u4(seed)
        k = kak(u)
        worst = max(worst, k.reconstruction_error(u))
        assert in_chamber(k.coords)
        for m in (k.pre.a, k.pre.b, k.post.a, k.post.b):
            assert abs(np.linalg.det(m) - 1) < 1e-12
    assert worst < 1e-12


@pytest.mark.parametrize("c", [
    (0, 0, 0), (PI4, 0, 0), (PI4, PI4, 0), (PI4, PI4, PI4), (PI4, PI4, -0.3),
    (0.3, 0.3, 0.3), (0.3, 0.3, -0.3), (0.5, 0.2, 0.2), (0.5, 0.2, -0.2), (PI4, 0.1, 0.1),
    (PI4, 0.3, -0.1), (0.2, 0.0, 0.0), (PI4 - 1e-12, 0.2, 0.0),
])
def test_kak_degenerate_and_boundary_classes(c):
    u = dress(canonical_gate(*c), 11)
    k = kak(u)
    assert k.reconstruction_error(u) < 1e-12
    assert chamber_distance(k.coords, weyl_normalize(c)[0]) < 1e-9


def test_coordinates_invariant_under_dressing():
    for seed in range(50):
        u = haar_random_u4(seed)
        assert chamber_distance(weyl_coordinates(u), weyl_coordinates(dress(u, seed + 500))) < 1e-9


def test_kak_rejects_non_unitary():
    with pytest.raises(NonUnitaryInputError):
        kak(np.ones((4, 4)))


raw = st.floats(-3, 3, allow_nan=False)


@given(raw, raw, raw)
def test_weyl_normalize_reconstructs(c1, c2, c3):
    coords, post, pre, phase = weyl_normalize((c1, c2, c3))
    assert in_chamber(coords)
    rebuilt = np.exp(1j * phase) * post.matrix() @ canonical_gate(*coords) @ pre.matrix()
    assert np.allclose(rebuilt, canonical_gate(c1, c2, c3), atol=1e-12)


@pytest.mark.parametrize("raw,expected", [
    ((0, 0, PI4), (PI4, 0, 0)),
    ((np.pi / 2, np.pi / 2, np.pi / 2), (0, 0, 0)),
    ((2 * PI4, PI4, PI4), (PI4, PI4, 0)),
    ((-0.1, 0.3, 0.2), (0.3, 0.2, -0.1)),
])
def test_weyl_normalize_examples(raw, expected):
    assert np.allclose(weyl_normalize(raw)[0], expected, atol=1e-12)


def test_weyl_normalize_fixes_chamber_points(rng):
    for c in chamber_points(rng, 200):
        assert np.allclose(weyl_normalize(c)[0], c, atol=1e-14)


def test_face_representative_has_nonnegative_c3():
    # (pi/4, c2, c3) and (pi/4, c2, -c3) are the same class
    a = weyl_coordinates(canonical_gate(PI4, 0.4, -0.2))
    assert a.c3 == pytest.approx(0.2)
    assert is_locally_equivalent(canonical_gate(PI4, 0.4, 0.2), canonical_gate(PI4, 0.4, -0.2))


def test_chamber_distance_is_continuous_across_face():
    a = (PI4, 0.3, 0.1)
    b = (PI4 - 1e-11, 0.3, -0.1)
    assert chamber_distance(a, b) < 1e-10
    assert chamber_distance((0.3, 0.2, 0.1), (0.3, 0.2, -0.1)) == pytest.approx(0.2)


@pytest.mark.parametrize("i,j", [(0, 1), (0, 2), (1, 2)])
def test_axis_swap_clifford(i, j):
    v = axis_swap_clifford(i, j)
    assert np.isclose(np.linalg.det(v), 1)
    for a, b in ((i, j), (j, i)):
        mapped = dagger(v) @ PAULIS[a] @ v
        assert np.allclose(mapped, PAULIS[b]) or np.allclose(mapped, -PAULIS[b])


def test_eigenphase_consistency(rng):
    for c in chamber_points(rng, 200):
        inv = local_invariant(canonical_gate(*c))
        assert inv.distance(canonical_invariant(*c)) < 1e-10
        expected = np.sort(np.angle(np.exp(2j * eigenphases(*c))))
        assert inv.matches(canonical_invariant(*c))
        assert len(expected) == 4


def test_local_invariant_identity_and_dressing():
    assert np.allclose(local_invariant(I4).phases, 0, atol=1e-14)
    for seed in range(20):
        u = haar_random_u4(seed)
        assert local_invariant(u).distance(local_invariant(dress(u, seed))) < 1e-9


def test_local_invariant_separates_classes():
    assert not local_invariant(CNOT).matches(local_invariant(SWAP))


def test_is_locally_equivalent():
    assert is_locally_equivalent(CNOT, controlled_gate(np.pi / 2))
    assert not is_locally_equivalent(CNOT, SWAP)
    u = haar_random_u4(5)
    assert is_locally_equivalent(u, dress(u, 9))


def test_local_relation_reconstructs():
    u = haar_random_u4(8)
    v = dress(u, 3) * np.exp(0.4j)
    phase, post, pre = local_relation(u, v)
    assert phase_aligned_error(np.exp(1j * phase) * post.matrix() @ v @ pre.matrix(), u) < 1e-12
    assert isinstance(post, LocalLayer)
    with pytest.raises(ValueError):
        local_relation(CNOT, SWAP)


@pytest.mark.parametrize("c,expected", [
    ((PI4, 0, 0), (PI4, PI4, 0)),
    ((PI4, PI4, PI4), (0, 0, 0)),
    ((0, 0, 0), (PI4, PI4, PI4)),
])
def test_mirror_coords_examples(c, expected):
    assert np.allclose(mirror_coords(c), expected, atol=1e-12)


def test_mirror_involution(rng):
    for c in chamber_points(rng, 300):
        back = mirror_coords(mirror_coords(c))
        assert chamber_distance(back, c) <= 1e-12


def test_mirror_of_matches_mirror_coords():
    assert np.allclose(weyl_coordinates(mirror_of(CNOT)), (PI4, PI4, 0), atol=1e-12)
    assert np.allclose(weyl_coordinates(mirror_of(SWAP)), (0, 0, 0), atol=1e-12)
    for seed in range(100):
        u = haar_random_u4(seed)
        assert chamber_distance(weyl_coordinates(mirror_of(u)), mirror_coords(weyl_coordinates(u))) < 1e-9


def test_mirror_of_is_scaled_swap():
    u = haar_random_u4(1)
    assert np.allclose(mirror_of(u), np.exp(1j * PI4) * SWAP @ u)


def test_coords_helpers():
    c = CanonicalCoords(0.3, 0.2, -0.1)
    assert c.h == pytest.approx((0.6, 0.4, -0.2))
    assert c.is_normalized()
    assert not CanonicalCoords(0.1, 0.2, 0).is_normalized()


def test_all_sign_permutations_land_on_one_class(rng):
    c = chamber_points(rng, 1)[0]
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            if np.prod(signs) < 0:
                continue  # an odd number of flips is not a local operation
            raw = [signs[k] * c[perm[k]] for k in range(3)]
            assert chamber_distance(weyl_normalize(raw)[0], c) < 1e-12
