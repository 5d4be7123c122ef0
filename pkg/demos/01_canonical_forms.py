"""Canonical coordinates of familiar two-qubit gates.

Run with ``python3 demos/01_canonical_forms.py``.
"""

import numpy as np

from weylsynth import CNOT, SWAP, eigenphases, haar_random_u2, kak, local_invariant, weyl_coordinates
from weylsynth.matcore import tensor

PI = np.pi

# CNOT, the double CNOT and SWAP sit at three corners of the chamber
dcnot = CNOT @ SWAP @ CNOT @ SWAP
for name, gate in (("CNOT", CNOT), ("DCNOT", dcnot), ("SWAP", SWAP)):
    c = weyl_coordinates(gate)
    print(f"{name:6s} coords / (π/4) = {np.round(np.array(c) / (PI / 4), 12)}")

# local gates on either side do not move a gate in the chamber
rng = np.random.default_rng(7)
dressed = tensor(haar_random_u2(rng), haar_random_u2(rng)) @ CNOT @ tensor(haar_random_u2(rng), haar_random_u2(rng))
print("dressed CNOT coords:", np.round(weyl_coordinates(dressed), 12))

# the full decomposition rebuilds the gate exactly, phase included
k = kak(dressed)
print("reconstruction error:", f"{k.reconstruction_error(dressed):.1e}")

# the magic-basis eigenphases of the canonical part and the local invariant
print("eigenphases of U_d(π/4, π/8, 0):", np.round(eigenphases(PI / 4, PI / 8, 0), 6))
print("invariant phases of the dressed CNOT:", np.round(local_invariant(dressed).phases, 6))
