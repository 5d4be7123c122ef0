"""Replacing one gate of a circuit by its mirror moves the whole circuit to its mirror class.

Run with ``python3 demos/04_mirror_rewrite.py``.
"""

import numpy as np

from weylsynth import BaseGate, distance_up_to_phase, evaluate, haar_random_u4, mirror_coords, mirror_rewrite
from weylsynth import synth_universal, weyl_coordinates
from weylsynth.synth.mirror import synth_mirror_universal
from weylsynth.verify import random_circuit

PI = np.pi
cnot = BaseGate.controlled(PI / 2)

# a random three-CNOT circuit and its rewrite at each position
circuit = random_circuit(cnot, 3, seed=5)
before = weyl_coordinates(evaluate(circuit))
print("original:", np.round(before, 9), " mirror:", np.round(mirror_coords(before), 9))
for i in range(3):
    after = weyl_coordinates(evaluate(mirror_rewrite(circuit, i)))
    print(f"  rewrite at {i}:", np.round(after, 9))

# the mirror of CNOT is DCNOT, so three DCNOTs also reach every gate
target = haar_random_u4(np.random.default_rng(9))
dcnot_circuit = synth_mirror_universal(target, PI / 2)
print("DCNOT-class gates:", [np.round(weyl_coordinates(g.matrix()), 6).tolist() for g in dcnot_circuit.gates()])
print(f"residual {distance_up_to_phase(evaluate(dcnot_circuit), target):.1e}")
print("CNOT applications for the same target:", synth_universal(target, cnot).n)
