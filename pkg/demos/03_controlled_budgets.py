"""How many applications of a weak controlled gate a target needs.

Run with ``python3 demos/03_controlled_budgets.py``.
"""

import numpy as np

from weylsynth import (
    BaseGate,
    evaluate,
    haar_random_u4,
    synth_controlled_n,
    synth_controlled_t4,
    synth_controlled_t6,
    synth_universal,
    universal_budget,
    weyl_coordinates,
)

PI = np.pi

# a controlled gate e^{iγ/2 Z⊗Z}; γ = π/2 is the CNOT class
for gamma in (PI / 2, PI / 3, PI / 4, PI / 6):
    print(f"γ = {gamma / PI:.4f}π: {universal_budget(gamma)} applications reach every gate")

# targets are written in doubled coordinates h = 2c
gamma = PI / 4
h = (1.2, 0.8, 0.0)
c = synth_controlled_n(h[0], h[1], gamma, 3)
print("peeling, h3 = 0:", c.n, "applications ->", np.round(2 * np.array(weyl_coordinates(evaluate(c))), 9))

h = (0.9, 0.5, 0.2)
c = synth_controlled_t6(*h, gamma)
print("three applications:", np.round(2 * np.array(weyl_coordinates(evaluate(c))), 9))

h = (1.4, 1.0, 0.6)
c = synth_controlled_t4(*h, gamma, 4)
print("split over four applications:", np.round(2 * np.array(weyl_coordinates(evaluate(c))), 9))

# the universal dispatcher picks a construction within the budget
target = haar_random_u4(np.random.default_rng(3))
c = synth_universal(target, BaseGate.controlled(gamma))
print("random target over γ = π/4:", c.n, "applications")
