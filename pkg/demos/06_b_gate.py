"""The B gate from two applications of U_d(a1/2, 0, a3/2).

Run with ``python3 demos/06_b_gate.py``.
"""

import numpy as np

from weylsynth import InfeasibleError, evaluate, synth_b_from_t7, t7_feasible, weyl_coordinates

PI = np.pi

a1, a3 = 3 * PI / 8, PI / 8
print("feasible:", t7_feasible(a1, a3))
circuit = synth_b_from_t7(a1, a3)
print(circuit.n, "applications ->", np.round(np.array(weyl_coordinates(evaluate(circuit))) / (PI / 8), 9), "· π/8")

# too weak a base cannot make the B gate in two steps
try:
    synth_b_from_t7(0.3, 0.1)
except InfeasibleError as exc:
    print("rejected:", exc)
