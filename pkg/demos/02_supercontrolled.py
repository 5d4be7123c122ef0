"""Any gate from three applications of a super controlled gate.

Run with ``python3 demos/02_supercontrolled.py``.
"""

import numpy as np

from weylsynth import BaseGate, distance_up_to_phase, evaluate, haar_random_u4, synth_supercontrolled2, synth_universal
from weylsynth.matcore import canonical_gate

PI = np.pi
rng = np.random.default_rng(11)

# the base U_d(π/4, π/8, 0) lies on the CNOT to DCNOT edge
base = BaseGate.supercontrolled(PI / 8)
print("base:", base.describe())

# three applications reach every target exactly, global phase included
worst = 0.0
for _ in range(50):
    target = haar_random_u4(rng)
    circuit = synth_universal(target, base)
    worst = max(worst, distance_up_to_phase(evaluate(circuit), target))
print(f"50 random targets, 3 applications each, worst residual {worst:.1e}")

# two applications suffice when the third coordinate vanishes
circuit = synth_supercontrolled2(0.6, 0.2, PI / 8)
print("two applications for U_d(0.6, 0.2, 0):", circuit.n,
      f"residual {np.max(np.abs(evaluate(circuit) - canonical_gate(0.6, 0.2, 0))):.1e}")
