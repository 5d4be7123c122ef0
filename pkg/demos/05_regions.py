"""Where n applications of a controlled gate can and cannot go.

Run with ``python3 demos/05_regions.py``.
"""

import numpy as np

from weylsynth import BaseGate, reachable_region
from weylsynth.verify import necessity_scan

PI = np.pi
base = BaseGate.controlled(PI / 4)

for n in (2, 3, 4):
    region = reachable_region(base, n)
    print(f"n = {n} ({region.sufficiency}): {region.describe()}")

# a point is given in doubled coordinates
region = reachable_region(base, 2)
for h in ((1.0, 0.5, 0.0), (1.3, 0.5, 0.0), (1.0, 0.5, 0.2)):
    print(h, "inside" if region.contains(h) else f"outside, violates {region.violations(h)}")

# random circuits never leave the region
for n in (2, 3, 4):
    report = necessity_scan(base, n, 300, seed=n)
    print(f"necessity scan n = {n}: {report.trials} circuits, {len(report.failures)} outside")
