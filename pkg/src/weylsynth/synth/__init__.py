"""Circuit construction over controlled, super controlled and mirror gates."""

from .bgate import B_COORDS, b_gate, synth_b_from_t7, t7_feasible
from .circuit import BaseGate, Circuit, dressing, evaluate, max_error, residual, retarget
from .compose import ComposeResult, compose_t5, solve_locals_t5, t5_product
from .controlled import (
    controlled_for_class,
    synth_controlled_n,
    synth_controlled_t4,
    synth_controlled_t6,
    synth_two_controlled,
    t6_c1_interval,
    universal_budget,
)
from .mirror import MIRROR_MATRIX, mirror_all, mirror_gate, mirror_rewrite, synth_mirror_universal
from .region import Constraint, Region, normalize_point, reachable_region, two_controlled_region
from .supercontrolled import build_uabc, synth_supercontrolled2, synth_supercontrolled3
from .universal import rebase, recognize_base, synth_universal

__all__ = [
    "B_COORDS", "b_gate", "synth_b_from_t7", "t7_feasible",
    "BaseGate", "Circuit", "dressing", "evaluate", "max_error", "residual", "retarget",
    "ComposeResult", "compose_t5", "solve_locals_t5", "t5_product",
    "controlled_for_class", "synth_controlled_n", "synth_controlled_t4", "synth_controlled_t6",
    "synth_two_controlled", "t6_c1_interval", "universal_budget",
    "MIRROR_MATRIX", "mirror_all", "mirror_gate", "mirror_rewrite", "synth_mirror_universal",
    "Constraint", "Region", "normalize_point", "reachable_region", "two_controlled_region",
    "build_uabc", "synth_supercontrolled2", "synth_supercontrolled3",
    "rebase", "recognize_base", "synth_universal",
]
