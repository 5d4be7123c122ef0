"""Two-qubit gate analysis and synthesis over controlled and super controlled gates.

The main entry points:

* :func:`kak` and :func:`weyl_coordinates` for the canonical form of a gate;
* :func:`synth_universal` for a circuit realizing any gate over a base gate;
* :func:`mirror_rewrite` for turning a circuit into one for the mirror gate;
* :func:`reachable_region` for what a fixed number of applications can reach.
"""

__version__ = "0.1.0"

from .canonical import (
    CanonicalCoords,
    KakDecomposition,
    LocalInvariant,
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
from .errors import (
    DomainError,
    IndexOutOfRangeError,
    InfeasibleError,
    MalformedCircuitError,
    NonUnitaryInputError,
    OutOfRegionError,
    UnsupportedBaseError,
    WeylError,
)
from .matcore import (
    CNOT,
    SWAP,
    LocalLayer,
    canonical_gate,
    controlled_gate,
    distance_up_to_phase,
    eigenphases,
    haar_random_u2,
    haar_random_u4,
)
from .synth import (
    BaseGate,
    Circuit,
    compose_t5,
    evaluate,
    mirror_rewrite,
    reachable_region,
    synth_b_from_t7,
    synth_controlled_n,
    synth_controlled_t4,
    synth_controlled_t6,
    synth_supercontrolled2,
    synth_supercontrolled3,
    synth_two_controlled,
    synth_universal,
    t7_feasible,
    universal_budget,
)

__all__ = [
    "CanonicalCoords", "KakDecomposition", "LocalInvariant", "chamber_distance",
    "is_locally_equivalent", "kak", "local_invariant", "local_relation", "mirror_coords",
    "mirror_of", "weyl_coordinates", "weyl_normalize",
    "DomainError", "IndexOutOfRangeError", "InfeasibleError", "MalformedCircuitError",
    "NonUnitaryInputError", "OutOfRegionError", "UnsupportedBaseError", "WeylError",
    "CNOT", "SWAP", "LocalLayer", "canonical_gate", "controlled_gate", "distance_up_to_phase",
    "eigenphases", "haar_random_u2", "haar_random_u4",
    "BaseGate", "Circuit", "compose_t5", "evaluate", "mirror_rewrite", "reachable_region",
    "synth_b_from_t7", "synth_controlled_n", "synth_controlled_t4", "synth_controlled_t6",
    "synth_supercontrolled2", "synth_supercontrolled3", "synth_two_controlled", "synth_universal",
    "t7_feasible", "universal_budget",
]
