"""Brute-force checks: random circuits, residual reports, region scans and cross-method agreement.

Randomness is seeded.  A sweep with master seed ``s`` gives trial ``i`` the
generator ``default_rng(SeedSequence(s, spawn_key=(i,)))``, which is what
``SeedSequence(s).spawn`` hands out as child ``i``.  Trials are independent,
so any subset can be rerun (or run in parallel) and reproduce the same
report entries.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .canonical import chamber_distance, weyl_coordinates
from .errors import DomainError, OutOfRegionError, UnsupportedBaseError
from .matcore import LocalLayer, canonical_gate, check_unitary, distance_up_to_phase, haar_random_u2, haar_random_u4
from .synth.circuit import CONTROLLED, BaseGate, Circuit, evaluate, retarget
from .synth.controlled import (
    REGION_TOL,
    synth_controlled_n,
    synth_controlled_t4,
    synth_controlled_t6,
)
from .synth.region import reachable_region
from .synth.supercontrolled import synth_supercontrolled3
from .synth.universal import synth_universal

EXACT_PHASE = "exact_phase"
LOCAL_EQUIV = "local_equiv"
REGION = "region"
MODES = (EXACT_PHASE, LOCAL_EQUIV, REGION)

END_TO_END_TOL = 1e-8
SINGLE_TOL = 1e-9


def trial_rng(seed, index):
    """Generator for trial ``index`` of a sweep with master ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(int(index),)))


@dataclass
class VerifyReport:
    """Outcome of a batch of checks.

    ``failures`` holds ``(seed, summary, residual)`` for every trial whose
    residual exceeded ``tol``; ``seed`` is enough to rerun that trial.
    """

    mode: str
    tol: float
    trials: int = 0
    max_residual: float = 0.0
    failures: list = field(default_factory=list)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def passed(self):
        return not self.failures

    def record(self, seed, summary, residual):
        residual = float(residual)
        self.trials += 1
        # NaN compares false, so it must be caught explicitly
        bad = not residual <= self.tol
        self.max_residual = max(self.max_residual, math.inf if math.isnan(residual) else residual)
        if bad:
            self.failures.append((seed, summary, residual))
        return not bad

    def merge(self, other):
        """Combined report; merging is associative and order only affects failure order."""
        if other.mode != self.mode:
            raise ValueError(f"cannot merge {self.mode} with {other.mode}")
        return VerifyReport(self.mode, max(self.tol, other.tol), self.trials + other.trials,
                            max(self.max_residual, other.max_residual),
                            list(self.failures) + list(other.failures))

    def to_dict(self):
        return {
            "mode": self.mode,
            "tol": self.tol,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "passed": self.passed,
            "failures": [{"seed": s, "input": str(summary), "residual": r}
                         for s, summary, r in self.failures],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} mode={self.mode} trials={self.trials} "
                 f"max_residual={self.max_residual:.3e} tol={self.tol:.1e}"]
        lines += [f"  failure seed={s} residual={r:.3e} input={summary}" for s, summary, r in self.failures]
        return "\n".join(lines)


def circuit_residual(circuit, target, mode=EXACT_PHASE):
    """Residual used by :func:`check_circuit`."""
    u = evaluate(circuit)
    if mode == EXACT_PHASE:
        return distance_up_to_phase(u, target)
    if mode == LOCAL_EQUIV:
        return chamber_distance(weyl_coordinates(u), weyl_coordinates(target))
    raise ValueError(f"mode must be {EXACT_PHASE!r} or {LOCAL_EQUIV!r}, got {mode!r}")


def check_circuit(circuit, target, mode=EXACT_PHASE, tol=END_TO_END_TOL, seed=None, summary=None):
    """Single-trial report comparing a circuit with ``target``.

    ``exact_phase`` uses ``1 - |tr(U^dag V)|/4``; ``local_equiv`` compares
    chamber coordinates.

    Raises:
        NonUnitaryInputError: if ``target`` is not unitary.
    """
    target = check_unitary(target, 4, name="target")
    report = VerifyReport(mode, tol)
    report.record(seed, summary or f"n={circuit.n} base={circuit.base.describe()}",
                  circuit_residual(circuit, target, mode))
    return report


def random_circuit(base, n, seed=None):
    """``n`` applications of ``base`` between Haar-random local layers."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    layers = [LocalLayer(haar_random_u2(rng), haar_random_u2(rng)) for _ in range(n + 1)]
    return Circuit(base, layers)


def necessity_scan(base, n, trials, seed=0, slack=1e-9):
    """Check random circuits against the necessary region of ``reachable_region(base, n)``.

    ``slack`` applies to chamber coordinates, so the doubled-coordinate
    inequalities get ``2 * slack``.  The residual of a trial is its worst
    violation (zero inside).
    """
    if getattr(base, "kind", None) != CONTROLLED:
        raise UnsupportedBaseError(f"necessity_scan needs a controlled base, got {base!r}")
    region = reachable_region(base, n)
    report = VerifyReport(REGION, slack)
    for i in range(trials):
        c = random_circuit(base, n, trial_rng(seed, i))
        coords = weyl_coordinates(evaluate(c))
        h = tuple(2 * x for x in coords)
        worst = max(0.0, -min(con.slack(h) for con in region.constraints)) / 2
        report.record((seed, i), f"γ={base.param:.6g} n={n} c={tuple(round(x, 12) for x in coords)}", worst)
    return report


def _dress(target, rng):
    pre = LocalLayer(haar_random_u2(rng), haar_random_u2(rng))
    post = LocalLayer(haar_random_u2(rng), haar_random_u2(rng))
    return post.matrix() @ target @ pre.matrix()


def _methods(h, gamma, n=None):
    """``(name, thunk)`` for every construction whose preconditions hold at budget ``n``."""
    h1, h2, h3 = h
    flat = abs(h3) <= REGION_TOL
    out = []
    need = (h1 + h2 + abs(h3)) / gamma
    if n in (None, 3):
        out.append(("three-controlled", lambda: synth_controlled_t6(h1, h2, h3, gamma)))
    if flat:
        k = n if n is not None else max(2, math.ceil(need - 1e-9))
        if k >= 2 and h1 + h2 <= k * gamma + REGION_TOL:
            out.append((f"peeling[n={k}]", lambda k=k: synth_controlled_n(h1, h2, gamma, k)))
    if n is None or n >= 4:
        k = n if n is not None else max(4, math.ceil(need - 1e-9))
        if h1 + h2 + abs(h3) <= k * gamma + REGION_TOL:
            out.append((f"split[n={k}]", lambda k=k: synth_controlled_t4(h1, h2, h3, gamma, k)))
    if abs(gamma - np.pi / 2) <= 1e-12 and n in (None, 3):
        # the CNOT is also the super controlled gate with alpha2 = 0
        out.append(("super-controlled", lambda: synth_supercontrolled3(h1 / 2, h2 / 2, h3 / 2, 0.0)))
    return out


def cross_method_check(h, gamma, seed=0, n=None, tol=END_TO_END_TOL):
    """Synthesize one target with every applicable construction and compare.

    ``h`` are doubled chamber coordinates.  The target is dressed with
    random local layers drawn from ``seed``; each construction is retargeted
    onto it and checked for local equivalence.  With ``n`` given, only
    constructions using exactly ``n`` applications take part.

    Raises:
        OutOfRegionError: if ``h`` is not a chamber point or no construction applies.
    """
    h1, h2, h3 = (float(x) for x in h)
    bad = [text for ok, text in [
        (abs(h3) <= h2 + REGION_TOL, "|h3| ≤ h2"),
        (h2 <= h1 + REGION_TOL, "h2 ≤ h1"),
        (h1 <= np.pi / 2 + REGION_TOL, "h1 ≤ π/2"),
    ] if not ok]
    if bad:
        raise OutOfRegionError(f"{(h1, h2, h3)} is not a chamber point: " + "; ".join(bad), bad)
    rng = np.random.default_rng(seed)
    target = _dress(canonical_gate(h1 / 2, h2 / 2, h3 / 2), rng)
    report = VerifyReport(LOCAL_EQUIV, tol)
    ran = 0
    for name, build in _methods((h1, h2, h3), gamma, n):
        try:
            circuit = build()
        except (OutOfRegionError, ValueError):
            continue
        ran += 1
        circuit = retarget(circuit, target)
        report.record(seed, f"{name} h={(h1, h2, h3)} γ={gamma:.6g}",
                      circuit_residual(circuit, target, LOCAL_EQUIV))
    if not ran:
        raise OutOfRegionError(f"no construction applies to h={(h1, h2, h3)} with γ={gamma}, n={n}",
                               ["empty intersection of method preconditions"])
    return report


# --- sweep suites -----------------------------------------------------------------

SCAN_GAMMAS = (np.pi / 6, np.pi / 4, np.pi / 3, np.pi / 2)
SCAN_NS = (2, 3, 4)


def necessity_suite(trials, seed=0):
    report = VerifyReport(REGION, SINGLE_TOL)
    for j, gamma in enumerate(SCAN_GAMMAS):
        for n in SCAN_NS:
            report = report.merge(necessity_scan(BaseGate.controlled(gamma), n, trials, seed + 1000 * j + n))
    return report


ROUNDTRIP_BASES = (
    BaseGate.supercontrolled(np.pi / 8),
    BaseGate.supercontrolled(np.pi / 6),
    BaseGate.controlled(np.pi / 2),
    BaseGate.controlled(np.pi / 3),
    BaseGate.controlled(np.pi / 6),
    BaseGate.mirror_controlled(np.pi / 2),
)


def roundtrip_suite(trials, seed=0):
    """Haar-random targets synthesized over a rotating set of bases."""
    report = VerifyReport(EXACT_PHASE, END_TO_END_TOL)
    for i in range(trials):
        rng = trial_rng(seed, i)
        base = ROUNDTRIP_BASES[i % len(ROUNDTRIP_BASES)]
        target = haar_random_u4(rng)
        circuit = synth_universal(target, base)
        report.record((seed, i), f"base={base.describe()} n={circuit.n}",
                      circuit_residual(circuit, target, EXACT_PHASE))
    return report


def random_chamber_point(rng):
    """Doubled coordinates of a uniformly drawn chamber point."""
    while True:
        c1, c2, c3 = rng.uniform(0, np.pi / 4), rng.uniform(0, np.pi / 4), rng.uniform(-np.pi / 4, np.pi / 4)
        if c1 >= c2 >= abs(c3):
            return (2 * c1, 2 * c2, 2 * c3)


def crossmethod_suite(trials, seed=0):
    report = VerifyReport(LOCAL_EQUIV, END_TO_END_TOL)
    for i in range(trials):
        rng = trial_rng(seed, i)
        gamma = SCAN_GAMMAS[i % len(SCAN_GAMMAS)]
        h = random_chamber_point(rng)
        if i % 2:
            h = (h[0], h[1], 0.0)
        report = report.merge(cross_method_check(h, gamma, seed=int(rng.integers(2**32))))
    return report


SUITES = {
    "necessity": necessity_suite,
    "roundtrip": roundtrip_suite,
    "crossmethod": crossmethod_suite,
}


def run_suite(name, trials, seed=0):
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return suite(trials, seed)


__all__ = [
    "VerifyReport",
    "trial_rng",
    "circuit_residual",
    "check_circuit",
    "random_circuit",
    "necessity_scan",
    "cross_method_check",
    "random_chamber_point",
    "run_suite",
    "SUITES",
]
