import json

import numpy as np
import pytest

from weylsynth.errors import NonUnitaryInputError, OutOfRegionError, UnsupportedBaseError
from weylsynth.matcore import CNOT, LocalLayer, canonical_gate, haar_random_u2, haar_random_u4, is_unitary, tensor
from weylsynth.synth.circuit import BaseGate, Circuit, evaluate
from weylsynth.synth.supercontrolled import synth_supercontrolled3
from weylsynth.synth.universal import synth_universal
from weylsynth.verify import (
    VerifyReport,
    check_circuit,
    cross_method_check,
    necessity_scan,
    random_circuit,
    run_suite,
    trial_rng,
)


def test_check_circuit_pass_and_fail():
    c = synth_supercontrolled3(0.4, 0.2, -0.1, np.pi / 8)
    assert check_circuit(c, canonical_gate(0.4, 0.2, -0.1), tol=1e-8).passed
    ident = Circuit(BaseGate.controlled(0.3), [LocalLayer.identity()])
    bad = check_circuit(ident, CNOT)
    assert not bad.passed
    assert bad.max_residual == pytest.approx(0.5)
    assert len(bad.failures) == 1


def test_check_circuit_against_own_evaluation():
    c = random_circuit(BaseGate.controlled(0.7), 3, 1)
    assert check_circuit(c, evaluate(c)).max_residual < 1e-15


def test_local_mode_ignores_dressing():
    c = random_circuit(BaseGate.controlled(0.7), 3, 2)
    rng = np.random.default_rng(0)
    dressed = tensor(haar_random_u2(rng), haar_random_u2(rng)) @ evaluate(c) @ tensor(haar_random_u2(rng), haar_random_u2(rng))
    assert check_circuit(c, dressed, "local_equiv", 1e-9).passed
    assert not check_circuit(c, dressed, "exact_phase", 1e-9).passed


def test_check_circuit_rejects_non_unitary_target():
    c = random_circuit(BaseGate.controlled(0.7), 1, 0)
    with pytest.raises(NonUnitaryInputError):
        check_circuit(c, np.ones((4, 4)))


def test_random_circuit():
    base = BaseGate.controlled(0.4)
    a, b = random_circuit(base, 3, 7), random_circuit(base, 3, 7)
    assert all(np.array_equal(x.a, y.a) and np.array_equal(x.b, y.b) for x, y in zip(a.layers, b.layers))
    assert random_circuit(base, 0, 1).n == 0
    assert is_unitary(evaluate(a))


def test_report_invariants_and_merge():
    r = VerifyReport("exact_phase", 1e-8)
    r.record(1, "ok", 1e-12)
    r.record(2, "bad", 1e-3)
    r.record(3, "ok", 1e-10)
    assert r.trials == 3 and r.max_residual == 1e-3
    assert [f[0] for f in r.failures] == [2]
    s = VerifyReport("exact_phase", 1e-8)
    s.record(4, "nan", float("nan"))
    m = r.merge(s)
    assert m.trials == 4 and m.max_residual == float("inf") and len(m.failures) == 2
    doc = json.loads(m.to_json())
    assert doc["trials"] == 4 and not doc["passed"]
    with pytest.raises(ValueError):
        r.merge(VerifyReport("region", 1e-9))


def test_merge_is_associative():
    reports = []
    for k in range(3):
        r = VerifyReport("local_equiv", 1e-8)
        r.record(k, "x", 10.0 ** -(k + 5))
        reports.append(r)
    left = reports[0].merge(reports[1]).merge(reports[2])
    right = reports[0].merge(reports[1].merge(reports[2]))
    assert left.to_dict() == right.to_dict()


@pytest.mark.parametrize("gamma", [np.pi / 2, np.pi / 4, 0.01])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_necessity_scan(gamma, n):
    report = necessity_scan(BaseGate.controlled(gamma), n, 150, seed=3)
    assert report.passed, str(report)
    assert report.trials == 150


def test_necessity_scan_detects_violations():
    # a super controlled gate used where the controlled region is assumed
    class Fake:
        kind = "controlled"
        param = 0.1

        @staticmethod
        def matrix():
            return canonical_gate(np.pi / 4, 0.3, 0)

        def same_as(self, other):
            return other is self
    report = necessity_scan(Fake(), 2, 5, seed=0)
    assert not report.passed
    assert report.failures[0][0] == (0, 0)


def test_necessity_scan_is_reproducible():
    a = necessity_scan(BaseGate.controlled(0.3), 3, 20, seed=5)
    b = necessity_scan(BaseGate.controlled(0.3), 3, 20, seed=5)
    assert a.to_dict() == b.to_dict()


def test_trial_rng_matches_spawn():
    child = np.random.SeedSequence(9).spawn(4)[3]
    assert np.random.default_rng(child).random() == trial_rng(9, 3).random()


def test_necessity_requires_controlled():
    with pytest.raises(UnsupportedBaseError):
        necessity_scan(BaseGate.supercontrolled(0.1), 2, 1)


def test_cross_method_agree():
    r = cross_method_check((1.0, 0.0, 0.0), np.pi / 2, seed=1)
    assert r.passed and r.trials >= 3
    r = cross_method_check((0.9, 0.4, 0.0), np.pi / 4, seed=2, n=4)
    assert r.passed and r.trials == 2


def test_cross_method_empty_intersection():
    with pytest.raises(OutOfRegionError):
        cross_method_check((1.2, 0.3, 0.2), 0.5, n=2)
    with pytest.raises(OutOfRegionError):
        cross_method_check((0.2, 0.5, 0.0), 0.5)


@pytest.mark.parametrize("suite", ["necessity", "roundtrip", "crossmethod"])
def test_suites(suite):
    r = run_suite(suite, 12, seed=4)
    assert r.passed, str(r)
    assert r.to_dict() == run_suite(suite, 12, seed=4).to_dict()


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 1)


def test_haar_roundtrip_exact():
    t = haar_random_u4(0)
    assert check_circuit(synth_universal(t, BaseGate.controlled(np.pi / 3)), t, tol=1e-12).passed
