"""Harness determinism, replayability and report-shape tests.

Full-scale suite runs live in test_acceptance; these stay small.
"""

import json

import numpy as np
import pytest

from bjg.errors import DomainError
from bjg.fspace import pointwise_norms
from bjg.harness import (
    SUITE_NAMES,
    SuiteConfig,
    random_instance,
    replay_trial,
    run_suite,
    trial_rng,
)
from bjg.spaces import norm


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite("nosuch")


def test_determinism():
    cfg = SuiteConfig(seed=123, trials=25)
    r1 = run_suite("oracle-agreement-real", cfg)
    r2 = run_suite("oracle-agreement-real", cfg)
    a, b = r1.to_json(), r2.to_json()
    a.pop("elapsedSeconds")
    b.pop("elapsedSeconds")
    assert json.dumps(a, sort_keys=True, default=str) == json.dumps(
        b, sort_keys=True, default=str
    )


def test_seed_changes_instances():
    a = random_instance("pair", SuiteConfig(seed=1), 5)
    b = random_instance("pair", SuiteConfig(seed=2), 5)
    assert a[1].shape != b[1].shape or not np.allclose(a[1], b[1])
    c = random_instance("pair", SuiteConfig(seed=1), 5)
    np.testing.assert_allclose(a[1], c[1])


def test_trial_rng_counter_scheme():
    assert trial_rng(7, 0).uniform() != trial_rng(7, 1).uniform()
    assert trial_rng(7, 3).uniform() == trial_rng(7, 3).uniform()


def test_forced_instances():
    cfg = SuiteConfig(seed=9)
    _, _, f = random_instance("function", cfg, 1, force="mf_full")
    pn = pointwise_norms(f)
    np.testing.assert_allclose(pn, np.ones_like(pn), atol=1e-12)
    _, _, f = random_instance("function", cfg, 2, force="mf_singleton")
    pn = sorted(pointwise_norms(f))
    assert pn[-1] == pytest.approx(1.0, abs=1e-12)
    if len(pn) > 1:
        assert pn[-2] <= 0.9 + 1e-12
    _, _, f = random_instance("function", cfg, 3, force="support_one")
    pn = pointwise_norms(f)
    assert (pn > 0).sum() == 1


def test_random_vector_rejection():
    cfg = SuiteConfig(seed=11)
    for i in range(50):
        space, x = random_instance("vector", cfg, i)
        assert norm(space.spec, x) >= 0.1 or np.abs(x).max() >= 0.1


def test_replay_matches():
    cfg = SuiteConfig(seed=31, trials=20)
    run_suite("oracle-agreement-real", cfg)  # deterministic baseline
    for i in (0, 7, 19):
        o1, d1 = replay_trial("oracle-agreement-real", cfg, i)
        o2, d2 = replay_trial("oracle-agreement-real", cfg, i)
        assert o1 == o2
        assert d1["verdict"] == d2["verdict"]
        assert d1["oracle_min"] == d2["oracle_min"]


def test_report_counts_add_up():
    for name in ("right-symmetry-necessary", "c00-remark", "smoothness-characterization"):
        r = run_suite(name, SuiteConfig(seed=5, trials=10))
        assert r.holds + r.fails + r.undetermined == r.trials
        assert r.trials == 10
        row = r.csv_row().split(",")
        assert row[0] == name and int(row[1]) == 10


def test_all_suite_names_runnable_small():
    cfg = SuiteConfig(seed=77, trials=4)
    for name in SUITE_NAMES:
        if name == "left-symmetry-exhaustive":
            continue  # exhaustive regime; covered by acceptance
        r = run_suite(name, cfg)
        assert r.trials > 0
        assert r.fails == 0, (name, r.counterexamples[:1])


def test_report_json_shape():
    r = run_suite("paper-example", SuiteConfig(seed=1))
    j = r.to_json()
    for key in ("name", "trials", "holds", "fails", "undetermined", "passed",
                "regime", "config", "counterexamples"):
        assert key in j
    assert j["regime"] == "exhaustive"
    assert j["config"]["seed"] == 1
