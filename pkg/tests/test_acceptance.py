"""Acceptance criteria, one test per criterion at its stated tolerance.

Each test prints one PASS line (visible under pytest -s / -rP); a failed
assertion is the FAIL line.  Runs on the default (numba) backend; total
budget is a few minutes on a laptop including JIT compilation.
"""

import time

import numpy as np
import pytest

from bjg.classify import paper_example_functions
from bjg.core import lambda_sweep_oracle
from bjg.fspace import (
    ckx_oracle,
    ckx_orthogonal_real,
    norm_attaining_set,
    sup_norm,
)
from bjg.harness import SuiteConfig, run_suite
from bjg.spaces import NormSpec, norm, one_sided_derivatives, real_space


def _warm_kernels():
    # trigger JIT compilation outside the timed sections
    sp = real_space(NormSpec.sup())
    lambda_sweep_oracle(sp, [1.0, 1.0], [0.5, 1.0])
    f, g = paper_example_functions(2)
    ckx_oracle(f, g)


_warm_kernels()


def _ok(n, name):
    print(f"ACCEPTANCE {n} {name}: PASS")


def test_acceptance_1_paper_example_reproduction():
    """K = [0,1] u {2}, f = (1,1)/(1,0), g = (1/2,1) under (R^2, max)."""
    for samples in (2, 33):
        f, g = paper_example_functions(samples)
        assert sup_norm(f) == pytest.approx(1.0, abs=1e-12)
        assert sup_norm(g) == pytest.approx(1.0, abs=1e-12)
        assert norm_attaining_set(f) == list(f.k.points)
        o_gf = ckx_oracle(g, f)
        assert o_gf.min_value == pytest.approx(1.0, abs=1e-9)
        # the construction's displayed value: ||f - g/2|| = 3/4 < 1 = ||f||
        assert sup_norm(f.combine(g, -0.5)) == pytest.approx(0.75, abs=1e-9)
        o_fg = ckx_oracle(f, g)
        assert o_fg.min_value <= 0.75 + 1e-9
        # the honest convex minimum sits lower: 2/3 at lambda = -2/3
        assert o_fg.min_value == pytest.approx(2.0 / 3.0, abs=1e-9)
        assert o_fg.argmin == pytest.approx(-2.0 / 3.0, abs=1e-6)
        assert ckx_orthogonal_real(g, f).holds
        assert ckx_orthogonal_real(f, g).fails
    _ok(1, "paper example reproduction")


def test_acceptance_2_oracle_agreement_real():
    """1000 seeded instances, |K| <= 6, dim <= 4, {sup, l1, l2}: 0
    contradictions, undetermined < 2%, under 60 s."""
    start = time.perf_counter()
    r = run_suite("oracle-agreement-real", SuiteConfig(seed=42, trials=1000))
    elapsed = time.perf_counter() - start
    assert r.trials == 1000
    assert r.fails == 0, r.counterexamples[:1]
    assert r.undetermined_rate < 0.02
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    _ok(2, f"oracle agreement real ({elapsed:.1f}s)")


def test_acceptance_3_oracle_agreement_complex():
    """500 instances, U-grid 180 / T-grid 360: 0 contradictions."""
    r = run_suite(
        "oracle-agreement-complex",
        SuiteConfig(seed=42, trials=500, u_grid=180, t_grid=360),
    )
    assert r.trials == 500
    assert r.fails == 0, r.counterexamples[:1]
    assert r.undetermined_rate < 0.02
    _ok(3, "oracle agreement complex")


def test_acceptance_4_left_symmetry_exhaustive():
    """|K| in {2,3}, dim in {1,2}, coords in {-1,-1/2,0,1/2,1}, Hilbert X:
    Yes exactly on nonzero single-point-supported functions."""
    r = run_suite("left-symmetry-exhaustive", SuiteConfig(seed=42))
    assert r.exhaustive
    assert r.trials == 16396  # 5^2 + 5^4 + 5^3 + 5^6 minus the 4 zero functions
    assert r.fails == 0, r.counterexamples[:1]
    _ok(4, f"left symmetry exhaustive ({r.trials} instances)")


def test_acceptance_5_right_symmetry_necessary():
    """200 f with M_f != K (margin >= 0.1): No with verified witnesses."""
    r = run_suite("right-symmetry-necessary", SuiteConfig(seed=42, trials=200))
    assert r.trials == 200
    assert r.fails == 0, r.counterexamples[:1]
    assert r.undetermined == 0
    _ok(5, "right symmetry necessary condition")


def test_acceptance_6_right_symmetry_converse():
    """200 f on connected models with M_f = K and Hilbert values; 1000
    projected g with g _|_ f: f _|_ g in every case."""
    r = run_suite("right-symmetry-converse", SuiteConfig(seed=42, trials=200))
    assert r.trials == 200
    assert r.fails == 0, r.counterexamples[:1]
    _ok(6, "right symmetry partial converse")


def test_acceptance_7_smoothness_characterization():
    """200 singleton-M_f instances -> Yes with 10^4 clean right-additivity
    trials; 200 two-point instances -> No with a violation or certificate
    in >= 95% (the remainder is logged, not failed)."""
    r = run_suite("smoothness-characterization", SuiteConfig(seed=42, trials=400))
    assert r.trials == 400
    assert r.fails == 0, r.counterexamples[:1]
    assert r.undetermined_rate <= 0.05
    _ok(7, f"smoothness characterization (unresolved: {r.undetermined})")


def test_acceptance_8_c00_remark():
    """100 random unit-norm finite-support functions: witness verified."""
    r = run_suite("c00-remark", SuiteConfig(seed=42, trials=100))
    assert r.trials == 100
    assert r.fails == 0, r.counterexamples[:1]
    _ok(8, "finite-support construction")


def test_acceptance_9_numerical_foundation():
    """1000 random pairs, dims <= 8: exact fast-path derivatives inside the
    generic brackets, final bracket width <= 1e-6 ||x||."""
    rng = np.random.default_rng(42)
    specs = (NormSpec.sup(), NormSpec.lp(1), NormSpec.lp(2))
    for i in range(1000):
        spec = specs[i % 3]
        dim = int(rng.integers(1, 9))
        x = rng.uniform(-1, 1, dim)
        while np.abs(x).max() < 0.1:
            x = rng.uniform(-1, 1, dim)
        y = rng.uniform(-1, 1, dim)
        exact = one_sided_derivatives(spec, x, y, method="auto")
        assert exact.method == "exact"
        bracket = one_sided_derivatives(spec, x, y, method="bracket")
        nx = norm(spec, x)
        assert bracket.rho_minus[0] - 1e-12 <= exact.minus_mid, (spec.variant, x, y)
        assert exact.plus_mid <= bracket.rho_plus[1] + 1e-12, (spec.variant, x, y)
        assert bracket.width <= 1e-6 * nx, (spec.variant, bracket.width / nx, x, y)
    _ok(9, "one-sided derivative brackets vs fast paths")
