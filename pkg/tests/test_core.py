"""Point-level predicate tests: orthogonality, cones, directions,
smoothness, searches, and the oracle-agreement invariants."""

import numpy as np
import pytest

from bjg.core import (
    DirectionGrid,
    GridSet,
    directional_orthogonal,
    in_minus_cone,
    in_plus_cone,
    in_u_minus_cone,
    in_u_plus_cone,
    is_bj_orthogonal,
    is_smooth_point,
    lambda_sweep_oracle,
    left_symmetric_search,
    orthogonal_shift,
    right_symmetric_search,
)
from bjg.errors import ConfigurationError, DomainError
from bjg.spaces import NormSpec, complex_space, norm, real_space

SUP = real_space(NormSpec.sup())
L1 = real_space(NormSpec.lp(1))
L2 = real_space(NormSpec.lp(2))
L3 = real_space(NormSpec.lp(3))
CSUP = complex_space(NormSpec.sup())
CL2 = complex_space(NormSpec.lp(2))
C00 = real_space(NormSpec.c00(10))


def rand_vec(rng, dim, complex_field=False, min_norm=0.1):
    while True:
        v = rng.uniform(-1, 1, dim)
        if complex_field:
            v = v + 1j * rng.uniform(-1, 1, dim)
        if np.abs(v).max() >= min_norm:
            return v


# ---------------------------------------------------------------------------
# orthogonality
# ---------------------------------------------------------------------------


def test_bj_euclidean():
    assert is_bj_orthogonal(L2, [1, 0], [0, 1]).holds


def test_bj_sup_fails_with_witness():
    v = is_bj_orthogonal(SUP, [1, 1], [0.5, 1])
    assert v.fails
    lam = v.witness["lambda"]
    val = norm(SUP.spec, np.array([1, 1]) + lam * np.array([0.5, 1]))
    assert val < 1 - 1e-9  # witness re-checks against the defining inequality
    assert val == pytest.approx(v.witness["value"], abs=1e-12)
    # the convex minimum along the pencil, frozen from the sweep oracle
    assert v.witness["value"] == pytest.approx(1 / 3, abs=1e-9)
    assert lam == pytest.approx(-4 / 3, abs=1e-6)


def test_bj_paper_orientation_holds():
    # the worked example's point inequality: ||g(2) + lam f(2)|| >= 1
    assert is_bj_orthogonal(SUP, [0.5, 1], [1, 0]).holds


def test_bj_zero_universal():
    rng = np.random.default_rng(0)
    for space in (SUP, L1, L2):
        y = rand_vec(rng, 3)
        assert is_bj_orthogonal(space, [0, 0, 0], y).holds
        assert is_bj_orthogonal(space, y, [0, 0, 0]).holds


def test_bj_dimension_mismatch():
    with pytest.raises(ConfigurationError):
        is_bj_orthogonal(SUP, [1, 0], [1, 0, 0])


# ---------------------------------------------------------------------------
# cones
# ---------------------------------------------------------------------------


def test_cones_l1_basis():
    assert in_plus_cone(L1, [1, 0], [0, 1]).holds
    assert in_minus_cone(L1, [1, 0], [0, 1]).holds


def test_cones_sup_example():
    assert in_plus_cone(SUP, [1, 1], [0.5, 1]).holds
    v = in_minus_cone(SUP, [1, 1], [0.5, 1])
    assert v.fails
    lam = v.witness["lambda"]
    assert lam < 0
    assert norm(SUP.spec, np.array([1, 1]) + lam * np.array([0.5, 1])) < 1 - 1e-9


def test_cones_zero_direction():
    rng = np.random.default_rng(1)
    for space in (SUP, L1, L2):
        x = rand_vec(rng, 3)
        assert in_plus_cone(space, x, np.zeros(3)).holds
        assert in_minus_cone(space, x, np.zeros(3)).holds


def test_cones_reject_complex():
    with pytest.raises(ConfigurationError):
        in_plus_cone(CL2, [1 + 0j], [1j])
    with pytest.raises(ConfigurationError):
        in_u_plus_cone(L2, [1.0], [1.0], 1)


def test_u_cones():
    # any u: ||x + u a y||^2 = 1 + a^2 in the Hilbert case
    for u in (1, 1j, np.exp(1j * 0.3)):
        assert in_u_plus_cone(CL2, [1, 0], [0, 1], u).holds
        assert in_u_minus_cone(CL2, [1, 0], [0, 1], u).holds
    # dimension 1: x + i*alpha*(i) = 1 - alpha dips to 0 at alpha = 1
    v = in_u_plus_cone(CL2, [1 + 0j], [1j], 1j)
    assert v.fails
    assert v.witness["alpha"] == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(DomainError):
        in_u_plus_cone(CL2, [1 + 0j], [1j], 0.5)


# ---------------------------------------------------------------------------
# directional orthogonality
# ---------------------------------------------------------------------------


def test_directional_real_reduction():
    rng = np.random.default_rng(2)
    for _ in range(50):
        x, y = rand_vec(rng, 3), rand_vec(rng, 3)
        base = is_bj_orthogonal(SUP, x, y).status
        assert directional_orthogonal(SUP, x, y, 1).status is base
        assert directional_orthogonal(SUP, x, y, -1).status is base


def test_directional_complex():
    assert directional_orthogonal(CL2, [1, 0], [1j, 0], 1).holds
    v = directional_orthogonal(CL2, [1, 0], [1j, 0], 1j)
    assert v.fails
    assert v.witness["alpha"] == pytest.approx(1.0, abs=1e-6)


def test_directional_grid_equivalence():
    rng = np.random.default_rng(3)
    grid = DirectionGrid(360, GridSet.FULL_CIRCLE)
    for _ in range(10):
        x, y = rand_vec(rng, 2, True), rand_vec(rng, 2, True)
        overall = is_bj_orthogonal(CL2, x, y, grid=grid)
        per_t = all(
            directional_orthogonal(CL2, x, y, t).holds for t in grid.values()[::30]
        )
        if overall.holds:
            assert per_t


def test_directional_rejects_nonreal_t_in_real_space():
    with pytest.raises(DomainError):
        directional_orthogonal(SUP, [1, 0], [0, 1], 1j)


# ---------------------------------------------------------------------------
# the sweep oracle
# ---------------------------------------------------------------------------


def test_oracle_sup_example():
    o = lambda_sweep_oracle(SUP, [1, 1], [0.5, 1], sweep_range=4.0)
    assert o.min_value == pytest.approx(1 / 3, abs=1e-9)
    assert o.argmin == pytest.approx(-4 / 3, abs=1e-6)


def test_oracle_trivial_cases():
    o = lambda_sweep_oracle(SUP, [1, 1], [0, 0])
    assert o.min_value == pytest.approx(1.0)
    o = lambda_sweep_oracle(L2, [1, 0], [1, 0])
    assert o.min_value == pytest.approx(0.0, abs=1e-9)
    assert o.argmin == pytest.approx(-1.0, abs=1e-6)


def test_oracle_errors():
    with pytest.raises(DomainError):
        lambda_sweep_oracle(SUP, [1, 0], [0, 1], sweep_range=-1.0)
    with pytest.raises(DomainError):
        lambda_sweep_oracle(SUP, [1, 0], [0, 1], grid_points=2)


def test_oracle_agreement_real():
    """1000 seeded pairs: predicate and oracle never contradict."""
    rng = np.random.default_rng(42)
    spaces = (SUP, L1, L2)
    undetermined = 0
    for i in range(1000):
        space = spaces[i % 3]
        dim = int(rng.integers(1, 7))
        x, y = rand_vec(rng, dim), rand_vec(rng, dim)
        v = is_bj_orthogonal(space, x, y)
        o = lambda_sweep_oracle(space, x, y)
        nx = norm(space.spec, x)
        if v.undetermined:
            undetermined += 1
            continue
        if v.holds:
            assert o.min_value >= nx - 10 * max(1e-9 * nx, 1e-12), (space, x, y)
        else:
            assert o.min_value < nx - 1e-12, (space, x, y)
    assert undetermined < 20


def test_oracle_agreement_complex():
    rng = np.random.default_rng(43)
    spaces = (CSUP, CL2, complex_space(NormSpec.lp(1)))
    undetermined = 0
    for i in range(300):
        space = spaces[i % 3]
        dim = int(rng.integers(1, 5))
        x, y = rand_vec(rng, dim, True), rand_vec(rng, dim, True)
        v = is_bj_orthogonal(space, x, y)
        o = lambda_sweep_oracle(space, x, y)
        nx = norm(space.spec, x)
        if v.undetermined:
            undetermined += 1
            continue
        if v.holds:
            assert o.min_value >= nx - 10 * max(1e-9 * nx, 1e-12)
        else:
            assert o.min_value < nx - 1e-12
    assert undetermined < 6


def test_cone_decomposition():
    rng = np.random.default_rng(44)
    for i in range(300):
        space = (SUP, L1, L2)[i % 3]
        dim = int(rng.integers(1, 6))
        x, y = rand_vec(rng, dim), rand_vec(rng, dim)
        full = is_bj_orthogonal(space, x, y)
        plus = in_plus_cone(space, x, y)
        minus = in_minus_cone(space, x, y)
        if not (full.undetermined or plus.undetermined or minus.undetermined):
            assert full.holds == (plus.holds and minus.holds)


def test_verdict_homogeneity():
    rng = np.random.default_rng(45)
    for i in range(100):
        space = (SUP, L1, L2)[i % 3]
        x, y = rand_vec(rng, 3), rand_vec(rng, 3)
        base = is_bj_orthogonal(space, x, y).status
        for a, b in ((2.0, 0.5), (0.1, 7.0)):
            assert is_bj_orthogonal(space, a * x, b * y).status is base
    # unit-modulus invariance in the complex case
    for _ in range(30):
        x, y = rand_vec(rng, 2, True), rand_vec(rng, 2, True)
        base = is_bj_orthogonal(CL2, x, y).status
        theta = rng.uniform(0, 2 * np.pi)
        assert is_bj_orthogonal(CL2, np.exp(1j * theta) * x, y).status is base


# ---------------------------------------------------------------------------
# smoothness
# ---------------------------------------------------------------------------


def test_smooth_examples():
    rng = np.random.default_rng(46)
    for _ in range(20):
        assert is_smooth_point(L2, rand_vec(rng, 4)).holds
    v = is_smooth_point(SUP, [1, 1])
    assert v.fails
    w = np.asarray(v.witness["direction"], float)
    # the witness direction genuinely splits the one-sided derivatives
    from bjg.spaces import one_sided_derivatives

    d = one_sided_derivatives(SUP.spec, np.array([1.0, 1.0]), w)
    assert d.plus_mid - d.minus_mid > 1e-9
    assert is_smooth_point(SUP, [1, 0.5]).holds
    with pytest.raises(DomainError):
        is_smooth_point(SUP, [0, 0])


def test_smooth_fast_vs_sampled():
    """Fast path and direction-sampled path agree on 500 seeded points per norm."""
    rng = np.random.default_rng(47)
    for space in (SUP, L1, L2):
        for i in range(500):
            dim = int(rng.integers(1, 5))
            x = rand_vec(rng, dim)
            if i % 5 == 0 and dim >= 2:
                x[1] = x[0]  # force sup ties / duplicated coordinates
            if i % 7 == 0:
                x[dim - 1] = 0.0  # force lp(1) kinks
            if np.abs(x).max() < 0.1:
                continue
            fast = is_smooth_point(space, x, method="fast")
            sampled = is_smooth_point(space, x, method="sampled", samples=32, seed=i)
            assert fast.status is sampled.status, (space.spec, x)


def test_smooth_lp_general_always():
    rng = np.random.default_rng(48)
    for _ in range(20):
        assert is_smooth_point(L3, rand_vec(rng, 4)).holds


def test_smooth_complex_sup():
    assert is_smooth_point(CSUP, [1 + 1j, 0.5]).holds
    assert is_smooth_point(CSUP, np.array([1 + 0j, 1j])).fails


# ---------------------------------------------------------------------------
# symmetry searches
# ---------------------------------------------------------------------------


def test_orthogonal_shift_exact():
    rng = np.random.default_rng(49)
    for space in (SUP, L1, L2):
        for _ in range(50):
            x, z = rand_vec(rng, 4), rand_vec(rng, 4)
            y = orthogonal_shift(space, x, z)
            assert is_bj_orthogonal(space, x, y).holds


def test_left_search_hilbert_none():
    rng = np.random.default_rng(50)
    for _ in range(10):
        x = rand_vec(rng, 3)
        assert left_symmetric_search(L2, x, trials=60, seed=1) is None
        assert right_symmetric_search(L2, x, trials=60, seed=1) is None


def test_left_search_sup_finds():
    hit = left_symmetric_search(SUP, [1, 0.5], trials=100, seed=0)
    assert hit is not None
    assert hit.holds.holds and hit.fails.fails
    # both sides re-verified through the independent oracle
    o1 = lambda_sweep_oracle(SUP, [1, 0.5], hit.y)
    assert o1.min_value >= 1 - 1e-9
    o2 = lambda_sweep_oracle(SUP, hit.y, [1, 0.5])
    assert o2.min_value < norm(SUP.spec, hit.y) - 1e-9


def test_right_search_c00_tail_bump():
    # the finite-support construction y = x + e_{n+1}, specialised to a point
    rng = np.random.default_rng(51)
    for _ in range(10):
        n = int(rng.integers(1, 6))
        x = rand_vec(rng, n)
        x = x / norm(C00.spec, x)
        y = np.concatenate([x, [1.0]])
        assert is_bj_orthogonal(C00, y, x).holds
        assert is_bj_orthogonal(C00, x, y).fails
        hit = right_symmetric_search(C00, x, trials=50, seed=2)
        assert hit is not None


def test_right_search_sup_e1_evidence_only():
    # outcome recorded as evidence, not ground truth
    hit = right_symmetric_search(SUP, [1, 0], trials=120, seed=3)
    if hit is not None:
        assert hit.holds.holds and hit.fails.fails


def test_search_errors():
    with pytest.raises(DomainError):
        left_symmetric_search(SUP, [1, 0], trials=0)
    with pytest.raises(DomainError):
        right_symmetric_search(SUP, [0, 0], trials=10)


def test_fails_witnesses_recheck():
    """Every Fails verdict must violate the defining inequality at its witness."""
    rng = np.random.default_rng(52)
    checked = 0
    for i in range(200):
        space = (SUP, L1, L2, L3)[i % 4]
        x, y = rand_vec(rng, 3), rand_vec(rng, 3)
        v = is_bj_orthogonal(space, x, y)
        if not v.fails:
            continue
        checked += 1
        lam = v.witness["lambda"]
        nx = norm(space.spec, x)
        assert norm(space.spec, x + lam * y) < nx - max(1e-9 * nx, 1e-12)
    assert checked > 50
