"""Classifier and constructor tests against the theorem statements."""

import numpy as np
import pytest

from bjg.classify import (
    Answer,
    PointCertifier,
    c00_remark_witness,
    classify_left_symmetric,
    classify_right_symmetric,
    classify_smooth,
    construct_left_counterexample,
    construct_right_witness_nonfull,
    construct_right_witness_vanishing,
    function_right_symmetric_search,
    paper_example_functions,
    reproduce_paper_example,
    right_additivity_violation,
    verify_right_additivity,
)
from bjg.errors import (
    CapacityError,
    ConfigurationError,
    DomainError,
    PreconditionError,
)
from bjg.fspace import (
    CFunction,
    KModel,
    ckx_oracle,
    ckx_orthogonal_real,
    sup_norm,
)
from bjg.spaces import NormSpec, real_space

SUP = real_space(NormSpec.sup())
L2 = real_space(NormSpec.lp(2))
K3 = KModel.discrete(["a", "b", "c"])
K2 = KModel.discrete(["a", "b"])


# ---------------------------------------------------------------------------
# left symmetry
# ---------------------------------------------------------------------------


def test_left_hilbert_single_support_yes():
    f = CFunction.indicator(K3, L2, "a", [1.0, 0.5])
    c = classify_left_symmetric(f)
    assert c.answer is Answer.YES
    assert "hilbert" in c.reason


def test_left_two_support_no_with_witness():
    f = CFunction(K3, L2, {"a": [1.0, 0.0], "b": [0.5, 0.0], "c": [0.0, 0.0]})
    c = classify_left_symmetric(f)
    assert c.answer is Answer.NO
    assert c.witness is not None
    assert c.margins["violation_margin"] >= 1e-6


def test_left_sup_point_level_no():
    f = CFunction.indicator(K3, SUP, "a", [1.0, 0.5])
    c = classify_left_symmetric(f)
    assert c.answer is Answer.NO
    assert c.witness is not None
    # the lifted witness is supported at the same point
    gvals = c.witness["functions"]["g"]
    assert max(abs(v) for v in gvals["b"]) == 0
    assert max(abs(v) for v in gvals["c"]) == 0


def test_left_non_isolated_support_gate():
    k = KModel.sampled_interval(5)
    f = CFunction.indicator(k, L2, "t2", [1.0, 0.0])
    c = classify_left_symmetric(f)
    assert c.answer is Answer.NO
    assert "isolated" in c.reason
    assert c.witness is None  # no in-model witness exists for the topology gate


def test_left_zero_trivial():
    f = CFunction.constant(K3, L2, [0.0, 0.0])
    assert classify_left_symmetric(f).answer is Answer.YES


def test_left_unknown_without_certificate():
    # lp(3) has no closed certificate and the search finds nothing quickly
    f = CFunction.indicator(K3, real_space(NormSpec.lp(3)), "a", [1.0, 0.7])
    c = classify_left_symmetric(f, PointCertifier(trials=20, seed=0))
    assert c.answer in (Answer.NO, Answer.UNKNOWN)


def test_construct_left_counterexample_discrete():
    f = CFunction(K2, SUP, {"a": [1.0, 0.0], "b": [0.5, 0.0]})
    g = construct_left_counterexample(f, "a", "b")
    np.testing.assert_allclose(g.values["a"], [0.0, 0.0])
    np.testing.assert_allclose(g.values["b"], [0.5, 0.0])
    assert ckx_orthogonal_real(f, g).holds
    assert ckx_orthogonal_real(g, f).fails


def test_construct_left_counterexample_sampled_tent():
    k = KModel.sampled_interval(9)
    vals = {pt: np.array([1.0, 0.0]) for pt in k.points}
    vals["t8"] = np.array([0.4, 0.0])
    f = CFunction(k, SUP, vals)
    g = construct_left_counterexample(f, "t0", "t8")
    assert ckx_orthogonal_real(f, g).holds
    assert ckx_orthogonal_real(g, f).fails


def test_construct_left_preconditions():
    f = CFunction(K2, SUP, {"a": [1.0, 0.0], "b": [0.0, 0.0]})
    with pytest.raises(PreconditionError):
        construct_left_counterexample(f, "a", "b")  # f(k1) = 0
    with pytest.raises(PreconditionError):
        construct_left_counterexample(f, "a", "a")
    f2 = CFunction(K2, SUP, {"a": [1.0, 0.0], "b": [0.5, 0.0]})
    with pytest.raises(PreconditionError):
        construct_left_counterexample(f2, "b", "a")  # k0 not attaining


# ---------------------------------------------------------------------------
# right symmetry
# ---------------------------------------------------------------------------


def test_right_nonfull_no():
    f = CFunction(K3, L2, {"a": [1.0, 0.0], "b": [0.5, 0.0], "c": [0.9, 0.1]})
    c = classify_right_symmetric(f)
    assert c.answer is Answer.NO
    assert c.margins["violation_margin"] >= 1e-6


def test_right_vanishing_no():
    f = CFunction(K3, L2, {"a": [1.0, 0.0], "b": [0.0, 0.0], "c": [1.0, 0.0]})
    c = classify_right_symmetric(f)
    assert c.answer is Answer.NO
    assert "vanishes" in c.reason


def test_right_converse_yes():
    k = KModel.sampled_interval(7)
    f = CFunction.constant(k, L2, [0.6, 0.8])
    c = classify_right_symmetric(f)
    assert c.answer is Answer.YES


def test_right_paper_example_no_by_search():
    f, _ = paper_example_functions(5)
    c = classify_right_symmetric(f, trials=40, seed=3)
    assert c.answer is Answer.NO
    assert c.witness is not None


def test_right_zero_trivial():
    assert classify_right_symmetric(CFunction.constant(K3, L2, [0.0])).answer is Answer.YES


def test_construct_right_vanishing_values():
    f = CFunction(K2, L2, {"a": [0.0, 0.0], "b": [1.0, 0.0]})
    g = construct_right_witness_vanishing(f, "a", [1.0, 0.0])
    np.testing.assert_allclose(g.values["a"], [1.0, 0.0])
    np.testing.assert_allclose(g.values["b"], [1.0, 0.0])
    assert sup_norm(f.combine(g, -0.5)) == pytest.approx(0.5)
    with pytest.raises(PreconditionError):
        construct_right_witness_vanishing(f, "b", [1.0, 0.0])  # f(b) != 0
    with pytest.raises(PreconditionError):
        construct_right_witness_vanishing(f, "a", [2.0, 0.0])  # not unit


def test_construct_right_nonfull_values():
    f = CFunction(K2, SUP, {"a": [1.0, 0.0], "b": [0.5, 0.0]})
    g = construct_right_witness_nonfull(f, "b")
    np.testing.assert_allclose(g.values["a"], [1.0, 0.0])
    np.testing.assert_allclose(g.values["b"], [-1.0, 0.0])
    assert ckx_orthogonal_real(g, f).holds
    assert ckx_orthogonal_real(f, g).fails
    with pytest.raises(PreconditionError):
        construct_right_witness_nonfull(f, "a")  # a is attaining
    fpaper, _ = paper_example_functions(3)
    with pytest.raises(PreconditionError):
        construct_right_witness_nonfull(fpaper, "2")  # M_f = K
    fz = CFunction(K2, SUP, {"a": [1.0, 0.0], "b": [0.0, 0.0]})
    with pytest.raises(PreconditionError):
        construct_right_witness_nonfull(fz, "b")  # vanishing point


def test_function_right_search_errors():
    f = CFunction.constant(K2, SUP, [1.0, 0.0])
    with pytest.raises(DomainError):
        function_right_symmetric_search(f, trials=0)


# ---------------------------------------------------------------------------
# smoothness
# ---------------------------------------------------------------------------


def test_smooth_yes():
    f = CFunction(K3, L2, {"a": [1.0, 0], "b": [0.5, 0], "c": [0.25, 0]})
    c = classify_smooth(f)
    assert c.answer is Answer.YES


def test_smooth_two_point_no_with_violation():
    f = CFunction(K3, L2, {"a": [1.0, 0], "b": [1.0, 0], "c": [0.5, 0]})
    c = classify_smooth(f)
    assert c.answer is Answer.NO
    assert c.witness is not None  # right-additivity violating pair attached
    assert "functional_k0" in c.evidence
    g_j = c.witness["functions"]["g"]
    h_j = c.witness["functions"]["h"]
    g = CFunction(f.k, f.space, {p: np.array(v) for p, v in g_j.items()})
    h = CFunction(f.k, f.space, {p: np.array(v) for p, v in h_j.items()})
    v = verify_right_additivity(f, g, h)
    assert v.fails


def test_smooth_nonsmooth_value_no():
    f = CFunction.indicator(K3, SUP, "a", [1.0, 1.0])
    c = classify_smooth(f)
    assert c.answer is Answer.NO
    assert "not smooth" in c.reason
    assert c.witness is not None


def test_smooth_zero_rejected():
    with pytest.raises(DomainError):
        classify_smooth(CFunction.constant(K3, L2, [0.0]))


def test_right_additivity_vacuous_and_hilbert():
    f = CFunction.indicator(K3, L2, "a", [1.0, 0.0])
    g_bad = CFunction.constant(K3, L2, [1.0, 0.0])  # f not orthogonal to g
    h = CFunction.constant(K3, L2, [0.0, 1.0])
    v = verify_right_additivity(f, g_bad, h)
    assert v.holds and v.evidence.get("vacuous")
    rng = np.random.default_rng(0)
    for _ in range(20):
        def ortho():
            vals = {}
            for pt in K3.points:
                z = rng.uniform(-1, 1, 2)
                fv = f.values[pt]
                if np.abs(fv).max() > 0:
                    z = z - (np.dot(fv, z) / np.dot(fv, fv)) * fv
                vals[pt] = z
            return CFunction(K3, L2, vals)

        v = verify_right_additivity(f, ortho(), ortho())
        assert not v.fails


def test_right_additivity_violation_construction():
    # two attaining points
    f = CFunction(K3, L2, {"a": [1.0, 0], "b": [0, 1.0], "c": [0.5, 0]})
    pair = right_additivity_violation(f)
    assert pair is not None
    assert verify_right_additivity(f, *pair).fails
    # singleton attaining point with a non-smooth value
    f2 = CFunction.indicator(K3, SUP, "a", [1.0, 1.0])
    pair2 = right_additivity_violation(f2)
    assert pair2 is not None
    assert verify_right_additivity(f2, *pair2).fails
    # smooth instance: no construction available
    f3 = CFunction(K3, L2, {"a": [1.0, 0], "b": [0.5, 0], "c": [0.25, 0]})
    assert right_additivity_violation(f3) is None


def test_classification_scale_invariance():
    f = CFunction(K3, L2, {"a": [1.0, 0.0], "b": [0.5, 0.0], "c": [0.0, 0.0]})
    for alpha in (0.2, 5.0):
        fa = f.scaled(alpha)
        assert classify_left_symmetric(fa).answer is classify_left_symmetric(f).answer
        assert (
            classify_right_symmetric(fa).answer is classify_right_symmetric(f).answer
        )
        assert classify_smooth(fa).answer is classify_smooth(f).answer


def test_classification_json_shape():
    f = CFunction.indicator(K3, L2, "a", [1.0, 0.5])
    j = classify_left_symmetric(f).to_json()
    assert set(j) == {"answer", "theorem", "witness", "trials", "margins"}


# ---------------------------------------------------------------------------
# the worked example and the finite-support construction
# ---------------------------------------------------------------------------


def test_reproduce_paper_example_sampling_invariant():
    r2 = reproduce_paper_example(2)
    r201 = reproduce_paper_example(201)
    for key in ("f_norm", "g_norm", "min_g_plus_lam_f", "norm_f_minus_half_g"):
        assert r2[key] == pytest.approx(r201[key], abs=1e-12)
    assert r2["min_f_plus_lam_g"] == pytest.approx(r201["min_f_plus_lam_g"], abs=1e-9)
    assert r2["norm_f_minus_half_g"] == pytest.approx(0.75, abs=1e-12)
    with pytest.raises(DomainError):
        reproduce_paper_example(1)


def test_c00_single_point():
    spc = real_space(NormSpec.c00(8))
    f = CFunction(KModel.discrete(["a"]), spc, {"a": [1.0]})
    g, report = c00_remark_witness(f)
    np.testing.assert_allclose(g.values["a"], [1.0, 1.0])
    assert report["norm_f_minus_half_g"] == pytest.approx(0.5)
    assert report["g_norm"] == 1.0


def test_c00_trailing_zeros_trimmed():
    spc = real_space(NormSpec.c00(8))
    f = CFunction(KModel.discrete(["a"]), spc, {"a": [1.0, -1.0, 0.0]})
    g, report = c00_remark_witness(f)
    np.testing.assert_allclose(g.values["a"], [1.0, -1.0, 1.0])
    o = ckx_oracle(g, f)
    assert o.min_value >= 1 - 1e-9


def test_c00_capacity_and_norm_gate():
    spc = real_space(NormSpec.c00(3))
    f = CFunction(KModel.discrete(["a"]), spc, {"a": [0.5, 0.5, 1.0]})
    with pytest.raises(CapacityError):
        c00_remark_witness(f)
    spc8 = real_space(NormSpec.c00(8))
    f2 = CFunction(KModel.discrete(["a"]), spc8, {"a": [0.5]})
    with pytest.raises(PreconditionError):
        c00_remark_witness(f2)
    g, report = c00_remark_witness(f2, normalize_to_1=True)
    assert report["g_norm"] == 1.0
    with pytest.raises(ConfigurationError):
        c00_remark_witness(CFunction(K2, SUP, {"a": [1.0], "b": [1.0]}))
