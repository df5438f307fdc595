"""Desk-scale numerical toolkit for Birkhoff-James orthogonality, symmetric
points and smooth points in sup-norm spaces of vector-valued functions on
finite models, with every characterization cross-checked against an
independent brute-force oracle."""

from .backend import backend_name
from .core import (
    DEFAULT_T_GRID,
    DEFAULT_U_GRID,
    DirectionGrid,
    GridSet,
    OracleResult,
    SearchHit,
    Status,
    Verdict,
    directional_orthogonal,
    in_minus_cone,
    in_plus_cone,
    in_u_minus_cone,
    in_u_plus_cone,
    is_bj_orthogonal,
    is_smooth_point,
    lambda_sweep_oracle,
    left_symmetric_search,
    right_symmetric_search,
)
from .classify import (
    Answer,
    Classification,
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
from .errors import (
    BjgError,
    CapacityError,
    ConfigurationError,
    DataError,
    DomainError,
    PreconditionError,
    VerificationError,
)
from .fspace import (
    CFunction,
    KModel,
    attaining_gap,
    ckx_oracle,
    ckx_orthogonal_complex,
    ckx_orthogonal_directional,
    ckx_orthogonal_real,
    instance_from_json,
    instance_to_json,
    norm_attaining_set,
    pointwise_norms,
    sup_norm,
)
from .harness import (
    SUITE_NAMES,
    SuiteConfig,
    SuiteReport,
    random_instance,
    replay_trial,
    run_all,
    run_suite,
)
from .spaces import (
    DEFAULT_TOL,
    NormSpec,
    NormedSpace,
    OneSidedDerivatives,
    ScalarField,
    Tolerances,
    complex_space,
    dual_norm,
    norm,
    one_sided_derivatives,
    real_space,
    support_functional,
)

__version__ = "0.1.0"
