"""Theorem-level classifiers: left/right symmetry and smoothness of
elements of C(K,X), witness constructors, the worked max-norm example and
the finite-support-space construction.

Every No answer is backed by a numerically re-verified counterexample
(except the isolation-flag gate, where the finite model cannot host one);
Yes answers name the hypothesis that licenses them; everything else stays
Unknown with the trial budget reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .core import (
    SearchHit,
    Status,
    Verdict,
    is_bj_orthogonal,
    is_smooth_point,
    left_symmetric_search,
    orthogonal_shift,
    right_symmetric_search,
)
from .errors import (
    CapacityError,
    ConfigurationError,
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
    ckx_orthogonal_real,
    instance_to_json,
    norm_attaining_set,
    pointwise_norms,
    sup_norm,
)
from .spaces import (
    DEFAULT_TOL,
    NormSpec,
    Tolerances,
    as_vector,
    norm,
    one_sided_derivatives,
    real_space,
    support_functional,
)


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class Classification:
    answer: Answer
    reason: str
    witness: dict | None = None  # instance JSON carrying the counterexample
    trials: int = 0
    margins: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "answer": self.answer.value,
            "theorem": self.reason,
            "witness": self.witness,
            "trials": self.trials,
            "margins": self.margins,
        }


# ---------------------------------------------------------------------------
# point-level symmetry certificates
# ---------------------------------------------------------------------------


@dataclass
class Certificate:
    certified: bool | None  # True = symmetric, False = counterexample, None = unknown
    kind: str
    counterexample: SearchHit | None = None
    trials: int = 0


@dataclass
class PointCertifier:
    """Decides left/right symmetry of a point of X, honestly labelled.

    Certificate kinds: "dim-1" and "hilbert" are genuine proofs; "grid" is
    an exhaustive check at the configured resolution (reported as
    grid-certified, not a proof); "search" is a seeded semidecision.
    """

    trials: int = 400
    seed: int = 0
    grid_resolution: float | None = None
    tol: Tolerances = DEFAULT_TOL

    def certify(self, space, x, side: str) -> Certificate:
        xv = as_vector(x, space.field)
        if xv.shape[0] == 1:
            return Certificate(True, "dim-1")
        if space.spec.variant == "lp" and space.spec.p == 2.0:
            return Certificate(True, "hilbert")
        if self.grid_resolution and not space.is_complex:
            return self._grid(space, xv, side)
        search = left_symmetric_search if side == "left" else right_symmetric_search
        hit = search(space, xv, trials=self.trials, seed=self.seed, tol=self.tol)
        if hit is not None:
            return Certificate(False, "search", hit, hit.trials_used)
        return Certificate(None, "search", None, self.trials)

    def _grid(self, space, xv, side) -> Certificate:
        r = float(self.grid_resolution)
        axis = np.arange(-1.0, 1.0 + 0.5 * r, r)
        grids = np.meshgrid(*([axis] * xv.shape[0]), indexing="ij")
        count = 0
        for y in np.stack([g.ravel() for g in grids], axis=1):
            if np.abs(y).max() == 0.0:
                continue
            count += 1
            a = is_bj_orthogonal(space, xv, y, tol=self.tol)
            b = is_bj_orthogonal(space, y, xv, tol=self.tol)
            first, second = (a, b) if side == "left" else (b, a)
            if first.holds and second.fails:
                hit = SearchHit(y, first, second, count, f"{side} grid counterexample")
                return Certificate(False, "grid", hit, count)
        return Certificate(True, "grid", None, count)


# ---------------------------------------------------------------------------
# shared verification helpers
# ---------------------------------------------------------------------------


def _verify_defeat(f: CFunction, g: CFunction, orient: str, tol: Tolerances):
    """Oracle-check a symmetry defeat and return its margins.

    orient "left": f _|_ g must hold and g _|_ f must fail.
    orient "right": g _|_ f must hold and f _|_ g must fail.
    """
    if orient == "left":
        hold_pair, fail_pair = (f, g), (g, f)
    else:
        hold_pair, fail_pair = (g, f), (f, g)
    # 257-point scan suffices: ternary refinement is exact on convex maps
    o_hold = ckx_oracle(*hold_pair, grid_points=257, tol=tol)
    o_fail = ckx_oracle(*fail_pair, grid_points=257, tol=tol)
    n_hold = sup_norm(hold_pair[0])
    n_fail = sup_norm(fail_pair[0])
    hold_margin = o_hold.min_value - n_hold
    fail_margin = n_fail - o_fail.min_value
    if hold_margin < -tol.for_scale(n_hold):
        raise VerificationError(
            f"constructed witness lost the orthogonal side by {-hold_margin}"
        )
    if fail_margin <= tol.for_scale(n_fail):
        raise VerificationError(
            f"constructed witness shows no violation (deficit {fail_margin})"
        )
    return {
        "holds_min": o_hold.min_value,
        "fails_min": o_fail.min_value,
        "fails_lambda": o_fail.argmin if not isinstance(o_fail.argmin, complex)
        else [o_fail.argmin.real, o_fail.argmin.imag],
        "violation_margin": fail_margin,
    }


def _support_points(f: CFunction, tol: Tolerances) -> list[str]:
    pn = pointwise_norms(f)
    nf = pn.max()
    return [pt for pt, v in zip(f.k.points, pn) if v > tol.for_scale(nf)]


# ---------------------------------------------------------------------------
# left symmetry
# ---------------------------------------------------------------------------


def construct_left_counterexample(
    f: CFunction, k0: str, k1: str, tol: Tolerances = DEFAULT_TOL
) -> CFunction:
    """g = h*f with a bump h peaking at k1 and vanishing near k0.

    The finite-model bump is an indicator of {k1} on discrete models and a
    tent around k1 (vanishing at k0) on sampled ones.  Guarantees f _|_ g
    (g vanishes on a point of M_f) and not g _|_ f; both oracle-verified
    before returning.
    """
    if k0 == k1:
        raise PreconditionError("k1 must differ from k0")
    if k0 not in norm_attaining_set(f, tol.rel):
        raise PreconditionError(f"{k0!r} is not in the norm-attaining set")
    if norm(f.space.spec, f.values[k1]) <= tol.for_scale(sup_norm(f)):
        raise PreconditionError(f"f vanishes at {k1!r}")
    if f.k.connected and len(f.k.points) > 2:
        i0, i1 = f.k.index(k0), f.k.index(k1)
        radius = max(1, abs(i1 - i0) - 1)
        h = {
            pt: max(0.0, 1.0 - abs(f.k.index(pt) - i1) / radius)
            for pt in f.k.points
        }
    else:
        h = {pt: 1.0 if pt == k1 else 0.0 for pt in f.k.points}
    g = CFunction(f.k, f.space, {pt: h[pt] * v for pt, v in f.values.items()})
    _verify_defeat(f, g, "left", tol)
    return g


def classify_left_symmetric(
    f: CFunction,
    certifier: PointCertifier | None = None,
    tol: Tolerances = DEFAULT_TOL,
) -> Classification:
    """Is f a left symmetric point of C(K,X)?

    Yes exactly when f is supported on a single isolated point whose value
    is a left symmetric point of X; the value-level question is settled by
    the certifier (proof, grid evidence, or semidecision).
    """
    certifier = certifier or PointCertifier()
    nf = sup_norm(f)
    if nf <= tol.floor:
        return Classification(Answer.YES, "zero is trivially left symmetric")
    supp = _support_points(f, tol)
    if len(supp) >= 2:
        k0 = norm_attaining_set(f, tol.rel)[0]
        k1 = next(pt for pt in supp if pt != k0)
        g = construct_left_counterexample(f, k0, k1, tol)
        margins = _verify_defeat(f, g, "left", tol)
        return Classification(
            Answer.NO,
            "support has at least two points: bump witness g = h*f",
            witness=instance_to_json({"f": f, "g": g}),
            margins=margins,
        )
    k0 = supp[0]
    if k0 not in f.k.isolated:
        return Classification(
            Answer.NO,
            "single support point is not isolated in the modelled space; "
            "no in-model witness exists (finite models are discrete)",
            evidence={"support": k0},
        )
    cert = certifier.certify(f.space, f.values[k0], "left")
    if cert.certified is True:
        return Classification(
            Answer.YES,
            f"single isolated support point; value {cert.kind}-certified left symmetric",
            trials=cert.trials,
            evidence={"support": k0, "certificate": cert.kind},
        )
    if cert.certified is False:
        x = cert.counterexample.y
        g = CFunction.indicator(f.k, f.space, k0, x)
        margins = _verify_defeat(f, g, "left", tol)
        return Classification(
            Answer.NO,
            "value-level counterexample lifted to g = x*chi_{k0}",
            witness=instance_to_json({"f": f, "g": g}),
            trials=cert.trials,
            margins=margins,
        )
    return Classification(
        Answer.UNKNOWN,
        "single isolated support point; value-level symmetry undecided",
        trials=cert.trials,
        evidence={"support": k0},
    )


# ---------------------------------------------------------------------------
# right symmetry
# ---------------------------------------------------------------------------


def construct_right_witness_vanishing(
    f: CFunction, k0: str, x, tol: Tolerances = DEFAULT_TOL
) -> CFunction:
    """Witness for a unit-norm f vanishing at k0: g agrees with f away from
    k0 and equals the unit vector x there; then g _|_ f but not f _|_ g."""
    nf = sup_norm(f)
    if abs(nf - 1.0) > tol.for_scale(1.0):
        raise PreconditionError("normalize f to norm one first")
    if norm(f.space.spec, f.values[k0]) > tol.for_scale(1.0):
        raise PreconditionError(f"f does not vanish at {k0!r}")
    xv = as_vector(x, f.space.field)
    if abs(norm(f.space.spec, xv) - 1.0) > tol.for_scale(1.0):
        raise PreconditionError("x must have norm one")
    # bump h collapses to the indicator of {k0}: g = x there, g = f elsewhere
    vals = {
        pt: (xv.copy() if pt == k0 else f.values[pt].copy()) for pt in f.k.points
    }
    g = CFunction(f.k, f.space, vals)
    if abs(sup_norm(g) - 1.0) > tol.for_scale(1.0):
        raise VerificationError("witness g lost norm one")
    _verify_defeat(f, g, "right", tol)
    return g


def construct_right_witness_nonfull(
    f: CFunction, k0: str, tol: Tolerances = DEFAULT_TOL
) -> CFunction:
    """Witness for a unit-norm f with k0 outside M_f: g = f on M_f,
    -f(k0)/||f(k0)|| at k0, zero elsewhere (the discrete collapse of the
    disjoint-bump construction); g _|_ f but not f _|_ g."""
    nf = sup_norm(f)
    if abs(nf - 1.0) > tol.for_scale(1.0):
        raise PreconditionError("normalize f to norm one first")
    nk0 = norm(f.space.spec, f.values[k0])
    if nk0 <= tol.for_scale(1.0):
        raise PreconditionError("f vanishes at k0: use the vanishing constructor")
    mf = set(norm_attaining_set(f, tol.rel))
    if k0 in mf:
        raise PreconditionError(f"{k0!r} lies in the norm-attaining set")
    vals = {}
    for pt in f.k.points:
        v = f.values[pt]
        if pt == k0:
            vals[pt] = -v / nk0
        elif pt in mf:
            vals[pt] = v.copy()
        else:
            vals[pt] = np.zeros_like(v)
    g = CFunction(f.k, f.space, vals)
    if abs(sup_norm(g) - 1.0) > tol.for_scale(1.0):
        raise VerificationError("witness g lost norm one")
    _verify_defeat(f, g, "right", tol)
    return g


@dataclass
class FunctionSearchHit:
    g: CFunction
    holds: Verdict
    fails: Verdict
    trials_used: int


def _pinned_candidates(f: CFunction, tol: Tolerances):
    """Sup-type candidates that pin ||g + lam f|| >= 1 at a coordinate where
    f vanishes: g = f/4 + e_j * chi_{k*} with f(k*)_j = 0.  At every point
    the aligned f/4 part pushes both one-sided slopes of f positive, so
    f _|_ g must fail on the minus side (the worked-example pattern)."""
    if f.space.spec.variant not in ("sup", "wsup", "c00"):
        return
    for pt in f.k.points:
        v = f.values[pt]
        zeros = np.flatnonzero(np.abs(v) <= tol.floor)
        for j in zeros[:2]:
            vals = {q: 0.25 * f.values[q] for q in f.k.points}
            bump = vals[pt].copy()
            bump[int(j)] += 1.0
            vals[pt] = bump
            yield CFunction(f.k, f.space, vals)


def _plateau_probes(g0: CFunction, f: CFunction, tol: Tolerances):
    """Shifts s with ||g0 + s f|| at its minimum: the argmin plus probes of
    the flat region's interior (the minimising set of a convex map is an
    interval; different plateau points give genuinely different g)."""
    orc = ckx_oracle(g0, f, tol=tol)
    s_star, v_star = orc.argmin, orc.min_value
    yield s_star
    if isinstance(s_star, complex):
        return
    gate = v_star + max(10.0 * tol.rel * max(v_star, 1.0), tol.floor)

    def val(s):
        return sup_norm(g0.combine(f, s))

    span = 4.0 * max(sup_norm(g0), 1.0) / max(sup_norm(f), tol.floor)
    for sign in (1.0, -1.0):
        lo, hi = s_star, s_star + sign * span
        if val(hi) <= gate:
            edge = hi
        else:
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if val(mid) <= gate:
                    lo = mid
                else:
                    hi = mid
            edge = lo
        for frac in (0.9, 0.5):
            yield s_star + frac * (edge - s_star)


def function_right_symmetric_search(
    f: CFunction,
    trials: int = 200,
    seed: int = 0,
    tol: Tolerances = DEFAULT_TOL,
) -> FunctionSearchHit | None:
    """Function-level semidecision: search g with g _|_ f but not f _|_ g.

    Structured candidates first (coordinate pins at zeros of f), then
    random g0 projected onto the orthogonality constraint by the argmin
    shift g = g0 + s f, probing several points of the minimising plateau.
    """
    if trials <= 0:
        raise DomainError("trials must be positive")
    nf = sup_norm(f)
    if nf <= tol.floor:
        raise DomainError("search needs f != 0")
    rng = np.random.default_rng(seed)
    orth = ckx_orthogonal_complex if f.space.is_complex else ckx_orthogonal_real
    dim = max(v.shape[0] for v in f.values.values())
    dtype = f.stacked().dtype
    used = 0

    def examine(g):
        if sup_norm(g) <= 0.05:
            return None
        fwd = orth(g, f, tol=tol)
        if not fwd.holds:
            return None
        rev = orth(f, g, tol=tol)
        if rev.fails:
            return FunctionSearchHit(g, fwd, rev, used)
        return None

    for g in _pinned_candidates(f, tol):
        used += 1
        hit = examine(g)
        if hit is not None:
            return hit
        if used >= trials:
            return None

    while used < trials:
        used += 1
        if used <= dim:
            vec = np.zeros(dim)
            vec[used - 1] = 1.0
            g0 = CFunction.constant(f.k, f.space, vec.astype(dtype))
        else:
            vals = {}
            for pt in f.k.points:
                z = rng.uniform(-1.0, 1.0, dim)
                if f.space.is_complex:
                    z = z + 1j * rng.uniform(-1.0, 1.0, dim)
                vals[pt] = z.astype(dtype)
            g0 = CFunction(f.k, f.space, vals)
        for s in _plateau_probes(g0, f, tol):
            hit = examine(g0.combine(f, s))
            if hit is not None:
                return hit
    return None


def classify_right_symmetric(
    f: CFunction,
    certifier: PointCertifier | None = None,
    trials: int = 200,
    seed: int = 0,
    tol: Tolerances = DEFAULT_TOL,
) -> Classification:
    """Is f a right symmetric point of C(K,X)?

    Necessary condition: M_f = K, else No with a constructed witness.
    Sufficient (partial converse): connected model, M_f = K and every
    value certified right symmetric.  Otherwise a function-level search
    may still defeat it; failing that, Unknown.
    """
    certifier = certifier or PointCertifier()
    nf = sup_norm(f)
    if nf <= tol.floor:
        return Classification(Answer.YES, "zero is trivially right symmetric")
    fn = f.scaled(1.0 / nf)
    pn = pointwise_norms(fn)
    maxdev = float(1.0 - pn.min())
    gate = tol.decisive_factor * tol.rel
    if maxdev > gate:
        k0 = fn.k.points[int(pn.argmin())]
        if pn.min() <= tol.for_scale(1.0):
            xv = np.zeros(max(v.shape[0] for v in fn.values.values()))
            xv[0] = 1.0
            g = construct_right_witness_vanishing(fn, k0, xv.astype(fn.stacked().dtype), tol)
            how = "f vanishes at a point: bump-interpolation witness"
        else:
            g = construct_right_witness_nonfull(fn, k0, tol)
            how = "M_f is not all of K: two-bump collapse witness"
        margins = _verify_defeat(fn, g, "right", tol)
        return Classification(
            Answer.NO,
            how,
            witness=instance_to_json({"f": fn, "g": g}),
            margins=margins,
            evidence={"non_attaining_point": k0, "max_deviation": maxdev},
        )
    if maxdev > tol.rel:
        return Classification(
            Answer.UNKNOWN,
            "norm-attaining membership undecided within tolerance band",
            evidence={"max_deviation": maxdev},
        )
    if f.k.connected:
        kinds = set()
        for pt in fn.k.points:
            cert = certifier.certify(fn.space, fn.values[pt], "right")
            if cert.certified is not True:
                break
            kinds.add(cert.kind)
        else:
            return Classification(
                Answer.YES,
                "connected model, M_f = K, all values certified right symmetric "
                f"({', '.join(sorted(kinds))})",
            )
    hit = function_right_symmetric_search(fn, trials=trials, seed=seed, tol=tol)
    if hit is not None:
        margins = _verify_defeat(fn, hit.g, "right", tol)
        return Classification(
            Answer.NO,
            "function-level search found g with g _|_ f but not f _|_ g",
            witness=instance_to_json({"f": fn, "g": hit.g}),
            trials=hit.trials_used,
            margins=margins,
        )
    return Classification(
        Answer.UNKNOWN,
        "M_f = K but the converse hypotheses are not met; search found nothing",
        trials=trials,
    )


# ---------------------------------------------------------------------------
# smoothness
# ---------------------------------------------------------------------------


def _orthogonal_direction(space, x, rng, tol, scale=0.5):
    """A direction y with x _|_ y and ||y|| = scale (None in dimension 1)."""
    xv = as_vector(x, space.field)
    if xv.shape[0] == 1:
        return None
    for _ in range(16):
        z = rng.uniform(-1.0, 1.0, xv.shape[0])
        if space.is_complex:
            z = z + 1j * rng.uniform(-1.0, 1.0, xv.shape[0])
        y = orthogonal_shift(space, xv, z.astype(xv.dtype), tol)
        ny = norm(space.spec, y)
        if ny > 1e-6:
            return y * (scale / ny)
    return None


def right_additivity_violation(
    f: CFunction, seed: int = 0, tol: Tolerances = DEFAULT_TOL
):
    """Deterministic construction of (g, h) with f _|_ g, f _|_ h and not
    f _|_ (g+h), available whenever f is genuinely non-smooth.

    Two-point M_f: g = y0*chi_{k0} - f(k1)*chi_{k1} and symmetrically h,
    with y_i orthogonal to f(k_i) of norm 1/2.  Singleton M_f with a
    non-smooth value: the split of a witness direction is recombined so
    that g + h is a positive multiple of f(k0)*chi_{k0}.
    Returns (g, h) or None.
    """
    rng = np.random.default_rng(seed)
    nf = sup_norm(f)
    fn = f.scaled(1.0 / nf)
    mf = norm_attaining_set(fn, tol.rel)
    space = fn.space
    if len(mf) >= 2:
        k0, k1 = mf[0], mf[1]
        y0 = _orthogonal_direction(space, fn.values[k0], rng, tol)
        y1 = _orthogonal_direction(space, fn.values[k1], rng, tol)
        zero = np.zeros_like(fn.values[k0])
        gv = {pt: zero.copy() for pt in fn.k.points}
        hv = {pt: zero.copy() for pt in fn.k.points}
        gv[k0] = y0 if y0 is not None else zero.copy()
        gv[k1] = -fn.values[k1]
        hv[k1] = y1 if y1 is not None else zero.copy()
        hv[k0] = -fn.values[k0]
        return CFunction(fn.k, space, gv), CFunction(fn.k, space, hv)
    k0 = mf[0]
    x = fn.values[k0]
    sm = is_smooth_point(space, x, tol=tol)
    if not sm.fails:
        return None
    y = as_vector(sm.witness["direction"], space.field)
    d = one_sided_derivatives(space.spec, x, y, tol=tol)
    a, b = d.plus_mid, d.minus_mid
    nx = norm(space.spec, x)
    g0 = y - (b / nx) * x
    h0 = -y + (a / nx) * x
    g = CFunction.indicator(fn.k, space, k0, g0)
    h = CFunction.indicator(fn.k, space, k0, h0)
    return g, h


def verify_right_additivity(
    f: CFunction, g: CFunction, h: CFunction, tol: Tolerances = DEFAULT_TOL
) -> Verdict:
    """Does (f _|_ g and f _|_ h) imply f _|_ (g+h) on this triple?

    Vacuously Holds when a premise fails.  A Fails verdict is a genuine
    right-additivity violation with the oracle-backed lambda witness of
    the conclusion attached.
    """
    orth = ckx_orthogonal_complex if f.space.is_complex else ckx_orthogonal_real
    a = orth(f, g, tol=tol)
    b = orth(f, h, tol=tol)
    if a.fails or b.fails:
        return Verdict(
            Status.HOLDS, 0.0, evidence={"vacuous": True, "premises": [a.status.value, b.status.value]}
        )
    if a.undetermined or b.undetermined:
        return Verdict(Status.UNDETERMINED, 0.0, evidence={"premises": [a.status.value, b.status.value]})
    c = orth(f, g.combine(h, 1.0), tol=tol)
    if c.holds:
        return Verdict(Status.HOLDS, c.margin, evidence={"conclusion": "holds"})
    if c.fails:
        return Verdict(
            Status.FAILS,
            c.margin,
            witness=c.witness,
            evidence={"violation": True},
        )
    return Verdict(Status.UNDETERMINED, c.margin, evidence={"conclusion": "undetermined"})


def classify_smooth(f: CFunction, tol: Tolerances = DEFAULT_TOL) -> Classification:
    """Is f a smooth point of C0(K,X)?  Yes iff the norm-attaining set is a
    decisive singleton {k0} and f(k0) is a smooth point of X."""
    nf = sup_norm(f)
    if nf <= tol.floor:
        raise DomainError("smoothness is defined at non-zero elements")
    mf = norm_attaining_set(f, tol.rel)
    gap = attaining_gap(f)
    if len(mf) >= 2 or gap <= tol.decisive_factor * tol.rel:
        if len(mf) < 2:
            return Classification(
                Answer.UNKNOWN,
                "norm-attaining margin inside the tolerance band",
                evidence={"gap": gap},
            )
        k0, k1 = mf[0], mf[1]
        phi0 = support_functional(f.space.spec, f.values[k0])
        phi1 = support_functional(f.space.spec, f.values[k1])
        pair = right_additivity_violation(f, tol=tol)
        witness = None
        margins = {}
        if pair is not None:
            g, h = pair
            v = verify_right_additivity(f, g, h, tol=tol)
            if v.fails:
                witness = instance_to_json({"f": f, "g": g, "h": h})
                margins["additivity_violation"] = v.margin
        return Classification(
            Answer.NO,
            "norm attained at two points: distinct support functionals "
            "phi_i = F_i applied at k_i, separated by f*chi_{k0}",
            witness=witness,
            margins=margins,
            evidence={
                "attaining": mf,
                "functional_k0": _vec_json(phi0),
                "functional_k1": _vec_json(phi1),
            },
        )
    k0 = mf[0]
    point = is_smooth_point(f.space, f.values[k0], tol=tol)
    if point.holds:
        return Classification(
            Answer.YES,
            "singleton norm-attaining set with a smooth value",
            margins={"attaining_gap": gap, "point_margin": point.margin},
            evidence={"attaining": mf},
        )
    if point.fails:
        pair = right_additivity_violation(f, tol=tol)
        witness = None
        margins = {"split": -point.margin}
        if pair is not None:
            g, h = pair
            v = verify_right_additivity(f, g, h, tol=tol)
            if v.fails:
                witness = instance_to_json({"f": f, "g": g, "h": h})
                margins["additivity_violation"] = v.margin
        return Classification(
            Answer.NO,
            "value at the attaining point is not smooth",
            witness=witness,
            margins=margins,
            evidence={"attaining": mf, "direction": point.witness["direction"]},
        )
    return Classification(
        Answer.UNKNOWN,
        "value-level smoothness undecided",
        evidence={"attaining": mf},
    )


def _vec_json(v):
    if np.iscomplexobj(v):
        return [[float(z.real), float(z.imag)] for z in v]
    return [float(c) for c in v]


# ---------------------------------------------------------------------------
# the worked max-norm example
# ---------------------------------------------------------------------------


def paper_example_functions(samples: int = 101):
    """The worked construction: K = [0,1] u {2} (sampled), X = (R^2, max),
    f = (1,1) on the interval and (1,0) at the isolated point, g = (1/2,1)."""
    if samples < 2:
        raise DomainError("need at least 2 interval samples")
    k = KModel.sampled_interval(samples).with_isolated_point("2")
    space = real_space(NormSpec.sup())
    vals = {pt: np.array([1.0, 1.0]) for pt in k.points}
    vals["2"] = np.array([1.0, 0.0])
    f = CFunction(k, space, vals)
    g = CFunction.constant(k, space, [0.5, 1.0])
    return f, g


def reproduce_paper_example(samples: int = 101, tol: Tolerances = DEFAULT_TOL) -> dict:
    """Rebuild the worked example and re-verify its numbers.

    Checks ||f|| = ||g|| = 1, M_f = K, g _|_ f with min ||g + lam f|| = 1,
    ||f - g/2|| = 3/4 < 1 (so f is not orthogonal to g), and reports the
    true minimum of ||f + lam g|| (2/3 at lam = -2/3; the displayed 3/4 is
    the value at lam = -1/2, an upper-bound witness, not the minimum).
    Raises VerificationError on any mismatch.
    """
    f, g = paper_example_functions(samples)
    report = {
        "samples": samples,
        "model": "sampled interval plus isolated point (sampled, approximate)",
        "f_norm": sup_norm(f),
        "g_norm": sup_norm(g),
        "attaining_is_all": norm_attaining_set(f, tol.rel) == list(f.k.points),
    }
    checks = []

    def check(name, ok):
        checks.append((name, bool(ok)))
        if not ok:
            raise VerificationError(f"paper example check failed: {name}")

    check("f_norm == 1", abs(report["f_norm"] - 1.0) <= 1e-12)
    check("g_norm == 1", abs(report["g_norm"] - 1.0) <= 1e-12)
    check("M_f == K", report["attaining_is_all"])
    v_gf = ckx_orthogonal_real(g, f, tol=tol)
    report["g_orth_f"] = v_gf.status.value
    check("g _|_ f holds", v_gf.holds)
    o_gf = ckx_oracle(g, f, tol=tol)
    report["min_g_plus_lam_f"] = o_gf.min_value
    check("min ||g + lam f|| == 1", abs(o_gf.min_value - 1.0) <= 1e-9)
    at_half = sup_norm(f.combine(g, -0.5))
    report["norm_f_minus_half_g"] = at_half
    check("||f - g/2|| == 3/4", abs(at_half - 0.75) <= 1e-12)
    o_fg = ckx_oracle(f, g, tol=tol)
    report["min_f_plus_lam_g"] = o_fg.min_value
    report["argmin_f_plus_lam_g"] = o_fg.argmin
    check("f not orth g (min < 1)", o_fg.min_value < 1.0 - 1e-6)
    check("min ||f + lam g|| == 2/3", abs(o_fg.min_value - 2.0 / 3.0) <= 1e-9)
    v_fg = ckx_orthogonal_real(f, g, tol=tol)
    report["f_orth_g"] = v_fg.status.value
    check("characterization agrees (fails)", v_fg.fails)
    report["checks"] = checks
    report["ok"] = True
    return report


# ---------------------------------------------------------------------------
# the finite-support-space construction
# ---------------------------------------------------------------------------


def c00_remark_witness(
    f: CFunction, normalize_to_1: bool = False, tol: Tolerances = DEFAULT_TOL
):
    """For unit-norm f over the finite-support sup space, g(k) = f(k) with a
    1 appended after the support defeats right symmetry: ||g|| = 1,
    g _|_ f pointwise, and ||f - g/2|| = 1/2 < 1.  Returns (g, report)."""
    if f.space.spec.variant != "c00":
        raise ConfigurationError("the construction lives in the finite-support space")
    nf = sup_norm(f)
    if nf <= tol.floor:
        raise DomainError("f must be non-zero")
    if normalize_to_1:
        f = f.scaled(1.0 / nf)
    elif abs(nf - 1.0) > tol.for_scale(1.0):
        raise PreconditionError("f must have norm one (or pass normalize_to_1)")
    max_dim = f.space.spec.max_dim
    vals = {}
    supports = {}
    for pt in f.k.points:
        v = f.values[pt]
        nz = np.flatnonzero(np.abs(v) > 0)
        n_k = int(nz[-1]) + 1 if nz.shape[0] else 0
        if n_k + 1 > max_dim:
            raise CapacityError(
                f"support length {n_k} at {pt!r} leaves no room below max_dim {max_dim}"
            )
        g_v = np.zeros(n_k + 1, dtype=v.dtype)
        g_v[:n_k] = v[:n_k]
        g_v[n_k] = 1.0
        vals[pt] = g_v
        supports[pt] = n_k
    g = CFunction(f.k, f.space, vals)
    report = {"supports": supports, "g_norm": sup_norm(g)}
    if abs(report["g_norm"] - 1.0) > 1e-12:
        raise VerificationError("g lost norm one")
    o_gf = ckx_oracle(g, f, tol=tol)
    report["min_g_plus_lam_f"] = o_gf.min_value
    if o_gf.min_value < 1.0 - tol.for_scale(1.0):
        raise VerificationError("g _|_ f failed under the oracle")
    half = sup_norm(f.combine(g, -0.5))
    report["norm_f_minus_half_g"] = half
    if half > 0.5 + 1e-12:
        raise VerificationError("||f - g/2|| exceeded 1/2")
    report["ok"] = True
    return g, report
