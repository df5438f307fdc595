"""Point-level predicates: B-J orthogonality, cones, smoothness, searches.

Every predicate returns a three-valued Verdict.  Holds/Fails are certified
up to the stated tolerances; Fails always carries a witness that re-checks
against the defining inequality.  Undetermined means the decisive bracket
straddles the tolerance band: shrink tolerances or refine grids, never
read it as Holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from .backend import kernels
from .errors import ConfigurationError, DomainError
from .spaces import (
    DEFAULT_TOL,
    NormSpec,
    NormedSpace,
    Tolerances,
    as_vector,
    norm,
    one_sided_derivatives,
    pad_pair,
)


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDETERMINED = "undetermined"


@dataclass
class Verdict:
    """Certified answer with numeric evidence.

    margin is the decisive quantity's signed distance from its threshold
    (positive = comfortably holds).  For Undetermined verdicts the margin
    is clamped into the tolerance band; the raw brackets live in evidence.
    """

    status: Status
    margin: float
    witness: Any = None
    evidence: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def undetermined(self) -> bool:
        return self.status is Status.UNDETERMINED

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "witness": _jsonable(self.witness),
            "margin": float(self.margin),
        }


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return [[float(z.real), float(z.imag)] for z in obj]
        return [float(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


class GridSet(str, Enum):
    FULL_CIRCLE = "T"
    HALF_CIRCLE = "U"


@dataclass(frozen=True)
class DirectionGrid:
    """Unit scalars t = exp(i*theta): the full circle T or the half circle U."""

    count: int
    set: GridSet = GridSet.FULL_CIRCLE

    def __post_init__(self):
        if self.count < 1:
            raise ConfigurationError("direction grid needs count >= 1")

    def values(self) -> np.ndarray:
        span = 2.0 * np.pi if self.set is GridSet.FULL_CIRCLE else np.pi
        theta = span * np.arange(self.count) / self.count
        return np.exp(1j * theta)


DEFAULT_T_GRID = DirectionGrid(360, GridSet.FULL_CIRCLE)
DEFAULT_U_GRID = DirectionGrid(180, GridSet.HALF_CIRCLE)


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def _coerce_pair(space: NormedSpace, x, y):
    xv = as_vector(x, space.field)
    yv = as_vector(y, space.field)
    return pad_pair(space.spec, xv, yv)


def _stack(v: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(v[None, :])


def _default_range(nx: float, ny: float, tol: Tolerances) -> float:
    return 4.0 * nx / max(ny, tol.for_scale(nx))


def _clamp(v: float, bound: float) -> float:
    return max(-bound, min(bound, v))


def _decide(m_lo: float, m_hi: float, tol_slope: float) -> Status:
    if m_lo >= -tol_slope:
        return Status.HOLDS
    if m_hi < -tol_slope:
        return Status.FAILS
    return Status.UNDETERMINED


def _is_hilbert(spec: NormSpec) -> bool:
    return spec.variant == "lp" and spec.p == 2.0


def sweep_real(F, G, code, p, w, sweep_range, grid_points, width):
    """Grid scan of lam -> max-row-norm(F + lam G) over [-R, R] plus a
    log-spaced cluster near 0, then ternary refinement between the grid
    neighbours of the best point (a valid bracket by convexity)."""
    K = kernels()
    R = float(sweep_range)
    cluster = R * np.power(10.0, -np.arange(1.0, 13.0))
    grid = np.unique(
        np.concatenate([np.linspace(-R, R, grid_points), cluster, -cluster, [0.0]])
    )
    vals = K.pencil_values(F, G, grid, code, p, w)
    j = int(vals.argmin())
    lo = grid[max(j - 1, 0)]
    hi = grid[min(j + 1, grid.shape[0] - 1)]
    lam, v = K.pencil_min(F, G, float(lo), float(hi), code, p, w, 200, width)
    if vals[j] < v:
        lam, v = float(grid[j]), float(vals[j])
    return float(lam), float(v)


def sweep_complex(F, G, ts, alpha_hi, code, p, w, width):
    """Polar scan: per-direction ternary refinement over alpha in [0, R]."""
    v, re, im = kernels().polar_min(F, G, ts, float(alpha_hi), code, p, w, 200, width)
    return complex(re, im), float(v)


@dataclass(frozen=True)
class OracleResult:
    """Refined minimum of lam -> ||x + lam y||; orthogonality holds in
    oracle terms iff min_value >= ||x|| - tolerance."""

    min_value: float
    argmin: Any  # float (real field) or complex


def lambda_sweep_oracle(
    space: NormedSpace,
    x,
    y,
    sweep_range: float | None = None,
    grid_points: int = 2049,
    t_grid: DirectionGrid | None = None,
    tol: Tolerances = DEFAULT_TOL,
) -> OracleResult:
    """Independent minimisation of ||x + lam y|| over scalars lam.

    Real field: 1-D grid (linear plus a logarithmic cluster near 0) with
    ternary refinement.  Complex field: polar grid of unit directions,
    each refined over its radius (convex for fixed direction).  This is
    the provenance instrument for every derived expected value.
    """
    if grid_points < 3:
        raise DomainError("gridPoints must be >= 3")
    if sweep_range is not None and sweep_range <= 0:
        raise DomainError(f"range must be positive, got {sweep_range}")
    xv, yv = _coerce_pair(space, x, y)
    spec = space.spec
    nx = norm(spec, xv)
    ny = norm(spec, yv)
    zero_lam = 0j if space.is_complex else 0.0
    if ny <= tol.floor:
        return OracleResult(nx, zero_lam)
    if nx <= tol.floor:
        return OracleResult(0.0, zero_lam)
    R = sweep_range if sweep_range is not None else _default_range(nx, ny, tol)
    code, p, w = spec.kernel_args(xv.shape[0])
    F, G = _stack(xv), _stack(yv)
    width = max(1e-12 * nx / max(ny, tol.floor), R * 1e-15)
    if space.is_complex:
        ts = (t_grid or DEFAULT_T_GRID).values()
        lam, v = sweep_complex(F, G, ts, R, code, p, w, width)
        return OracleResult(v, lam)
    lam, v = sweep_real(F, G, code, p, w, R, grid_points, width)
    return OracleResult(v, lam)


# ---------------------------------------------------------------------------
# orthogonality and cones
# ---------------------------------------------------------------------------


def _fail_with_oracle(space, xv, dv, mid, ev, tol, restrict=None, key="lambda"):
    """Certify a Fails verdict with a re-checkable scalar witness.

    restrict: None (all scalars of the field), "plus"/"minus" (half line),
    "line" (the real line along dv).  Degrades to Undetermined when the
    value deficit cannot be separated from the norm-scale tolerance.
    """
    spec = space.spec
    nx = norm(spec, xv)
    nd = norm(spec, dv)
    code, p, w = spec.kernel_args(xv.shape[0])
    F, G = _stack(xv), _stack(dv)
    R = _default_range(nx, nd, tol)
    width = max(1e-12 * nx / max(nd, tol.floor), R * 1e-15)
    if restrict == "plus":
        lam, v = kernels().pencil_min(F, G, 0.0, R, code, p, w, 200, width)
        lam, v = float(lam), float(v)
    elif restrict == "minus":
        lam, v = kernels().pencil_min(F, G, -R, 0.0, code, p, w, 200, width)
        lam, v = float(lam), float(v)
    elif restrict == "line":
        lam, v = sweep_real(F, G, code, p, w, R, 513, width)
    elif space.is_complex:
        lam, v = sweep_complex(F, G, DEFAULT_T_GRID.values(), R, code, p, w, width)
    else:
        lam, v = sweep_real(F, G, code, p, w, R, 513, width)
    deficit = nx - v
    ev = dict(ev, min_value=v, x_norm=nx)
    if deficit > tol.for_scale(nx):
        return Verdict(
            Status.FAILS, mid, witness={key: _jsonable(lam), "value": v}, evidence=ev
        )
    return Verdict(Status.UNDETERMINED, _clamp(mid, tol.for_scale(nd)), evidence=ev)


def is_bj_orthogonal(
    space: NormedSpace,
    x,
    y,
    grid: DirectionGrid | None = None,
    tol: Tolerances = DEFAULT_TOL,
) -> Verdict:
    """x is B-J orthogonal to y: ||x + lam y|| >= ||x|| for all scalars lam.

    Real field: sign test rho'_-(x,y) <= 0 <= rho'_+(x,y) on the one-sided
    derivative brackets.  Complex field: the directional test along every
    t in the grid (default: 360 points of the full circle).
    """
    xv, yv = _coerce_pair(space, x, y)
    spec = space.spec
    nx = norm(spec, xv)
    ny = norm(spec, yv)
    if nx <= tol.floor:
        return Verdict(Status.HOLDS, 0.0, evidence={"trivial": "x = 0"})
    if ny <= tol.floor:
        return Verdict(Status.HOLDS, 0.0, evidence={"trivial": "y = 0"})
    if space.is_complex:
        return _bj_complex(space, xv, yv, grid or DEFAULT_T_GRID, tol)
    d = one_sided_derivatives(spec, xv, yv, tol=tol)
    m_lo = min(d.rho_plus[0], -d.rho_minus[1])
    m_hi = min(d.rho_plus[1], -d.rho_minus[0])
    mid = 0.5 * (m_lo + m_hi)
    t_slope = tol.for_scale(ny)
    ev = {"rho_minus": d.rho_minus, "rho_plus": d.rho_plus, "method": d.method}
    status = _decide(m_lo, m_hi, t_slope)
    if status is Status.HOLDS:
        return Verdict(Status.HOLDS, mid, evidence=ev)
    if status is Status.FAILS:
        return _fail_with_oracle(space, xv, yv, mid, ev, tol)
    return Verdict(Status.UNDETERMINED, _clamp(mid, t_slope), evidence=ev)


def directional_slopes(spec: NormSpec, x, y, ts, tie_rel: float):
    """Exact (rho_minus, rho_plus) arrays along directions t*y for all unit
    scalars t in ts at once.  None when the norm has no closed form."""
    c = np.conj(x) * y
    a = np.abs(x)
    P = (ts[:, None] * c[None, :]).real
    if spec.variant in ("sup", "c00", "wsup"):
        w = (
            np.asarray(spec.weights, dtype=np.float64)
            if spec.variant == "wsup"
            else np.ones_like(a)
        )
        wa = w * a
        m = wa.max()
        act = np.flatnonzero(wa >= m - tie_rel * m)
        D = (w[act] / a[act])[None, :] * P[:, act]
        return D.min(axis=1), D.max(axis=1)
    if spec.p == 2.0:
        v = P.sum(axis=1) / np.sqrt((a * a).sum())
        return v, v
    if spec.p == 1.0:
        nx1 = a.sum()
        zero = a <= tie_rel * nx1
        base = (P[:, ~zero] / a[~zero][None, :]).sum(axis=1)
        extra = float(np.abs(y[zero]).sum())
        return base - extra, base + extra
    return None


def _bj_complex(space, xv, yv, grid, tol):
    spec = space.spec
    ts = grid.values()
    ny = norm(spec, yv)
    t_slope = tol.for_scale(ny)
    sl = directional_slopes(spec, xv, yv, ts, tol.tie_rel)
    if sl is not None:
        rm, rp = sl
        m_lo = m_hi = np.minimum(rp, -rm)
    else:
        m_lo = np.empty(ts.shape[0])
        m_hi = np.empty(ts.shape[0])
        for i, t in enumerate(ts):
            d = one_sided_derivatives(spec, xv, t * yv, tol=tol)
            m_lo[i] = min(d.rho_plus[0], -d.rho_minus[1])
            m_hi[i] = min(d.rho_plus[1], -d.rho_minus[0])
    worst = int(np.argmin(m_hi))
    lo = float(m_lo.min())
    hi = float(m_hi[worst])
    mid = 0.5 * (lo + hi)
    ev = {"grid": grid.count, "worst_t": _jsonable(complex(ts[worst]))}
    status = _decide(lo, hi, t_slope)
    if status is Status.HOLDS:
        return Verdict(Status.HOLDS, mid, evidence=ev)
    if status is Status.FAILS:
        return _fail_with_oracle(space, xv, yv, mid, ev, tol)
    return Verdict(Status.UNDETERMINED, _clamp(mid, t_slope), evidence=ev)


def _cone_verdict(space, x, y, side, direction=None, tol=DEFAULT_TOL, key="lambda"):
    xv, yv = _coerce_pair(space, x, y)
    spec = space.spec
    nx = norm(spec, xv)
    ny = norm(spec, yv)
    if nx <= tol.floor or ny <= tol.floor:
        return Verdict(Status.HOLDS, 0.0, evidence={"trivial": "x = 0 or y = 0"})
    dv = yv if direction is None else direction * yv
    d = one_sided_derivatives(spec, xv, dv, tol=tol)
    if side == "plus":
        m_lo, m_hi = d.rho_plus
    else:
        m_lo, m_hi = -d.rho_minus[1], -d.rho_minus[0]
    mid = 0.5 * (m_lo + m_hi)
    t_slope = tol.for_scale(ny)
    ev = {"rho_minus": d.rho_minus, "rho_plus": d.rho_plus, "method": d.method}
    status = _decide(m_lo, m_hi, t_slope)
    if status is Status.HOLDS:
        return Verdict(Status.HOLDS, mid, evidence=ev)
    if status is Status.FAILS:
        return _fail_with_oracle(space, xv, dv, mid, ev, tol, restrict=side, key=key)
    return Verdict(Status.UNDETERMINED, _clamp(mid, t_slope), evidence=ev)


def in_plus_cone(space: NormedSpace, x, y, tol: Tolerances = DEFAULT_TOL) -> Verdict:
    """y lies in the cone x+ : ||x + lam y|| >= ||x|| for all lam >= 0.

    Real scalar field only; equivalent to rho'_+(x, y) >= 0 by convexity.
    """
    if space.is_complex:
        raise ConfigurationError("use the u-cone variants in complex spaces")
    return _cone_verdict(space, x, y, "plus", tol=tol)


def in_minus_cone(space: NormedSpace, x, y, tol: Tolerances = DEFAULT_TOL) -> Verdict:
    """y lies in the cone x- : ||x + lam y|| >= ||x|| for all lam <= 0."""
    if space.is_complex:
        raise ConfigurationError("use the u-cone variants in complex spaces")
    return _cone_verdict(space, x, y, "minus", tol=tol)


def _check_unit(u):
    u = complex(u)
    if abs(abs(u) - 1.0) > 1e-9:
        raise DomainError(f"direction must have unit modulus, got |u| = {abs(u)}")
    return u


def in_u_plus_cone(space, x, y, u, tol: Tolerances = DEFAULT_TOL) -> Verdict:
    """y in the complex cone x_u+ : ||x + u*alpha*y|| >= ||x||, alpha >= 0."""
    if not space.is_complex:
        raise ConfigurationError("u-cones are defined on complex spaces")
    return _cone_verdict(space, x, y, "plus", direction=_check_unit(u), tol=tol, key="alpha")


def in_u_minus_cone(space, x, y, u, tol: Tolerances = DEFAULT_TOL) -> Verdict:
    """y in the complex cone x_u- : ||x + u*alpha*y|| >= ||x||, alpha <= 0."""
    if not space.is_complex:
        raise ConfigurationError("u-cones are defined on complex spaces")
    return _cone_verdict(space, x, y, "minus", direction=_check_unit(u), tol=tol, key="alpha")


def directional_orthogonal(space, x, y, t, tol: Tolerances = DEFAULT_TOL) -> Verdict:
    """x orthogonal to y in the direction t: ||x + alpha*t*y|| >= ||x||
    for all real alpha (|t| = 1)."""
    t = _check_unit(t)
    if not space.is_complex:
        if abs(t.imag) > 1e-12:
            raise DomainError("real scalar field admits only t = +/-1")
        t = t.real
    xv, yv = _coerce_pair(space, x, y)
    spec = space.spec
    nx = norm(spec, xv)
    ny = norm(spec, yv)
    if nx <= tol.floor or ny <= tol.floor:
        return Verdict(Status.HOLDS, 0.0, evidence={"trivial": "x = 0 or y = 0"})
    dv = t * yv
    d = one_sided_derivatives(spec, xv, dv, tol=tol)
    m_lo = min(d.rho_plus[0], -d.rho_minus[1])
    m_hi = min(d.rho_plus[1], -d.rho_minus[0])
    mid = 0.5 * (m_lo + m_hi)
    t_slope = tol.for_scale(ny)
    ev = {"t": _jsonable(complex(t)), "rho_minus": d.rho_minus, "rho_plus": d.rho_plus}
    status = _decide(m_lo, m_hi, t_slope)
    if status is Status.HOLDS:
        return Verdict(Status.HOLDS, mid, evidence=ev)
    if status is Status.FAILS:
        return _fail_with_oracle(
            space, xv, dv, mid, ev, tol, restrict="line", key="alpha"
        )
    return Verdict(Status.UNDETERMINED, _clamp(mid, t_slope), evidence=ev)


# ---------------------------------------------------------------------------
# smoothness
# ---------------------------------------------------------------------------


def _structured_directions(dim: int, complex_field: bool):
    eye = np.eye(dim)
    dirs = [eye[j] for j in range(dim)]
    if complex_field:
        dirs += [1j * eye[j] for j in range(dim)]
    return dirs


def is_smooth_point(
    space: NormedSpace,
    x,
    samples: int = 32,
    seed: int = 0,
    tol: Tolerances = DEFAULT_TOL,
    method: str = "auto",
) -> Verdict:
    """Is x a smooth point (unique norm-one support functional)?

    Fast paths: sup-type norms are smooth at x iff the (weighted) max is
    attained at a single coordinate; lp(1) iff no coordinate vanishes;
    lp(p) with 1 < p < inf always.  The sampled path checks that the two
    one-sided derivatives agree on every sampled direction; it must agree
    with the fast path (tested invariant).
    """
    xv = as_vector(x, space.field)
    spec = space.spec
    nx = norm(spec, xv)
    if nx <= tol.floor:
        raise DomainError("smoothness is defined at non-zero points")
    if method not in ("auto", "fast", "sampled"):
        raise ConfigurationError(f"unknown method {method!r}")

    if method in ("auto", "fast"):
        a = np.abs(xv)
        if spec.variant in ("sup", "c00", "wsup"):
            w = (
                np.asarray(spec.weights, dtype=np.float64)
                if spec.variant == "wsup"
                else np.ones_like(a)
            )
            wa = w * a
            m = wa.max()
            act = np.flatnonzero(wa >= m - tol.tie_rel * m)
            if act.shape[0] == 1:
                second = np.partition(wa, -2)[-2] if a.shape[0] > 1 else 0.0
                return Verdict(
                    Status.HOLDS,
                    float((m - second) / m),
                    evidence={"path": "fast", "attaining": act.tolist()},
                )
            i, j = int(act[0]), int(act[1])
            y = np.zeros_like(xv)
            y[i] = xv[i] / a[i]
            y[j] = -xv[j] / a[j]
            return Verdict(
                Status.FAILS,
                -float(w[i] + w[j]),
                witness={"direction": _jsonable(y)},
                evidence={"path": "fast", "attaining": act.tolist()},
            )
        if spec.p == 1.0:
            zero = np.flatnonzero(a <= tol.tie_rel * nx)
            if zero.shape[0] == 0:
                return Verdict(
                    Status.HOLDS, float(a.min() / nx), evidence={"path": "fast"}
                )
            y = np.zeros_like(xv)
            y[int(zero[0])] = 1.0
            return Verdict(
                Status.FAILS,
                -2.0,
                witness={"direction": _jsonable(y)},
                evidence={"path": "fast", "zero_coordinate": int(zero[0])},
            )
        if method == "fast" or spec.p > 1.0:
            return Verdict(
                Status.HOLDS,
                0.0,
                evidence={"path": "fast", "reason": "lp, 1 < p < inf"},
            )

    rng = np.random.default_rng(seed)
    dirs = _structured_directions(xv.shape[0], space.is_complex)
    for _ in range(max(samples, 0)):
        v = rng.uniform(-1.0, 1.0, xv.shape[0])
        if space.is_complex:
            v = v + 1j * rng.uniform(-1.0, 1.0, xv.shape[0])
        nv = np.linalg.norm(v)
        if nv > 1e-6:
            dirs.append(v / nv)
    worst_gap = 0.0
    worst_possible = 0.0
    worst_dir = None
    undecided_gap = None
    for y in dirs:
        yv = y.astype(xv.dtype)
        d = one_sided_derivatives(spec, xv, yv, tol=tol)
        certified = max(0.0, d.rho_plus[0] - d.rho_minus[1])
        possible = d.rho_plus[1] - d.rho_minus[0]
        gate = tol.for_scale(norm(spec, yv))
        if certified > gate and certified > worst_gap:
            worst_gap = certified
            worst_dir = yv
        elif possible > gate and certified <= gate:
            undecided_gap = possible
        worst_possible = max(worst_possible, possible)
    if worst_dir is not None:
        return Verdict(
            Status.FAILS,
            -worst_gap,
            witness={"direction": _jsonable(worst_dir)},
            evidence={"path": "sampled", "directions": len(dirs)},
        )
    if undecided_gap is not None:
        return Verdict(
            Status.UNDETERMINED,
            0.0,
            evidence={"path": "sampled", "widest_gap": undecided_gap},
        )
    return Verdict(
        Status.HOLDS,
        -worst_possible,
        evidence={"path": "sampled", "directions": len(dirs)},
    )


# ---------------------------------------------------------------------------
# symmetry searches (semidecisions)
# ---------------------------------------------------------------------------


@dataclass
class SearchHit:
    """A direction defeating left/right symmetry of x, with both verdicts."""

    y: np.ndarray
    holds: Verdict
    fails: Verdict
    trials_used: int
    pattern: str


def orthogonal_shift(space: NormedSpace, x, y, tol: Tolerances = DEFAULT_TOL):
    """Shift y along x so that x is orthogonal to the result.

    Uses rho'(x, y + c x) = rho'(x, y) + c ||x||: the midpoint choice of c
    puts 0 between the two one-sided derivatives.  Exact for closed-form
    norms; in complex fields this settles the t = 1 direction only, so
    callers must still verify the full verdict.
    """
    xv, yv = _coerce_pair(space, x, y)
    spec = space.spec
    nx = norm(spec, xv)
    if nx <= tol.floor:
        raise DomainError("orthogonal_shift needs x != 0")
    d = one_sided_derivatives(spec, xv, yv, tol=tol)
    c = -0.5 * (d.plus_mid + d.minus_mid) / nx
    return yv + c * xv


def argmin_shift(space: NormedSpace, x, z, tol: Tolerances = DEFAULT_TOL):
    """Return y = z + s* x with s* = argmin ||z + s x||, so that y is
    orthogonal to x (0 lies in the subdifferential at the minimum)."""
    xv, zv = _coerce_pair(space, x, z)
    spec = space.spec
    nx = norm(spec, xv)
    nz = norm(spec, zv)
    if nx <= tol.floor:
        raise DomainError("argmin_shift needs x != 0")
    code, p, w = spec.kernel_args(xv.shape[0])
    F, G = _stack(zv), _stack(xv)
    R = _default_range(max(nz, tol.floor * 2), nx, tol)
    width = max(1e-12 * max(nz, 1.0) / max(nx, tol.floor), R * 1e-15)
    if space.is_complex:
        lam, _ = sweep_complex(F, G, DEFAULT_T_GRID.values(), R, code, p, w, width)
    else:
        lam, _ = sweep_real(F, G, code, p, w, R, 513, width)
    return zv + lam * xv


def _off_active_mask(spec: NormSpec, xv, tie_rel):
    if spec.variant not in ("sup", "c00", "wsup"):
        return None
    a = np.abs(xv)
    w = (
        np.asarray(spec.weights, dtype=np.float64)
        if spec.variant == "wsup"
        else np.ones_like(a)
    )
    wa = w * a
    m = wa.max()
    off = wa < m - tie_rel * m
    return off if off.any() else None


def _search_candidates(space, xv, want, trials, rng, tol):
    """Candidate stream for the symmetry searches.

    want = "left": candidates aiming at x _|_ y; want = "right": aiming at
    y _|_ x.  Structured candidates (basis vectors, sign patterns,
    off-argmax supports, the c00 tail bump) come first, then seeded random
    vectors projected onto the orthogonality constraint along a pencil.
    """
    spec = space.spec
    dim = xv.shape[0]
    emitted = 0

    structured = _structured_directions(dim, space.is_complex)
    if not space.is_complex and dim <= 6:
        for bits in range(2**dim):
            structured.append(
                np.array([1.0 if bits >> j & 1 else -1.0 for j in range(dim)])
            )
    off = _off_active_mask(spec, xv, tol.tie_rel)
    if off is not None:
        structured.append(off.astype(np.float64))
    if spec.variant == "c00" and dim < spec.max_dim:
        bump = np.concatenate([xv, np.zeros(1, dtype=xv.dtype)])
        bump[-1] = 1.0
        structured.append(bump)

    for y in structured:
        if emitted >= trials:
            return
        emitted += 1
        yield y

    while emitted < trials:
        z = rng.uniform(-1.0, 1.0, dim)
        if space.is_complex:
            z = z + 1j * rng.uniform(-1.0, 1.0, dim)
        z = z.astype(xv.dtype)
        if norm(spec, z) <= 0.1:
            continue
        emitted += 1
        if want == "left":
            if _is_hilbert(spec):
                y = z - (np.vdot(xv, z) / np.vdot(xv, xv)) * xv
            elif off is not None and space.is_complex:
                y = z * off.astype(np.float64)
            else:
                y = orthogonal_shift(space, xv, z, tol)
        else:
            y = argmin_shift(space, xv, z, tol)
        yield y


def _symmetric_search(space, x, trials, seed, want, tol):
    if trials <= 0:
        raise DomainError("trials must be positive")
    xv = as_vector(x, space.field)
    if norm(space.spec, xv) <= tol.floor:
        raise DomainError("symmetry searches need x != 0")
    rng = np.random.default_rng(seed)
    used = 0
    for y in _search_candidates(space, xv, want, trials, rng, tol):
        used += 1
        yv = as_vector(y, space.field)
        xp, yp = pad_pair(space.spec, xv, yv)
        if norm(space.spec, yp) <= tol.floor:
            continue
        if want == "left":
            fwd = is_bj_orthogonal(space, xp, yp, tol=tol)
            if not fwd.holds:
                continue
            rev = is_bj_orthogonal(space, yp, xp, tol=tol)
            if rev.fails:
                return SearchHit(yp, fwd, rev, used, "x orth y, y not orth x")
        else:
            fwd = is_bj_orthogonal(space, yp, xp, tol=tol)
            if not fwd.holds:
                continue
            rev = is_bj_orthogonal(space, xp, yp, tol=tol)
            if rev.fails:
                return SearchHit(yp, fwd, rev, used, "y orth x, x not orth y")
    return None


def left_symmetric_search(
    space: NormedSpace, x, trials: int = 200, seed: int = 0, tol: Tolerances = DEFAULT_TOL
):
    """Search for y with x _|_ y but not y _|_ x (defeats left symmetry).

    Semidecision: None means no counterexample within the trial budget,
    never a proof of symmetry.
    """
    return _symmetric_search(space, x, trials, seed, "left", tol)


def right_symmetric_search(
    space: NormedSpace, x, trials: int = 200, seed: int = 0, tol: Tolerances = DEFAULT_TOL
):
    """Search for y with y _|_ x but not x _|_ y (defeats right symmetry)."""
    return _symmetric_search(space, x, trials, seed, "right", tol)
