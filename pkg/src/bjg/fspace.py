"""Finite models of K and of C(K,X): sup norm, norm-attaining set, and the
characterizations of f _|_ g with an independent oracle.

A finite discrete model is a genuine compact Hausdorff space, so the
point-set characterizations are exact there.  Sampled-interval models
(connected flag) approximate a continuum; connectedness is declared
metadata, never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .core import (
    DEFAULT_T_GRID,
    DEFAULT_U_GRID,
    DirectionGrid,
    OracleResult,
    Status,
    Verdict,
    _clamp,
    _decide,
    _default_range,
    _jsonable,
    directional_slopes,
    is_bj_orthogonal,
    in_minus_cone,
    in_plus_cone,
    one_sided_derivatives,
    sweep_complex,
    sweep_real,
)
from .errors import (
    CapacityError,
    ConfigurationError,
    DataError,
    DomainError,
    PreconditionError,
)
from .spaces import (
    DEFAULT_TOL,
    NormedSpace,
    Tolerances,
    as_vector,
    norm,
)


@dataclass(frozen=True)
class KModel:
    """Finite point set with topology metadata.

    connected=True declares the modelled space connected (sampled interval);
    such a model carries no isolated points unless it is a single point.
    A fully discrete model flags every point isolated.
    """

    points: tuple[str, ...]
    isolated: frozenset[str] = frozenset()
    connected: bool = False
    description: str = ""

    def __post_init__(self):
        if len(self.points) == 0:
            raise ConfigurationError("KModel needs at least one point")
        if len(set(self.points)) != len(self.points):
            raise ConfigurationError("KModel point identifiers must be unique")
        stray = set(self.isolated) - set(self.points)
        if stray:
            raise ConfigurationError(f"isolated flags for unknown points: {stray}")
        if self.connected and len(self.points) > 1 and self.isolated:
            raise ConfigurationError(
                "a connected model with several points cannot flag isolated points"
            )

    @classmethod
    def discrete(cls, names) -> "KModel":
        pts = tuple(str(n) for n in names)
        return cls(
            pts,
            frozenset(pts),
            connected=(len(pts) == 1),
            description=f"discrete {len(pts)} points",
        )

    @classmethod
    def sampled_interval(cls, samples: int, a: float = 0.0, b: float = 1.0) -> "KModel":
        if samples < 1:
            raise ConfigurationError("sampled interval needs >= 1 samples")
        if samples == 1:
            return cls(("t0",), frozenset(("t0",)), connected=True, description="1 sample")
        pts = tuple(f"t{i}" for i in range(samples))
        return cls(
            pts,
            frozenset(),
            connected=True,
            description=f"{samples} samples of [{a}, {b}]",
        )

    def with_isolated_point(self, name: str) -> "KModel":
        """Attach one isolated point (the paper-example shape [0,1] u {2})."""
        if name in self.points:
            raise ConfigurationError(f"point {name!r} already in model")
        return KModel(
            self.points + (str(name),),
            frozenset(self.isolated) | {str(name)},
            connected=False,
            description=self.description + f" plus isolated {{{name}}}",
        )

    def index(self, point: str) -> int:
        return self.points.index(point)

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "isolated": sorted(self.isolated),
            "connected": self.connected,
            "description": self.description,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "KModel":
        try:
            return cls(
                tuple(str(p) for p in obj["points"]),
                frozenset(str(p) for p in obj.get("isolated", [])),
                bool(obj.get("connected", False)),
                str(obj.get("description", "")),
            )
        except KeyError as exc:
            raise DataError(f"KModel JSON missing key {exc}") from exc


@dataclass(frozen=True)
class CFunction:
    """An element f of C(K,X) on a finite model: one vector per point."""

    k: KModel
    space: NormedSpace
    values: Mapping[str, np.ndarray]

    def __post_init__(self):
        vals = {}
        dim = None
        for pt in self.k.points:
            if pt not in self.values:
                raise ConfigurationError(f"no value for point {pt!r}")
            v = as_vector(self.values[pt], self.space.field)
            if self.space.spec.variant == "c00":
                if v.shape[0] > self.space.spec.max_dim:
                    raise CapacityError(
                        f"value at {pt!r} exceeds max_dim {self.space.spec.max_dim}"
                    )
            elif dim is None:
                dim = v.shape[0]
            elif v.shape[0] != dim:
                raise ConfigurationError("values must share one dimension")
            vals[pt] = v
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, k: KModel, space: NormedSpace, vec) -> "CFunction":
        v = as_vector(vec, space.field)
        return cls(k, space, {pt: v.copy() for pt in k.points})

    @classmethod
    def indicator(cls, k: KModel, space: NormedSpace, point: str, vec) -> "CFunction":
        v = as_vector(vec, space.field)
        zero = np.zeros_like(v)
        return cls(k, space, {pt: (v if pt == point else zero).copy() for pt in k.points})

    def value(self, point: str) -> np.ndarray:
        return self.values[point]

    def stacked(self) -> np.ndarray:
        dim = max(v.shape[0] for v in self.values.values())
        out = np.zeros(
            (len(self.k.points), dim),
            dtype=np.complex128 if self.space.is_complex else np.float64,
        )
        for i, pt in enumerate(self.k.points):
            v = self.values[pt]
            out[i, : v.shape[0]] = v
        return out

    def scaled(self, c) -> "CFunction":
        return CFunction(self.k, self.space, {pt: c * v for pt, v in self.values.items()})

    def combine(self, other: "CFunction", lam) -> "CFunction":
        """Pointwise f + lam*g (c00 values are zero-padded per point)."""
        _check_pair(self, other)
        vals = {}
        for pt in self.k.points:
            a, b = self.values[pt], other.values[pt]
            d = max(a.shape[0], b.shape[0])
            av = np.zeros(d, dtype=a.dtype)
            av[: a.shape[0]] = a
            bv = np.zeros(d, dtype=b.dtype)
            bv[: b.shape[0]] = b
            vals[pt] = av + lam * bv
        return CFunction(self.k, self.space, vals)

    def to_json(self) -> dict:
        out = {}
        for pt, v in self.values.items():
            if self.space.is_complex:
                out[pt] = [[float(z.real), float(z.imag)] for z in v]
            else:
                out[pt] = [float(c) for c in v]
        return out


def _check_pair(f: CFunction, g: CFunction):
    if f.k.points != g.k.points:
        raise ConfigurationError("f and g live on different models of K")
    if f.space != g.space:
        raise ConfigurationError("f and g live in different spaces X")


def _stack_pair(f: CFunction, g: CFunction):
    F, G = f.stacked(), g.stacked()
    if F.shape[1] != G.shape[1]:
        d = max(F.shape[1], G.shape[1])
        F2 = np.zeros((F.shape[0], d), dtype=F.dtype)
        F2[:, : F.shape[1]] = F
        G2 = np.zeros((G.shape[0], d), dtype=G.dtype)
        G2[:, : G.shape[1]] = G
        F, G = F2, G2
    return np.ascontiguousarray(F), np.ascontiguousarray(G)


# ---------------------------------------------------------------------------
# sup norm and the norm-attaining set
# ---------------------------------------------------------------------------


def pointwise_norms(f: CFunction) -> np.ndarray:
    return np.array([norm(f.space.spec, f.values[pt]) for pt in f.k.points])


def sup_norm(f: CFunction) -> float:
    """||f||_inf = max over points of ||f(k)||."""
    return float(pointwise_norms(f).max())


def norm_attaining_set(f: CFunction, tol: float = 1e-9) -> list[str]:
    """M_f = {k : ||f(k)|| >= ||f|| (1 - tol)}; every point when f = 0."""
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    pn = pointwise_norms(f)
    nf = pn.max()
    if nf == 0.0:
        return list(f.k.points)
    keep = pn >= nf * (1.0 - tol)
    return [pt for pt, k in zip(f.k.points, keep) if k]


def attaining_gap(f: CFunction) -> float:
    """Relative gap 1 - (second largest pointwise norm)/||f||; 0 when tied,
    1 for a single-point model."""
    pn = pointwise_norms(f)
    nf = pn.max()
    if nf == 0.0 or pn.shape[0] == 1:
        return 1.0
    second = np.partition(pn, -2)[-2]
    return float(1.0 - second / nf)


# ---------------------------------------------------------------------------
# orthogonality characterizations
# ---------------------------------------------------------------------------


def _trivial_zero_verdicts(f, g, tol):
    if sup_norm(f) <= tol.floor:
        return Verdict(Status.HOLDS, 0.0, evidence={"trivial": "f = 0"})
    if sup_norm(g) <= tol.floor:
        return Verdict(Status.HOLDS, 0.0, evidence={"trivial": "g = 0"})
    return None


def ckx_orthogonal_real(f: CFunction, g: CFunction, tol: Tolerances = DEFAULT_TOL) -> Verdict:
    """f _|_ g in real C(K,X) via the two-cone characterization:
    some u1 in M_f has g(u1) in f(u1)+ and some u2 in M_f has g(u2) in f(u2)-.
    """
    _check_pair(f, g)
    if f.space.is_complex:
        raise ConfigurationError("real characterization on a complex space")
    t = _trivial_zero_verdicts(f, g, tol)
    if t is not None:
        return t
    mf = norm_attaining_set(f, tol.rel)
    sides = {"plus": in_plus_cone, "minus": in_minus_cone}
    witness = {}
    margins = {}
    undetermined = {}
    for name, pred in sides.items():
        best = None
        best_holding = -np.inf
        best_any = -np.inf
        any_und = False
        for pt in mf:
            v = pred(f.space, f.values[pt], g.values[pt], tol=tol)
            best_any = max(best_any, v.margin)
            if v.holds and v.margin >= best_holding:
                best, best_holding = pt, v.margin
            any_und = any_und or v.undetermined
        witness[name] = best
        margins[name] = best_holding if best is not None else best_any
        undetermined[name] = any_und
    ev = {"attaining": mf, "side_margins": margins}
    if witness["plus"] is not None and witness["minus"] is not None:
        ev["u1"] = witness["plus"]
        ev["u2"] = witness["minus"]
        return Verdict(Status.HOLDS, min(margins.values()), evidence=ev)
    if any(witness[s] is None and undetermined[s] for s in sides):
        return Verdict(Status.UNDETERMINED, 0.0, evidence=ev)
    missing = [s for s in sides if witness[s] is None]
    ev["unachievable"] = missing
    return _ckx_fail(f, g, min(margins.values()), ev, tol)


def _ckx_fail(f, g, mid, ev, tol):
    """Certify a function-level Fails with a re-checkable lambda witness."""
    orc = ckx_oracle(f, g, tol=tol)
    nf = sup_norm(f)
    deficit = nf - orc.min_value
    ev = dict(ev, min_value=orc.min_value, f_norm=nf)
    if deficit > tol.for_scale(nf):
        return Verdict(
            Status.FAILS,
            mid,
            witness={"lambda": _jsonable(orc.argmin), "value": orc.min_value},
            evidence=ev,
        )
    return Verdict(Status.UNDETERMINED, _clamp(mid, tol.for_scale(nf)), evidence=ev)


def _slope_bounds(f, g, mf, ts, tol):
    """Interval bounds for the one-sided slopes along every direction in ts
    at every attaining point: four (nk, nu) arrays
    (RM_lo, RM_hi, RP_lo, RP_hi) plus an exactness flag.

    Closed-form norms give degenerate (exact) intervals; the bracket path
    shares one interval between both slopes, as in spaces.one_sided_derivatives.
    """
    rm_lo, rm_hi, rp_lo, rp_hi = [], [], [], []
    exact = True
    for pt in mf:
        sl = directional_slopes(
            f.space.spec, f.values[pt], g.values[pt], ts, tol.tie_rel
        )
        if sl is not None:
            rm, rp = sl
            rm_lo.append(rm)
            rm_hi.append(rm)
            rp_lo.append(rp)
            rp_hi.append(rp)
            continue
        exact = False
        lo = np.empty(ts.shape[0])
        hi = np.empty(ts.shape[0])
        for i, t in enumerate(ts):
            d = one_sided_derivatives(f.space.spec, f.values[pt], t * g.values[pt], tol=tol)
            lo[i], hi[i] = d.rho_minus[0], d.rho_plus[1]
        rm_lo.append(lo)
        rm_hi.append(hi)
        rp_lo.append(lo)
        rp_hi.append(hi)
    return (np.stack(rm_lo), np.stack(rm_hi), np.stack(rp_lo), np.stack(rp_hi)), exact


def ckx_orthogonal_complex(
    f: CFunction,
    g: CFunction,
    u_grid: DirectionGrid = DEFAULT_U_GRID,
    tol: Tolerances = DEFAULT_TOL,
) -> Verdict:
    """f _|_ g in complex C0(K,X): for every u in the half-circle grid some
    k_u in M_f has g(k_u) in f(k_u)_u+ and some k'_u has g(k'_u) in f(k'_u)_u-.
    """
    _check_pair(f, g)
    if not f.space.is_complex:
        raise ConfigurationError("complex characterization on a real space")
    t = _trivial_zero_verdicts(f, g, tol)
    if t is not None:
        return t
    mf = norm_attaining_set(f, tol.rel)
    ts = u_grid.values()
    (RM_lo, RM_hi, RP_lo, RP_hi), exact = _slope_bounds(f, g, mf, ts, tol)
    # plus condition at u: exists k with rho_plus(f(k), u g(k)) >= 0
    m_lo = np.minimum(RP_lo.max(axis=0), (-RM_hi).max(axis=0))
    m_hi = np.minimum(RP_hi.max(axis=0), (-RM_lo).max(axis=0))
    worst = int(np.argmin(m_hi))
    lo = float(m_lo.min())
    hi = float(m_hi[worst])
    mid = 0.5 * (lo + hi)
    ny = max(pointwise_norms(g).max(), tol.floor)
    t_slope = tol.for_scale(ny)
    ev = {
        "attaining": mf,
        "grid": u_grid.count,
        "exact": exact,
        "worst_u": _jsonable(complex(ts[worst])),
        "witness_plus": [mf[i] for i in RP_hi.argmax(axis=0)],
        "witness_minus": [mf[i] for i in (-RM_lo).argmax(axis=0)],
    }
    status = _decide(lo, hi, t_slope)
    if status is Status.HOLDS:
        return Verdict(Status.HOLDS, mid, evidence=ev)
    if status is Status.FAILS:
        return _ckx_fail(f, g, mid, ev, tol)
    return Verdict(Status.UNDETERMINED, _clamp(mid, t_slope), evidence=ev)


def directional_license(f: CFunction, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether the connected-M_f hypothesis is satisfiable on this model:
    a singleton M_f, or a connected model attaining everywhere."""
    mf = norm_attaining_set(f, tol.rel)
    if len(mf) == 1:
        return True
    return f.k.connected and len(mf) == len(f.k.points)


def ckx_orthogonal_directional(
    f: CFunction,
    g: CFunction,
    t_grid: DirectionGrid = DEFAULT_T_GRID,
    tol: Tolerances = DEFAULT_TOL,
) -> Verdict:
    """f _|_ g via directional orthogonality: for each t in T some k_t in
    M_f has f(k_t) _|_t g(k_t).  Requires connected M_f (declared via the
    model; discrete models only when M_f is a singleton).  In the real
    field this reduces to: some k0 in M_f with f(k0) _|_ g(k0).
    """
    _check_pair(f, g)
    t = _trivial_zero_verdicts(f, g, tol)
    if t is not None:
        return t
    if not directional_license(f, tol):
        raise PreconditionError(
            "directional characterization needs connected M_f: "
            "singleton M_f or a connected model with M_f = K"
        )
    mf = norm_attaining_set(f, tol.rel)
    if not f.space.is_complex:
        best = None
        best_margin = -np.inf
        best_any = -np.inf
        any_und = False
        for pt in mf:
            v = is_bj_orthogonal(f.space, f.values[pt], g.values[pt], tol=tol)
            best_any = max(best_any, v.margin)
            if v.holds and v.margin > best_margin:
                best, best_margin = pt, v.margin
            any_und = any_und or v.undetermined
        ev = {"attaining": mf}
        if best is not None:
            ev["k0"] = best
            return Verdict(Status.HOLDS, best_margin, evidence=ev)
        if any_und:
            return Verdict(Status.UNDETERMINED, 0.0, evidence=ev)
        return _ckx_fail(f, g, best_any, ev, tol)
    ts = t_grid.values()
    (RM_lo, RM_hi, RP_lo, RP_hi), exact = _slope_bounds(f, g, mf, ts, tol)
    M_lo = np.minimum(RP_lo, -RM_hi)  # per (k, t) interval for min(rho+, -rho-)
    M_hi = np.minimum(RP_hi, -RM_lo)
    m_lo = M_lo.max(axis=0)
    m_hi = M_hi.max(axis=0)
    worst = int(np.argmin(m_hi))
    lo = float(m_lo.min())
    hi = float(m_hi[worst])
    mid = 0.5 * (lo + hi)
    ny = max(pointwise_norms(g).max(), tol.floor)
    t_slope = tol.for_scale(ny)
    ev = {
        "attaining": mf,
        "grid": t_grid.count,
        "exact": exact,
        "worst_t": _jsonable(complex(ts[worst])),
        "witness_points": [mf[i] for i in M_hi.argmax(axis=0)],
    }
    status = _decide(lo, hi, t_slope)
    if status is Status.HOLDS:
        return Verdict(Status.HOLDS, mid, evidence=ev)
    if status is Status.FAILS:
        return _ckx_fail(f, g, mid, ev, tol)
    return Verdict(Status.UNDETERMINED, _clamp(mid, t_slope), evidence=ev)


# ---------------------------------------------------------------------------
# the function-space oracle
# ---------------------------------------------------------------------------


def ckx_oracle(
    f: CFunction,
    g: CFunction,
    sweep_range: float | None = None,
    grid_points: int = 2049,
    t_grid: DirectionGrid | None = None,
    tol: Tolerances = DEFAULT_TOL,
) -> OracleResult:
    """Direct minimisation of lam -> ||f + lam g||_inf (convex in lam for
    real lam; polar sweep in the complex field)."""
    _check_pair(f, g)
    if grid_points < 3:
        raise DomainError("gridPoints must be >= 3")
    if sweep_range is not None and sweep_range <= 0:
        raise DomainError(f"range must be positive, got {sweep_range}")
    nf = sup_norm(f)
    ng = sup_norm(g)
    zero_lam = 0j if f.space.is_complex else 0.0
    if ng <= tol.floor:
        return OracleResult(nf, zero_lam)
    if nf <= tol.floor:
        return OracleResult(0.0, zero_lam)
    F, G = _stack_pair(f, g)
    code, p, w = f.space.spec.kernel_args(F.shape[1])
    R = sweep_range if sweep_range is not None else _default_range(nf, ng, tol)
    width = max(1e-12 * nf / max(ng, tol.floor), R * 1e-15)
    if f.space.is_complex:
        ts = (t_grid or DEFAULT_T_GRID).values()
        lam, v = sweep_complex(F, G, ts, R, code, p, w, width)
        return OracleResult(v, lam)
    lam, v = sweep_real(F, G, code, p, w, R, grid_points, width)
    return OracleResult(v, lam)


# ---------------------------------------------------------------------------
# instance (de)serialisation
# ---------------------------------------------------------------------------


def _coords_from_json(raw, complex_field):
    try:
        if complex_field:
            out = []
            for c in raw:
                if isinstance(c, (list, tuple)):
                    out.append(complex(c[0], c[1]))
                else:
                    out.append(complex(c))
            return np.array(out, dtype=np.complex128)
        return np.array([float(c) for c in raw], dtype=np.float64)
    except (TypeError, ValueError, IndexError) as exc:
        raise DataError(f"bad coordinate list {raw!r}") from exc


def instance_from_json(obj: dict):
    """Parse {"K": ..., "X": ..., "functions": {...}} into model pieces.

    Complex coordinates are [re, im] pairs; the field may be forced with
    an explicit "field" key on X and is otherwise inferred from the
    coordinate encoding.
    """
    if not isinstance(obj, dict):
        raise DataError("instance JSON root must be an object")
    for key in ("K", "X", "functions"):
        if key not in obj:
            raise DataError(f"instance JSON missing {key!r}")
    k = KModel.from_json(obj["K"])
    xobj = dict(obj["X"])
    fields = obj["functions"]
    if not isinstance(fields, dict) or not fields:
        raise DataError("functions must be a non-empty object")
    if "field" not in xobj:
        complex_seen = any(
            isinstance(c, (list, tuple))
            for fn in fields.values()
            for coords in fn.values()
            for c in coords
        )
        xobj["field"] = "complex" if complex_seen else "real"
    try:
        space = NormedSpace.from_json(xobj)
    except (ConfigurationError, KeyError) as exc:
        raise DataError(f"bad space spec: {exc}") from exc
    funcs = {}
    for name, fn in fields.items():
        if not isinstance(fn, dict):
            raise DataError(f"function {name!r} must map points to coordinates")
        missing = set(k.points) - set(fn)
        if missing:
            raise DataError(f"function {name!r} missing points {sorted(missing)}")
        vals = {pt: _coords_from_json(fn[pt], space.is_complex) for pt in k.points}
        try:
            funcs[name] = CFunction(k, space, vals)
        except (ConfigurationError, CapacityError, DomainError) as exc:
            raise DataError(f"function {name!r}: {exc}") from exc
    return k, space, funcs


def instance_to_json(functions: dict[str, CFunction]) -> dict:
    some = next(iter(functions.values()))
    return {
        "K": some.k.to_json(),
        "X": some.space.to_json(),
        "functions": {name: fn.to_json() for name, fn in functions.items()},
    }
