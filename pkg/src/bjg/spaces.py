"""Scalar fields, the norm catalog, and one-sided derivatives of norms.

Every orthogonality predicate in this package reduces to the sign of the
one-sided derivatives of the convex map t -> ||x + t*y|| at t = 0.  For the
whole catalog except general-p spaces these derivatives have closed forms;
a difference-quotient bracket path covers the rest and doubles as an
independent cross-check of the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import CapacityError, ConfigurationError, DomainError

_EPS = float(np.finfo(np.float64).eps)


class ScalarField(str, Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class Tolerances:
    """Relative tolerances with an absolute floor, shared by all predicates.

    rel scales with the norm of the relevant input (||x|| for value
    comparisons, ||y|| for slope comparisons); floor guards the zero limit.
    tie_rel is the active-set threshold: sup/wsup coordinates within
    tie_rel*||x|| of the max count as attaining, lp(1) coordinates below
    tie_rel*||x|| count as zero.
    """

    rel: float = 1e-9
    floor: float = 1e-12
    tie_rel: float = 1e-9
    decisive_factor: float = 10.0

    def for_scale(self, scale: float) -> float:
        return max(self.rel * scale, self.floor)


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class NormSpec:
    """One entry of the norm catalog.

    variant "lp" needs p in [1, inf); "wsup" needs strictly positive
    weights; "c00" (finite-support sup) needs a capacity bound max_dim and
    admits vectors of differing lengths, zero-padded for arithmetic.
    """

    variant: str
    p: float | None = None
    weights: tuple[float, ...] | None = None
    max_dim: int | None = None

    def __post_init__(self):
        if self.variant == "lp":
            if self.p is None or not (1.0 <= self.p < np.inf):
                raise ConfigurationError(f"lp norm needs 1 <= p < inf, got {self.p}")
        elif self.variant == "wsup":
            if not self.weights or any(w <= 0 for w in self.weights):
                raise ConfigurationError("wsup needs strictly positive weights")
        elif self.variant == "c00":
            if self.max_dim is None or self.max_dim < 1:
                raise ConfigurationError("c00 needs max_dim >= 1")
        elif self.variant != "sup":
            raise ConfigurationError(f"unknown norm variant {self.variant!r}")

    @classmethod
    def lp(cls, p: float) -> "NormSpec":
        return cls("lp", p=float(p))

    @classmethod
    def sup(cls) -> "NormSpec":
        return cls("sup")

    @classmethod
    def weighted_sup(cls, weights) -> "NormSpec":
        return cls("wsup", weights=tuple(float(w) for w in weights))

    @classmethod
    def c00(cls, max_dim: int) -> "NormSpec":
        return cls("c00", max_dim=int(max_dim))

    def to_json(self) -> dict:
        out = {"norm": self.variant}
        if self.variant == "lp":
            out["p"] = self.p
        elif self.variant == "wsup":
            out["weights"] = list(self.weights)
        elif self.variant == "c00":
            out["maxDim"] = self.max_dim
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "NormSpec":
        variant = obj.get("norm")
        if variant == "lp":
            return cls.lp(obj["p"])
        if variant == "sup":
            return cls.sup()
        if variant == "wsup":
            return cls.weighted_sup(obj["weights"])
        if variant == "c00":
            return cls.c00(obj["maxDim"])
        raise ConfigurationError(f"unknown norm variant {variant!r}")

    # kernel dispatch: (code, p, weights); c00 becomes sup after padding
    def kernel_args(self, dim: int):
        if self.variant == "lp":
            return 0, float(self.p), np.empty(0)
        if self.variant in ("sup", "c00"):
            return 1, 0.0, np.empty(0)
        if len(self.weights) != dim:
            raise ConfigurationError(
                f"wsup has {len(self.weights)} weights but vectors of dimension {dim}"
            )
        return 2, 0.0, np.asarray(self.weights, dtype=np.float64)


@dataclass(frozen=True)
class NormedSpace:
    """A scalar field together with a norm from the catalog: the space X."""

    field: ScalarField
    spec: NormSpec

    @property
    def is_complex(self) -> bool:
        return self.field is ScalarField.COMPLEX

    def to_json(self) -> dict:
        out = self.spec.to_json()
        out["field"] = self.field.value
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "NormedSpace":
        field = ScalarField(obj.get("field", "real"))
        return cls(field, NormSpec.from_json(obj))


def real_space(spec: NormSpec) -> NormedSpace:
    return NormedSpace(ScalarField.REAL, spec)


def complex_space(spec: NormSpec) -> NormedSpace:
    return NormedSpace(ScalarField.COMPLEX, spec)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


def as_vector(x, field: ScalarField = ScalarField.REAL) -> np.ndarray:
    """Coerce to a validated 1-D float64/complex128 array."""
    dtype = np.complex128 if field is ScalarField.COMPLEX else np.float64
    v = np.asarray(x)
    if v.ndim != 1 or v.size < 1:
        raise DomainError("vectors must be 1-D with at least one coordinate")
    if field is ScalarField.REAL and np.iscomplexobj(v):
        if np.any(v.imag != 0):
            raise ConfigurationError("complex coordinates in a real-field vector")
        v = v.real
    v = v.astype(dtype)
    if not np.all(np.isfinite(v.view(np.float64) if v.dtype == np.complex128 else v)):
        raise DomainError("vector coordinates must be finite")
    return v


def pad_pair(spec: NormSpec, x: np.ndarray, y: np.ndarray):
    """Zero-pad the shorter operand (c00 only); enforce equal dims otherwise."""
    if spec.variant == "c00":
        for v in (x, y):
            if v.shape[0] > spec.max_dim:
                raise CapacityError(
                    f"vector of length {v.shape[0]} exceeds max_dim {spec.max_dim}"
                )
        d = max(x.shape[0], y.shape[0])
        if x.shape[0] < d:
            x = np.concatenate([x, np.zeros(d - x.shape[0], dtype=x.dtype)])
        if y.shape[0] < d:
            y = np.concatenate([y, np.zeros(d - y.shape[0], dtype=y.dtype)])
        return x, y
    if x.shape[0] != y.shape[0]:
        raise ConfigurationError(
            f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}"
        )
    return x, y


# ---------------------------------------------------------------------------
# the norm
# ---------------------------------------------------------------------------


def norm(spec: NormSpec, x) -> float:
    """Value of the catalog norm at x."""
    v = np.asarray(x)
    if v.ndim != 1 or v.size < 1:
        raise DomainError("norm of an empty or non-1-D vector")
    if not np.all(np.isfinite(v.view(np.float64) if v.dtype == np.complex128 else v)):
        raise DomainError("vector coordinates must be finite")
    a = np.abs(v)
    if spec.variant == "sup":
        return float(a.max())
    if spec.variant == "c00":
        if v.shape[0] > spec.max_dim:
            raise CapacityError(
                f"vector of length {v.shape[0]} exceeds max_dim {spec.max_dim}"
            )
        return float(a.max())
    if spec.variant == "wsup":
        if len(spec.weights) != v.shape[0]:
            raise ConfigurationError(
                f"wsup has {len(spec.weights)} weights but vector of dimension {v.shape[0]}"
            )
        return float((np.asarray(spec.weights) * a).max())
    p = spec.p
    if p == 1.0:
        return float(a.sum())
    if p == 2.0:
        return float(np.sqrt((a * a).sum()))
    return float((a**p).sum() ** (1.0 / p))


# ---------------------------------------------------------------------------
# one-sided derivatives
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OneSidedDerivatives:
    """Brackets for the two one-sided derivatives of t -> ||x + t*y|| at 0.

    Each interval contains its true limit.  Exact-path results have
    zero-width intervals; bracket-path results share one interval
    [q(-t), q(+t)] of difference quotients, valid for both limits by
    convexity.
    """

    rho_minus: tuple[float, float]
    rho_plus: tuple[float, float]
    step_used: float
    method: str

    @property
    def minus_mid(self) -> float:
        return 0.5 * (self.rho_minus[0] + self.rho_minus[1])

    @property
    def plus_mid(self) -> float:
        return 0.5 * (self.rho_plus[0] + self.rho_plus[1])

    @property
    def width(self) -> float:
        return max(
            self.rho_minus[1] - self.rho_minus[0],
            self.rho_plus[1] - self.rho_plus[0],
        )


def _active_set(weighted_abs: np.ndarray, tie_rel: float) -> np.ndarray:
    m = weighted_abs.max()
    return np.flatnonzero(weighted_abs >= m - tie_rel * m)


def _exact_one_sided(spec: NormSpec, x: np.ndarray, y: np.ndarray, tie_rel: float):
    """Closed-form (rho_minus, rho_plus) for sup/wsup/c00/lp(1)/lp(2).

    Returns None when no closed form applies (lp with p not in {1, 2}).
    Coordinate pairings use Re(conj(x_i) y_i), which covers the real field
    as a special case.
    """
    pair = (np.conj(x) * y).real
    a = np.abs(x)
    if spec.variant in ("sup", "c00", "wsup"):
        w = (
            np.asarray(spec.weights, dtype=np.float64)
            if spec.variant == "wsup"
            else np.ones_like(a)
        )
        act = _active_set(w * a, tie_rel)
        d = w[act] * pair[act] / a[act]
        return float(d.min()), float(d.max())
    if spec.p == 2.0:
        v = float(pair.sum() / np.sqrt((a * a).sum()))
        return v, v
    if spec.p == 1.0:
        nx = a.sum()
        zero = a <= tie_rel * nx
        base = float((pair[~zero] / a[~zero]).sum())
        extra = float(np.abs(y[zero]).sum())
        return base - extra, base + extra
    return None


def _norm_value(spec: NormSpec, v: np.ndarray):
    """Norm without validation or float64 coercion (dtype-preserving)."""
    a = np.abs(v)
    if spec.variant in ("sup", "c00"):
        return a.max()
    if spec.variant == "wsup":
        return (np.asarray(spec.weights, dtype=a.dtype) * a).max()
    p = spec.p
    if p == 1.0:
        return a.sum()
    if p == 2.0:
        return np.sqrt((a * a).sum())
    return (a**p).sum() ** (1.0 / p)


def _bracket_one_sided(
    spec: NormSpec,
    x: np.ndarray,
    y: np.ndarray,
    step: float,
    tol: Tolerances,
):
    """Difference-quotient bracket [q(-t), q(+t)] with a halving schedule.

    Convexity gives q(-t) <= rho'_- <= rho'_+ <= q(+t) for every t > 0 and
    monotone tightening as t shrinks, so the running intersection of the
    roundoff-padded intervals is always a valid bracket: once the step is
    small enough for cancellation noise to dominate, the pad (which grows
    like eps/t) keeps new intervals wide, and the intersection simply stops
    improving.  Halving stops at the width target or the step floor.

    Works on x/||x||, y/||y|| in extended precision (rho' is invariant in
    the first argument and linear in the second, so the rescaling is
    lossless) to push the cancellation floor well under the 1e-6 bracket
    budget; platforms where long double is double degrade gracefully.
    """
    nx = norm(spec, x)
    ny = norm(spec, y)
    if ny == 0.0:
        return (0.0, 0.0), step if step else 0.0
    ld = np.clongdouble if np.iscomplexobj(x) else np.longdouble
    eps = float(np.finfo(np.longdouble).eps)
    xh = (x / nx).astype(ld)
    yh = (y / ny).astype(ld)
    nxh = _norm_value(spec, xh)
    t = step * ny / nx if step is not None else 1e-3
    target = max(1e-9, tol.floor)
    lo, hi = -np.inf, np.inf
    t_used = t
    while True:
        qp = float((_norm_value(spec, xh + t * yh) - nxh) / t)
        qm = float((nxh - _norm_value(spec, xh - t * yh)) / t)
        pad = 16.0 * eps * (1.0 + t) / t + 4.0 * _EPS
        nlo = max(lo, qm - pad)
        nhi = min(hi, qp + pad)
        if nlo <= nhi:
            lo, hi = nlo, nhi
            t_used = t
        if hi - lo <= target:
            break
        if t / 2.0 < 1e-12:
            break
        t /= 2.0
    return (ny * lo, ny * hi), t_used * nx / ny


def one_sided_derivatives(
    spec: NormSpec,
    x,
    y,
    step: float | None = None,
    tol: Tolerances = DEFAULT_TOL,
    method: str = "auto",
) -> OneSidedDerivatives:
    """One-sided derivative brackets of t -> ||x + t*y|| at t = 0.

    method "auto" uses the closed form where one exists and the
    difference-quotient bracket otherwise; "exact"/"bracket" force a path
    (forcing "exact" on a general-p norm raises ConfigurationError).
    x must be non-zero; callers handle x = 0 themselves.
    """
    field = ScalarField.COMPLEX if (np.iscomplexobj(x) or np.iscomplexobj(y)) else ScalarField.REAL
    xv = as_vector(x, field)
    yv = as_vector(y, field)
    xv, yv = pad_pair(spec, xv, yv)
    if norm(spec, xv) <= tol.floor:
        raise DomainError("one-sided derivatives need x != 0")
    if step is not None and step <= 0:
        raise DomainError(f"step must be positive, got {step}")

    if method not in ("auto", "exact", "bracket"):
        raise ConfigurationError(f"unknown method {method!r}")
    if method != "bracket":
        exact = _exact_one_sided(spec, xv, yv, tol.tie_rel)
        if exact is not None:
            rm, rp = exact
            return OneSidedDerivatives((rm, rm), (rp, rp), 0.0, "exact")
        if method == "exact":
            raise ConfigurationError(
                f"no exact derivative path for {spec.variant}(p={spec.p})"
            )
    bracket, t_used = _bracket_one_sided(spec, xv, yv, step, tol)
    return OneSidedDerivatives(bracket, bracket, t_used, "bracket")


# ---------------------------------------------------------------------------
# support functionals (used by the smoothness evidence)
# ---------------------------------------------------------------------------


def support_functional(spec: NormSpec, x) -> np.ndarray:
    """One norming functional of x: Re<phi, x> = ||x||, dual norm 1.

    At non-smooth points an arbitrary extreme choice is made (first
    attaining coordinate for sup-type norms).
    """
    v = np.asarray(x)
    nx = norm(spec, v)
    if nx == 0.0:
        raise DomainError("support functional of the zero vector")
    a = np.abs(v)
    phi = np.zeros_like(v)
    if spec.variant in ("sup", "c00", "wsup"):
        w = (
            np.asarray(spec.weights, dtype=np.float64)
            if spec.variant == "wsup"
            else np.ones_like(a)
        )
        i = int(np.argmax(w * a))
        phi[i] = w[i] * v[i] / a[i]
        return phi
    p = spec.p
    if p == 1.0:
        nz = a > 0
        phi[nz] = v[nz] / a[nz]
        return phi
    nz = a > 0
    phi[nz] = v[nz] * a[nz] ** (p - 2.0) / nx ** (p - 1.0)
    return phi


def dual_norm(spec: NormSpec, phi) -> float:
    """Norm of a functional (coordinate vector) in the dual of the catalog norm."""
    v = np.asarray(phi)
    a = np.abs(v)
    if spec.variant in ("sup", "c00"):
        return float(a.sum())
    if spec.variant == "wsup":
        return float((a / np.asarray(spec.weights)).sum())
    p = spec.p
    if p == 1.0:
        return float(a.max())
    q = p / (p - 1.0)
    return float((a**q).sum() ** (1.0 / q))


def functional_value(phi, x) -> float:
    """Action Re<phi, x> of a coordinate functional."""
    return float((np.conj(np.asarray(phi)) * np.asarray(x)).real.sum())
