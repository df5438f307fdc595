"""Pure-numpy kernels: norm evaluation along pencils x + lambda*y.

Reference backend; selected with BJG_BACKEND=numpy.  Same call surface as
the numba backend, vectorised over grid/direction axes instead of looped.

Norm codes: 0 = lp(p), 1 = sup, 2 = weighted sup.  Finite-support (c00)
vectors are padded before they reach the kernels and use code 1.
Arrays may be float64 or complex128; lambda parameters are always real.
"""

import numpy as np

LP, SUP, WSUP = 0, 1, 2


def row_norms(V, code, p, w):
    """Norm of each row of V, shape (..., d) -> (...)."""
    A = np.abs(V)
    if code == SUP:
        return A.max(axis=-1)
    if code == WSUP:
        return (A * w).max(axis=-1)
    if p == 1.0:
        return A.sum(axis=-1)
    if p == 2.0:
        return np.sqrt((A * A).sum(axis=-1))
    return (A**p).sum(axis=-1) ** (1.0 / p)


def pencil_values(F, G, lams, code, p, w):
    """max-over-rows norm of F + lam*G for each lam; (m,) result."""
    X = F[None, :, :] + lams[:, None, None] * G[None, :, :]
    return row_norms(X, code, p, w).max(axis=-1)


def _val(F, G, lam, code, p, w):
    return row_norms(F + lam * G, code, p, w).max()


def pencil_min(F, G, lo, hi, code, p, w, max_iter, width):
    """Ternary-search minimum of the convex map lam -> max_k |F_k + lam G_k|.

    Returns (argmin, min value); the value is one actually evaluated, so a
    caller can re-check it.
    """
    best_lam = lo
    best_val = _val(F, G, lo, code, p, w)
    v = _val(F, G, hi, code, p, w)
    if v < best_val:
        best_lam, best_val = hi, v
    for _ in range(max_iter):
        if hi - lo <= width:
            break
        third = (hi - lo) / 3.0
        m1 = lo + third
        m2 = hi - third
        v1 = _val(F, G, m1, code, p, w)
        v2 = _val(F, G, m2, code, p, w)
        if v1 < best_val:
            best_lam, best_val = m1, v1
        if v2 < best_val:
            best_lam, best_val = m2, v2
        if v1 < v2:
            hi = m2
        else:
            lo = m1
    mid = 0.5 * (lo + hi)
    v = _val(F, G, mid, code, p, w)
    if v < best_val:
        best_lam, best_val = mid, v
    return best_lam, best_val


def polar_min(F, G, ts, alpha_hi, code, p, w, max_iter, width):
    """Minimum of max_k |F_k + alpha*t*G_k| over t in ts, alpha in [0, alpha_hi].

    ts is a 1-D complex array of unit directions.  All directions are
    refined simultaneously (vectorised ternary search).  Returns
    (min value, lam.real, lam.imag) with lam = t*alpha at the minimum.
    """
    nt = ts.shape[0]
    GT = ts[:, None, None] * G[None, :, :]

    def vals(alpha):
        X = F[None, :, :] + alpha[:, None, None] * GT
        return row_norms(X, code, p, w).max(axis=-1)

    lo = np.zeros(nt)
    hi = np.full(nt, float(alpha_hi))
    best_alpha = lo.copy()
    best_val = vals(lo)
    v = vals(hi)
    take = v < best_val
    best_alpha = np.where(take, hi, best_alpha)
    best_val = np.where(take, v, best_val)
    for _ in range(max_iter):
        if (hi - lo).max() <= width:
            break
        third = (hi - lo) / 3.0
        m1 = lo + third
        m2 = hi - third
        v1 = vals(m1)
        v2 = vals(m2)
        take = v1 < best_val
        best_alpha = np.where(take, m1, best_alpha)
        best_val = np.where(take, v1, best_val)
        take = v2 < best_val
        best_alpha = np.where(take, m2, best_alpha)
        best_val = np.where(take, v2, best_val)
        left = v1 < v2
        hi = np.where(left, m2, hi)
        lo = np.where(left, lo, m1)
    mid = 0.5 * (lo + hi)
    v = vals(mid)
    take = v < best_val
    best_alpha = np.where(take, mid, best_alpha)
    best_val = np.where(take, v, best_val)
    k = int(best_val.argmin())
    lam = ts[k] * best_alpha[k]
    return float(best_val[k]), float(lam.real), float(lam.imag)
