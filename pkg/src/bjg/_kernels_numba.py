"""Numba kernels: norm evaluation along pencils x + lambda*y.

Default backend (see backend.py).  Explicit inner loops; numba specialises
each kernel for float64 and complex128 inputs from the same source.
Norm codes as in _kernels_numpy: 0 = lp(p), 1 = sup, 2 = weighted sup.
"""

import numpy as np
from numba import njit

LP, SUP, WSUP = 0, 1, 2


@njit(cache=True)
def _row_val(F, G, lam, i, code, p, w):
    d = F.shape[1]
    if code == 1:
        m = 0.0
        for j in range(d):
            a = abs(F[i, j] + lam * G[i, j])
            if a > m:
                m = a
        return m
    if code == 2:
        m = 0.0
        for j in range(d):
            a = w[j] * abs(F[i, j] + lam * G[i, j])
            if a > m:
                m = a
        return m
    if p == 1.0:
        s = 0.0
        for j in range(d):
            s += abs(F[i, j] + lam * G[i, j])
        return s
    if p == 2.0:
        s = 0.0
        for j in range(d):
            a = abs(F[i, j] + lam * G[i, j])
            s += a * a
        return np.sqrt(s)
    s = 0.0
    for j in range(d):
        s += abs(F[i, j] + lam * G[i, j]) ** p
    return s ** (1.0 / p)


@njit(cache=True)
def _pencil_val(F, G, lam, code, p, w):
    n = F.shape[0]
    best = 0.0
    for i in range(n):
        v = _row_val(F, G, lam, i, code, p, w)
        if v > best:
            best = v
    return best


@njit(cache=True)
def row_norms(V, code, p, w):
    n, d = V.shape
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        if code == 1:
            m = 0.0
            for j in range(d):
                a = abs(V[i, j])
                if a > m:
                    m = a
            out[i] = m
        elif code == 2:
            m = 0.0
            for j in range(d):
                a = w[j] * abs(V[i, j])
                if a > m:
                    m = a
            out[i] = m
        elif p == 1.0:
            s = 0.0
            for j in range(d):
                s += abs(V[i, j])
            out[i] = s
        elif p == 2.0:
            s = 0.0
            for j in range(d):
                a = abs(V[i, j])
                s += a * a
            out[i] = np.sqrt(s)
        else:
            s = 0.0
            for j in range(d):
                s += abs(V[i, j]) ** p
            out[i] = s ** (1.0 / p)
    return out


@njit(cache=True)
def pencil_values(F, G, lams, code, p, w):
    m = lams.shape[0]
    out = np.empty(m, dtype=np.float64)
    for k in range(m):
        out[k] = _pencil_val(F, G, lams[k], code, p, w)
    return out


@njit(cache=True)
def pencil_min(F, G, lo, hi, code, p, w, max_iter, width):
    best_lam = lo
    best_val = _pencil_val(F, G, lo, code, p, w)
    v = _pencil_val(F, G, hi, code, p, w)
    if v < best_val:
        best_lam = hi
        best_val = v
    for _ in range(max_iter):
        if hi - lo <= width:
            break
        third = (hi - lo) / 3.0
        m1 = lo + third
        m2 = hi - third
        v1 = _pencil_val(F, G, m1, code, p, w)
        v2 = _pencil_val(F, G, m2, code, p, w)
        if v1 < best_val:
            best_lam = m1
            best_val = v1
        if v2 < best_val:
            best_lam = m2
            best_val = v2
        if v1 < v2:
            hi = m2
        else:
            lo = m1
    mid = 0.5 * (lo + hi)
    v = _pencil_val(F, G, mid, code, p, w)
    if v < best_val:
        best_lam = mid
        best_val = v
    return best_lam, best_val


@njit(cache=True)
def polar_min(F, G, ts, alpha_hi, code, p, w, max_iter, width):
    best_val = _pencil_val(F, G, 0.0, code, p, w)
    best_re = 0.0
    best_im = 0.0
    nt = ts.shape[0]
    for it in range(nt):
        GT = ts[it] * G
        lo = 0.0
        hi = alpha_hi
        loc_alpha = hi
        loc_val = _pencil_val(F, GT, hi, code, p, w)
        for _ in range(max_iter):
            if hi - lo <= width:
                break
            third = (hi - lo) / 3.0
            m1 = lo + third
            m2 = hi - third
            v1 = _pencil_val(F, GT, m1, code, p, w)
            v2 = _pencil_val(F, GT, m2, code, p, w)
            if v1 < loc_val:
                loc_alpha = m1
                loc_val = v1
            if v2 < loc_val:
                loc_alpha = m2
                loc_val = v2
            if v1 < v2:
                hi = m2
            else:
                lo = m1
        mid = 0.5 * (lo + hi)
        v = _pencil_val(F, GT, mid, code, p, w)
        if v < loc_val:
            loc_alpha = mid
            loc_val = v
        if loc_val < best_val:
            best_val = loc_val
            lam = ts[it] * loc_alpha
            best_re = lam.real
            best_im = lam.imag
    return best_val, best_re, best_im
