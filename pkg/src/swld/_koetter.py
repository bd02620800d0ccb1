"""Compiled inner loop for Koetter interpolation.

The numba kernel processes all points of one decode in a single call,
maintaining candidate coefficient matrices, their slice degrees, and the
cached Hasse-derivative evaluations exactly like the pure numpy
interpolator in :mod:`swld.listdecode` (which remains the reference
implementation and the fallback when numba is unavailable).

Arithmetic uses the sentinel-log convention: log[0] = 2*(q-1) and the exp
table is zero beyond 2*(q-1), so ``expz[logz[a] + logz[b]]`` multiplies
with zeros handled for free.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


@njit(cache=True, fastmath=False)
def _eval_powers_kernel(coeffs, exponents, expz, logz, q1):
    """For each exponent e: xor_a coeffs[a] * alpha^(a*e)."""
    out = np.zeros(len(exponents), dtype=np.int64)
    for idx in range(len(exponents)):
        e = exponents[idx] % q1
        acc = np.int64(0)
        for a in range(len(coeffs)):
            c = coeffs[a]
            if c != 0:
                acc ^= expz[logz[c] + (a * e) % q1]
        out[idx] = acc
    return out


def eval_powers_compiled(coeffs, exponents, vf):
    """Power-sum evaluation via numba when available, else None."""
    if not HAVE_NUMBA:
        return None
    res = _eval_powers_kernel(
        np.asarray(coeffs, dtype=np.int64), np.asarray(exponents, dtype=np.int64),
        vf.expz64, vf.logz64, np.int64(vf.period),
    )
    return res.astype(np.int32)


@njit(cache=True, fastmath=False)
def _interpolate_kernel(M, degs, used, E, expz, logz, q1, mult, w, ys):
    """Run Koetter over points (alpha^j, ys[j]); returns 0 or an error code."""
    ncand = M.shape[0]
    cap = M.shape[2]
    acc = np.zeros(mult, dtype=np.int64)
    xinv = np.zeros(mult, dtype=np.int64)
    d = np.zeros(ncand, dtype=np.int64)
    coef = np.zeros(ncand, dtype=np.int64)
    n = ys.shape[0]
    for j in range(n):
        logx = j % q1
        y0 = ys[j]
        x0 = expz[logx]
        for r in range(mult):
            xinv[r] = expz[(q1 - (r * logx) % q1) % q1]
        # Hasse x-derivatives of every slice at x0:
        #   D_r slice(x0) = x0^(-r) * xor_{a & r == r} coeff_a * x0^a
        for i in range(ncand):
            for b in range(ncand):
                db = degs[i, b]
                if db < 0:
                    for r in range(mult):
                        E[i, b, r] = 0
                    continue
                for r in range(mult):
                    acc[r] = 0
                for a in range(db + 1):
                    c = M[i, b, a]
                    if c == 0:
                        continue
                    p = expz[logz[c] + (a * logx) % q1]
                    for r in range(mult):
                        if (a & r) == r:
                            acc[r] ^= p
                for r in range(mult):
                    v = acc[r]
                    if v != 0 and xinv[r] != 1:
                        v = expz[logz[v] + logz[xinv[r]]]
                    E[i, b, r] = v
        ly0 = logz[y0] if y0 != 0 else 0
        for s in range(mult):
            # coef_b = C(b, s) * y0^(b-s); C(b, s) odd iff b & s == s
            for b in range(ncand):
                if b < s or (b & s) != s:
                    coef[b] = 0
                elif b == s:
                    coef[b] = 1
                elif y0 == 0:
                    coef[b] = 0
                else:
                    coef[b] = expz[((b - s) * ly0) % q1]
            for r in range(mult - s):
                nnz = 0
                for i in range(ncand):
                    a0 = 0
                    for b in range(s, ncand):
                        cb = coef[b]
                        if cb == 0:
                            continue
                        e = E[i, b, r]
                        if e == 0:
                            continue
                        a0 ^= expz[logz[e] + logz[cb]]
                    d[i] = a0
                    if a0 != 0:
                        nnz += 1
                if nnz == 0:
                    continue
                # pivot: smallest (weighted degree, leading y-degree, index)
                istar = -1
                best_wd = 1 << 60
                best_lead = 1 << 60
                for i in range(ncand):
                    if d[i] == 0:
                        continue
                    wd = -1
                    lead = -1
                    for b in range(ncand):
                        db = degs[i, b]
                        if db >= 0:
                            v = db + w * b
                            if v > wd or (v == wd and b > lead):
                                wd = v
                                lead = b
                    if wd < best_wd or (wd == best_wd and lead < best_lead):
                        best_wd = wd
                        best_lead = lead
                        istar = i
                dstar = d[istar]
                ldstar = logz[dstar]
                for i in range(ncand):
                    if i == istar or d[i] == 0:
                        continue
                    di = d[i]
                    ldi = logz[di]
                    for b in range(ncand):
                        la = degs[i, b]
                        lb = degs[istar, b]
                        top = la if la > lb else lb
                        newdeg = -1
                        for a in range(top + 1):
                            v = np.int64(0)
                            ca = M[i, b, a]
                            if ca != 0:
                                v = expz[logz[ca] + ldstar]
                            cb = M[istar, b, a]
                            if cb != 0:
                                v ^= expz[logz[cb] + ldi]
                            M[i, b, a] = v
                            if v != 0:
                                newdeg = a
                        degs[i, b] = newdeg
                    um = 0
                    for b in range(ncand):
                        if degs[i, b] + 1 > um:
                            um = degs[i, b] + 1
                    used[i] = um if um > 0 else 1
                    for b in range(ncand):
                        for rr in range(mult):
                            v = np.int64(0)
                            e1 = E[i, b, rr]
                            if e1 != 0:
                                v = expz[logz[e1] + ldstar]
                            e2 = E[istar, b, rr]
                            if e2 != 0:
                                v ^= expz[logz[e2] + ldi]
                            E[i, b, rr] = v
                # pivot <- (x - x0) * pivot
                if used[istar] + 1 > cap:
                    return 1  # capacity overflow: caller allocated too little
                lx0 = logz[x0]
                for b in range(ncand):
                    db = degs[istar, b]
                    if db < 0:
                        continue
                    for a in range(db + 1, 0, -1):
                        v = M[istar, b, a - 1]
                        ca = M[istar, b, a]
                        if ca != 0:
                            v ^= expz[logz[ca] + lx0]
                        M[istar, b, a] = v
                    c0 = M[istar, b, 0]
                    M[istar, b, 0] = expz[logz[c0] + lx0] if c0 != 0 else 0
                    degs[istar, b] = db + 1
                used[istar] = used[istar] + 1
                for b in range(ncand):
                    for rr in range(mult - 1, 0, -1):
                        E[istar, b, rr] = E[istar, b, rr - 1]
                    E[istar, b, 0] = 0
    return 0


def interpolate_compiled(ys: np.ndarray, multiplicity: int, weight: int, ell: int,
                         cap: int, vf) -> list[np.ndarray] | None:
    """Minimal Q slices via the numba kernel, or None when numba is absent."""
    if not HAVE_NUMBA:
        return None
    ncand = ell + 1
    M = np.zeros((ncand, ncand, cap), dtype=np.int64)
    degs = np.full((ncand, ncand), -1, dtype=np.int64)
    used = np.ones(ncand, dtype=np.int64)
    for i in range(ncand):
        M[i, i, 0] = 1
        degs[i, i] = 0
    E = np.zeros((ncand, ncand, multiplicity), dtype=np.int64)
    status = _interpolate_kernel(
        M, degs, used, E, vf.expz64, vf.logz64, np.int64(vf.period),
        np.int64(multiplicity), np.int64(weight),
        np.asarray(ys, dtype=np.int64),
    )
    if status != 0:
        from .errors import InterpolationError

        raise InterpolationError("interpolation exceeded its preallocated degree bound")
    # minimal candidate under the (1, w)-weighted order
    best = None
    for i in range(ncand):
        wd, lead = -1, -1
        for b in range(ncand):
            db = int(degs[i, b])
            if db >= 0:
                v = db + weight * b
                if v > wd or (v == wd and b > lead):
                    wd, lead = v, b
        key = (wd, lead, i)
        if wd >= 0 and (best is None or key < best[0]):
            best = (key, i)
    if best is None:
        from .errors import InterpolationError

        raise InterpolationError("all interpolation candidates vanished")
    i = best[1]
    out = []
    for b in range(ncand):
        db = int(degs[i, b])
        out.append(M[i, b, : db + 1].astype(np.int32) if db >= 0
                   else np.zeros(0, dtype=np.int32))
    return out
