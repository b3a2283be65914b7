"""Hot numeric kernels: numba-compiled with a pure-numpy fallback.

Set QLAT_NO_NUMBA=1 to force the numpy path; QLAT_THREADS caps numba's
thread count.  The exact-arithmetic layers never come through here --
only integer matrix algebra in the (x + y*sqrt(kappa))/2 encoding and
float scans over coefficient boxes.
"""

from __future__ import annotations

import os

import numpy as np

_NO_NUMBA = os.environ.get("QLAT_NO_NUMBA", "").lower() in ("1", "true", "yes")

try:
    if _NO_NUMBA:
        raise ImportError
    import numba
    from numba import njit

    if os.environ.get("QLAT_THREADS"):
        numba.set_num_threads(max(1, int(os.environ["QLAT_THREADS"])))
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# -- batched matrix product over (x + y*omega)/2 ------------------------
#
# omega is a quadratic integer with omega^2 = s + t*omega (tau: s=t=1;
# sqrt(kappa): s=kappa, t=0).  A matrix is a (d, d, 2) int64 array of
# numerators over a fixed denominator 2.  The product of two such
# matrices has denominator 4; group matrices always reduce back to
# denominator 2, which quad_matmul_batch asserts.

def _quad_matmul_batch_np(A: np.ndarray, B: np.ndarray, s: int, t: int) -> np.ndarray:
    ax, ay = A[..., 0], A[..., 1]
    bx, by = B[..., 0], B[..., 1]
    yy = np.einsum("nik,kj->nij", ay, by)
    cx = np.einsum("nik,kj->nij", ax, bx) + s * yy
    cy = np.einsum("nik,kj->nij", ax, by) + np.einsum("nik,kj->nij", ay, bx) + t * yy
    if (cx & 1).any() or (cy & 1).any():
        raise ArithmeticError("product left the half-integer ring")
    return np.stack((cx >> 1, cy >> 1), axis=-1)


if HAVE_NUMBA:

    @njit(cache=True)
    def _quad_matmul_batch_nb(A, B, s, t):  # pragma: no cover - jitted
        n, d = A.shape[0], A.shape[1]
        out = np.empty((n, d, d, 2), dtype=np.int64)
        for m in range(n):
            for i in range(d):
                for j in range(d):
                    cx = np.int64(0)
                    cy = np.int64(0)
                    for k in range(d):
                        ax = A[m, i, k, 0]
                        ay = A[m, i, k, 1]
                        bx = B[k, j, 0]
                        by = B[k, j, 1]
                        yy = ay * by
                        cx += ax * bx + s * yy
                        cy += ax * by + ay * bx + t * yy
                    if (cx & 1) or (cy & 1):
                        raise ArithmeticError("product left the half-integer ring")
                    out[m, i, j, 0] = cx >> 1
                    out[m, i, j, 1] = cy >> 1
        return out


def quad_matmul_batch(A: np.ndarray, B: np.ndarray, s: int, t: int) -> np.ndarray:
    """(n,d,d,2) @ (d,d,2) -> (n,d,d,2), all over denominator 2."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    if HAVE_NUMBA:
        return _quad_matmul_batch_nb(A, B, s, t)
    return _quad_matmul_batch_np(A, B, s, t)


# -- cut-and-project coefficient box scan -------------------------------

def _box_scan_np(par, perp, bounds, radius, normals, supports, ball_r):
    r = len(bounds)
    sizes = [2 * b + 1 for b in bounds]
    # enumerate the last three coefficients vectorized, the rest in a loop
    tail = min(3, r)
    head = r - tail
    grids = np.meshgrid(
        *[np.arange(-b, b + 1) for b in bounds[head:]], indexing="ij"
    )
    tail_coeffs = np.stack([g.ravel() for g in grids], axis=1).astype(np.float64)
    tail_par = tail_coeffs @ par[:, head:].T
    tail_perp = tail_coeffs @ perp[:, head:].T
    out = []
    head_iter = np.stack(
        np.meshgrid(*[np.arange(-b, b + 1) for b in bounds[:head]], indexing="ij"),
        axis=-1,
    ).reshape(-1, head) if head else np.zeros((1, 0))
    for hc in head_iter:
        p0 = par[:, :head] @ hc.astype(np.float64) if head else np.zeros(par.shape[0])
        q0 = perp[:, :head] @ hc.astype(np.float64) if head else np.zeros(perp.shape[0])
        pp = tail_par + p0
        qq = tail_perp + q0
        keep = (pp * pp).sum(axis=1) <= radius * radius + 1e-9
        if ball_r > 0:
            keep &= (qq * qq).sum(axis=1) < ball_r * ball_r
        else:
            proj = qq @ normals.T
            keep &= (np.abs(proj) < supports[None, :] - 1e-12).all(axis=1)
        if keep.any():
            sel = tail_coeffs[keep]
            full = np.empty((sel.shape[0], r))
            full[:, :head] = hc
            full[:, head:] = sel
            out.append(full)
    if not out:
        return np.zeros((0, r), dtype=np.int64)
    return np.concatenate(out).astype(np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _box_scan_nb(par, perp, bounds, radius, normals, supports, ball_r):  # pragma: no cover
        r = bounds.shape[0]
        d = par.shape[0]
        dp = perp.shape[0]
        nf = normals.shape[0]
        total = np.int64(1)
        for i in range(r):
            total *= 2 * bounds[i] + 1
        coeff = np.empty(r, dtype=np.int64)
        found = []
        r2 = radius * radius + 1e-9
        b2 = ball_r * ball_r
        for idx in range(total):
            rem = idx
            for i in range(r):
                size = 2 * bounds[i] + 1
                coeff[i] = rem % size - bounds[i]
                rem //= size
            ok = True
            s = 0.0
            for a in range(d):
                x = 0.0
                for i in range(r):
                    x += par[a, i] * coeff[i]
                s += x * x
                if s > r2:
                    ok = False
                    break
            if not ok:
                continue
            if ball_r > 0:
                s = 0.0
                for a in range(dp):
                    y = 0.0
                    for i in range(r):
                        y += perp[a, i] * coeff[i]
                    s += y * y
                if s >= b2:
                    continue
            else:
                q = np.empty(dp)
                for a in range(dp):
                    y = 0.0
                    for i in range(r):
                        y += perp[a, i] * coeff[i]
                    q[a] = y
                inside = True
                for f in range(nf):
                    proj = 0.0
                    for a in range(dp):
                        proj += normals[f, a] * q[a]
                    if abs(proj) >= supports[f] - 1e-12:
                        inside = False
                        break
                if not inside:
                    continue
            found.append(coeff.copy())
        out = np.empty((len(found), r), dtype=np.int64)
        for i in range(len(found)):
            out[i] = found[i]
        return out


def box_scan(par, perp, bounds, radius, normals=None, supports=None, ball_r=0.0):
    """Integer coefficient vectors whose parallel image lies in the radius
    ball and whose perpendicular image lies in the window.

    The window is either a ball (ball_r > 0) or the interior of a centrally
    symmetric polytope given by facet ``normals`` and ``supports``.
    """
    par = np.ascontiguousarray(par, dtype=np.float64)
    perp = np.ascontiguousarray(perp, dtype=np.float64)
    bounds = np.ascontiguousarray(bounds, dtype=np.int64)
    if normals is None:
        normals = np.zeros((0, perp.shape[0]))
        supports = np.zeros(0)
    normals = np.ascontiguousarray(normals, dtype=np.float64)
    supports = np.ascontiguousarray(supports, dtype=np.float64)
    if HAVE_NUMBA:
        return _box_scan_nb(par, perp, bounds, float(radius), normals, supports,
                            float(ball_r))
    return _box_scan_np(par, perp, bounds, float(radius), normals, supports,
                        float(ball_r))


# -- minimum nonzero parallel norm over a coefficient box ---------------

def _min_norm_np(par, bounds):
    r = len(bounds)
    tail = min(3, r)
    head = r - tail
    grids = np.meshgrid(*[np.arange(-b, b + 1) for b in bounds[head:]], indexing="ij")
    tail_coeffs = np.stack([g.ravel() for g in grids], axis=1).astype(np.float64)
    tail_par = tail_coeffs @ par[:, head:].T
    best = np.inf
    head_iter = np.stack(
        np.meshgrid(*[np.arange(-b, b + 1) for b in bounds[:head]], indexing="ij"),
        axis=-1,
    ).reshape(-1, head) if head else np.zeros((1, 0))
    tail_zero = (tail_coeffs == 0).all(axis=1)
    for hc in head_iter:
        p0 = par[:, :head] @ hc.astype(np.float64) if head else np.zeros(par.shape[0])
        pp = tail_par + p0
        norms = (pp * pp).sum(axis=1)
        if head and np.any(hc):
            m = norms.min()
        else:
            nz = norms[~tail_zero]
            if nz.size == 0:
                continue
            m = nz.min()
        best = min(best, m)
    return float(np.sqrt(best))


if HAVE_NUMBA:

    @njit(cache=True)
    def _min_norm_nb(par, bounds):  # pragma: no cover - jitted
        r = bounds.shape[0]
        d = par.shape[0]
        total = np.int64(1)
        for i in range(r):
            total *= 2 * bounds[i] + 1
        best = 1e300
        coeff = np.empty(r, dtype=np.int64)
        for idx in range(total):
            rem = idx
            zero = True
            for i in range(r):
                size = 2 * bounds[i] + 1
                coeff[i] = rem % size - bounds[i]
                if coeff[i] != 0:
                    zero = False
                rem //= size
            if zero:
                continue
            s = 0.0
            for a in range(d):
                x = 0.0
                for i in range(r):
                    x += par[a, i] * coeff[i]
                s += x * x
            if s < best:
                best = s
        return np.sqrt(best)


def min_nonzero_norm(par, bounds) -> float:
    """min |par @ m| over nonzero integer m with |m_i| <= bounds_i."""
    par = np.ascontiguousarray(par, dtype=np.float64)
    bounds = np.ascontiguousarray(bounds, dtype=np.int64)
    if HAVE_NUMBA:
        return float(_min_norm_nb(par, bounds))
    return _min_norm_np(par, bounds)


# -- structure factor by direct summation -------------------------------

def _structure_factor_np(points, ks):
    phases = points @ ks.T
    re = np.cos(phases).sum(axis=0)
    im = np.sin(phases).sum(axis=0)
    n = points.shape[0]
    return (re * re + im * im) / (n * n)


if HAVE_NUMBA:

    @njit(cache=True)
    def _structure_factor_nb(points, ks):  # pragma: no cover - jitted
        n, d = points.shape
        m = ks.shape[0]
        out = np.empty(m)
        for j in range(m):
            re = 0.0
            im = 0.0
            for i in range(n):
                phase = 0.0
                for a in range(d):
                    phase += points[i, a] * ks[j, a]
                re += np.cos(phase)
                im += np.sin(phase)
            out[j] = (re * re + im * im) / (n * n)
        return out


def structure_factor_sum(points: np.ndarray, ks: np.ndarray) -> np.ndarray:
    """Normalized |sum exp(i k.x)|^2 / N^2 for each row k of ks."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    ks = np.ascontiguousarray(np.atleast_2d(ks), dtype=np.float64)
    if HAVE_NUMBA:
        return _structure_factor_nb(points, ks)
    return _structure_factor_np(points, ks)
