"""Compiled twin of numpy_backend.

Same surface, same formulas, same per-element operation order; see the
backend-parity tests.  horner must stay bit-identical with the numpy
code path (the SVG goldens depend on it), which is why setup.py builds
this module with -ffp-contract=off and CYTHON_CCOMPLEX=0.
"""

import numpy as np

from libc.math cimport floor, log1p, sqrt

BACKEND = "speedups"

cdef double _DIAG2 = 1e-16


def horner(coef, z):
    """Evaluate sum_n coef[n] * z**n elementwise for a batch of points."""
    coef = np.ascontiguousarray(coef, dtype=np.complex128)
    z = np.ascontiguousarray(z, dtype=np.complex128)
    out = np.empty(z.shape[0] if z.ndim else 1, dtype=np.complex128)
    cdef double complex[::1] c = coef
    cdef double complex[::1] zz = z.ravel()
    cdef double complex[::1] o = out
    cdef Py_ssize_t m = zz.shape[0]
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t i, k
    cdef double complex acc, zi
    for i in range(m):
        zi = zz[i]
        acc = c[n - 1]
        for k in range(n - 2, -1, -1):
            acc = acc * zi + c[k]
        o[i] = acc
    return out


def gamma_pairs(z, w):
    """Biharmonic Green function, elementwise over paired arrays."""
    z = np.ascontiguousarray(z, dtype=np.complex128)
    w = np.ascontiguousarray(w, dtype=np.complex128)
    out = np.empty(z.shape[0] if z.ndim else 1, dtype=np.float64)
    cdef double complex[::1] za = z.ravel()
    cdef double complex[::1] wa = w.ravel()
    cdef double[::1] o = out
    cdef Py_ssize_t m = za.shape[0]
    cdef Py_ssize_t i
    cdef double pz, pw, pp, dre, dim, d2, q
    for i in range(m):
        pz = 1.0 - (za[i].real * za[i].real + za[i].imag * za[i].imag)
        pw = 1.0 - (wa[i].real * wa[i].real + wa[i].imag * wa[i].imag)
        pp = pz * pw
        dre = za[i].real - wa[i].real
        dim = za[i].imag - wa[i].imag
        d2 = dre * dre + dim * dim
        if d2 < _DIAG2:
            o[i] = pp
        else:
            q = pp / (d2 + pp)
            o[i] = d2 * log1p(-q) + pp
    return out


def poisson_matvec(nodes, weights, vals, z):
    """u(z_j) = sum_k weights[k] * P(z_j, nodes[k]) * vals[k]."""
    nodes = np.ascontiguousarray(nodes, dtype=np.complex128)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    vals = np.ascontiguousarray(vals, dtype=np.complex128)
    z = np.ascontiguousarray(z, dtype=np.complex128)
    out = np.empty(z.shape[0] if z.ndim else 1, dtype=np.complex128)
    cdef double complex[::1] nd = nodes
    cdef double[::1] wt = weights
    cdef double complex[::1] va = vals
    cdef double complex[::1] zz = z.ravel()
    cdef double complex[::1] o = out
    cdef Py_ssize_t m = zz.shape[0]
    cdef Py_ssize_t n = nd.shape[0]
    cdef Py_ssize_t j, k
    cdef double pz, dre, dim, den, p
    cdef double accr, acci, wr, wi
    for j in range(m):
        pz = 1.0 - (zz[j].real * zz[j].real + zz[j].imag * zz[j].imag)
        accr = 0.0
        acci = 0.0
        for k in range(n):
            # d = 1 - conj(z)*node
            dre = 1.0 - (zz[j].real * nd[k].real + zz[j].imag * nd[k].imag)
            dim = -(zz[j].real * nd[k].imag - zz[j].imag * nd[k].real)
            den = dre * dre + dim * dim
            p = pz / den * wt[k]
            wr = va[k].real
            wi = va[k].imag
            accr += p * wr
            acci += p * wi
        o[j] = accr + 1j * acci
    return out


def dirichlet_matvec(nodes, weights, phi, psi, z):
    """Clamped-problem quadrature sum at interior points (see twin)."""
    nodes = np.ascontiguousarray(nodes, dtype=np.complex128)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    phi = np.ascontiguousarray(phi, dtype=np.complex128)
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    z = np.ascontiguousarray(z, dtype=np.complex128)
    out = np.empty(z.shape[0] if z.ndim else 1, dtype=np.complex128)
    cdef double complex[::1] nd = nodes
    cdef double[::1] wt = weights
    cdef double complex[::1] ph = phi
    cdef double complex[::1] ps = psi
    cdef double complex[::1] zz = z.ravel()
    cdef double complex[::1] o = out
    cdef Py_ssize_t m = zz.shape[0]
    cdef Py_ssize_t n = nd.shape[0]
    cdef Py_ssize_t j, k
    cdef double pz, pz2, pz3, dre, dim, den, hc, fk
    cdef double accr, acci
    for j in range(m):
        pz = 1.0 - (zz[j].real * zz[j].real + zz[j].imag * zz[j].imag)
        pz2 = pz * pz
        pz3 = pz2 * pz
        accr = 0.0
        acci = 0.0
        for k in range(n):
            dre = 1.0 - (zz[j].real * nd[k].real + zz[j].imag * nd[k].imag)
            dim = -(zz[j].real * nd[k].imag - zz[j].imag * nd[k].real)
            den = dre * dre + dim * dim
            hc = pz2 / den
            fk = 0.5 * hc + 0.5 * pz3 / (den * den)
            accr += wt[k] * (fk * ph[k].real - 0.5 * hc * ps[k].real)
            acci += wt[k] * (fk * ph[k].imag - 0.5 * hc * ps[k].imag)
        o[j] = accr + 1j * acci
    return out


def criterion_min_scan(C, D):
    """min |C @ D| with its index; C (n_z, N) complex, D (N, n_t) real."""
    C = np.ascontiguousarray(C, dtype=np.complex128)
    Dt = np.ascontiguousarray(np.asarray(D, dtype=np.float64).T)
    cdef double complex[:, ::1] cc = C
    cdef double[:, ::1] dt = Dt
    cdef Py_ssize_t nz = cc.shape[0]
    cdef Py_ssize_t nn = cc.shape[1]
    cdef Py_ssize_t nt = dt.shape[0]
    cdef Py_ssize_t iz, it, k
    cdef double sr, si, a2
    cdef double best = np.inf
    cdef Py_ssize_t bi = 0, bt = 0
    for iz in range(nz):
        for it in range(nt):
            sr = 0.0
            si = 0.0
            for k in range(nn):
                sr += cc[iz, k].real * dt[it, k]
                si += cc[iz, k].imag * dt[it, k]
            a2 = sr * sr + si * si
            if a2 < best:
                best = a2
                bi = iz
                bt = it
    return sqrt(best), int(bi), int(bt)


def near_pairs(pts, radii):
    """Candidate collision pairs via a uniform hash grid.

    Same contract as the numpy twin: pair (i, j), i < j, reported when
    |pts[i]-pts[j]| <= max(radii[i], radii[j]); rows sorted.
    """
    pts = np.ascontiguousarray(pts, dtype=np.complex128)
    radii = np.ascontiguousarray(radii, dtype=np.float64)
    cdef double complex[::1] p = pts
    cdef double[::1] r = radii
    cdef Py_ssize_t m = p.shape[0]
    if m == 0:
        return np.empty((0, 2), dtype=np.int64)
    cdef double cell = np.max(radii)
    if cell <= 0.0:
        return np.empty((0, 2), dtype=np.int64)
    cdef double x0 = np.min(pts.real)
    cdef double y0 = np.min(pts.imag)
    cdef dict grid = {}
    cdef list found = []
    cdef list bucket
    cdef Py_ssize_t i, j, t
    cdef long long ix, iy, gx, gy, key
    cdef double dx, dy, rr
    for i in range(m):
        ix = <long long> floor((p[i].real - x0) / cell)
        iy = <long long> floor((p[i].imag - y0) / cell)
        for gx in range(ix - 1, ix + 2):
            for gy in range(iy - 1, iy + 2):
                key = gx * 2147483647 + gy
                bucket = <list> grid.get(key)
                if bucket is None:
                    continue
                for t in range(len(bucket)):
                    j = <Py_ssize_t> bucket[t]
                    dx = p[i].real - p[j].real
                    dy = p[i].imag - p[j].imag
                    rr = r[i] if r[i] > r[j] else r[j]
                    if dx * dx + dy * dy <= rr * rr:
                        found.append((j, i))
        key = ix * 2147483647 + iy
        bucket = <list> grid.get(key)
        if bucket is None:
            grid[key] = [i]
        else:
            bucket.append(i)
    if not found:
        return np.empty((0, 2), dtype=np.int64)
    out = np.array(sorted(found), dtype=np.int64)
    return out
