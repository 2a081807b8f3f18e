"""Pure numpy implementations of the hot kernels.

The compiled twin in ``_speedups.pyx`` exposes the same surface; the
package picks one at import time (see ``_core/__init__.py``).  Keep the
operation ORDER here aligned with the compiled code: ``horner`` must be
bit-identical across backends (the SVG goldens depend on it); the
reductions may differ by accumulated rounding only.
"""

import numpy as np
from scipy.spatial import cKDTree

BACKEND = "numpy"

_DIAG2 = 1e-16  # squared diagonal cutoff for the biharmonic Green function


def horner(coef, z):
    """Evaluate sum_n coef[n] * z**n elementwise for a batch of points.

    Sequential in n, vectorized over z.  The multiply is spelled out on
    real components: numpy's complex product kernel may contract to FMA,
    which would break the bitwise match with the compiled loop (built
    with -ffp-contract=off), so each rounding step is forced to be a
    plain binary operation here.
    """
    coef = np.ascontiguousarray(coef, dtype=np.complex128)
    z = np.ascontiguousarray(z, dtype=np.complex128)
    zr = z.real
    zi = z.imag
    ar = np.full(z.shape, coef[-1].real, dtype=np.float64)
    ai = np.full(z.shape, coef[-1].imag, dtype=np.float64)
    for n in range(coef.size - 2, -1, -1):
        tr = ar * zr - ai * zi + coef[n].real
        ai = ar * zi + ai * zr + coef[n].imag
        ar = tr
    out = np.empty(z.shape, dtype=np.complex128)
    out.real = ar
    out.imag = ai
    return out


def gamma_pairs(z, w):
    """Biharmonic Green function, elementwise over paired arrays.

    Uses |1 - z*conj(w)|^2 = |z-w|^2 + (1-|z|^2)(1-|w|^2) so the log is
    a log1p of a quantity in [0,1): no cancellation near the boundary.
    Within 1e-8 of the diagonal the x*log(x) term is replaced by its
    limit, leaving (1-|z|^2)(1-|w|^2).
    """
    z = np.ascontiguousarray(z, dtype=np.complex128)
    w = np.ascontiguousarray(w, dtype=np.complex128)
    pz = 1.0 - (z.real * z.real + z.imag * z.imag)
    pw = 1.0 - (w.real * w.real + w.imag * w.imag)
    pp = pz * pw
    dre = z.real - w.real
    dim = z.imag - w.imag
    d2 = dre * dre + dim * dim
    out = np.empty(z.shape, dtype=np.float64)
    near = d2 < _DIAG2
    far = ~near
    with np.errstate(divide="ignore", invalid="ignore"):
        q = pp[far] / (d2[far] + pp[far])
        out[far] = d2[far] * np.log1p(-q) + pp[far]
    out[near] = pp[near]
    return out


def poisson_matvec(nodes, weights, vals, z):
    """u(z_j) = sum_k weights[k] * P(z_j, nodes[k]) * vals[k].

    P is the Poisson kernel (1-|z|^2)/|1 - conj(z)*node|^2; nodes are
    expected on the unit circle.
    """
    nodes = np.ascontiguousarray(nodes, dtype=np.complex128)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    vals = np.ascontiguousarray(vals, dtype=np.complex128)
    z = np.ascontiguousarray(z, dtype=np.complex128)
    out = np.empty(z.shape, dtype=np.complex128)
    wv = weights * vals
    step = max(1, 4_000_000 // max(nodes.size, 1))
    for s in range(0, z.size, step):
        zb = z[s:s + step]
        pz = 1.0 - (zb.real * zb.real + zb.imag * zb.imag)
        d = 1.0 - np.conj(zb)[:, None] * nodes[None, :]
        den = d.real * d.real + d.imag * d.imag
        out[s:s + step] = (pz[:, None] / den) @ wv
    return out


def dirichlet_matvec(nodes, weights, phi, psi, z):
    """Clamped-problem quadrature sum at interior points.

    u(z) = sum_k w_k * [ Fk(node_k, z) * phi_k - 0.5 * Hc(node_k, z) * psi_k ]

    with Fk the biharmonic Poisson kernel and Hc the harmonic
    compensator; psi is the exterior normal derivative (the sign flip
    from the interior-normal Green identity is baked into the minus).
    """
    nodes = np.ascontiguousarray(nodes, dtype=np.complex128)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    phi = np.ascontiguousarray(phi, dtype=np.complex128)
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    z = np.ascontiguousarray(z, dtype=np.complex128)
    out = np.empty(z.shape, dtype=np.complex128)
    wphi = weights * phi
    wpsi = weights * psi
    step = max(1, 4_000_000 // max(nodes.size, 1))
    for s in range(0, z.size, step):
        zb = z[s:s + step]
        pz = 1.0 - (zb.real * zb.real + zb.imag * zb.imag)
        d = 1.0 - np.conj(zb)[:, None] * nodes[None, :]
        den = d.real * d.real + d.imag * d.imag
        hc = (pz * pz)[:, None] / den
        fk = 0.5 * hc + 0.5 * (pz ** 3)[:, None] / (den * den)
        out[s:s + step] = fk @ wphi - 0.5 * (hc @ wpsi)
    return out


def criterion_min_scan(C, D):
    """min |C @ D| with its index, chunked so S never materializes whole.

    C: (n_z, N) complex coefficient rows, D: (N, n_t) real ratio table.
    Returns (min_abs, iz, it).
    """
    C = np.ascontiguousarray(C, dtype=np.complex128)
    Dc = np.ascontiguousarray(D, dtype=np.float64).astype(np.complex128)
    nt = Dc.shape[1]
    best = np.inf
    bi = 0
    bt = 0
    step = max(1, 8_000_000 // max(nt, 1))
    for s in range(0, C.shape[0], step):
        S = C[s:s + step] @ Dc
        A = np.abs(S)
        k = int(np.argmin(A))
        i, j = divmod(k, nt)
        if A[i, j] < best:
            best = float(A[i, j])
            bi = s + i
            bt = j
    return best, bi, bt


def near_pairs(pts, radii):
    """Candidate collision pairs among image points.

    Pair (i, j), i < j, is reported when |pts[i]-pts[j]| <= max(radii[i],
    radii[j]).  Returns an (K, 2) int64 array sorted lexicographically.
    """
    pts = np.ascontiguousarray(pts, dtype=np.complex128)
    radii = np.ascontiguousarray(radii, dtype=np.float64)
    xy = np.column_stack([pts.real, pts.imag])
    tree = cKDTree(xy)
    balls = tree.query_ball_point(xy, r=radii)
    seen = set()
    for i, nb in enumerate(balls):
        for j in nb:
            if j != i:
                seen.add((i, j) if i < j else (j, i))
    if not seen:
        return np.empty((0, 2), dtype=np.int64)
    out = np.array(sorted(seen), dtype=np.int64)
    return out
