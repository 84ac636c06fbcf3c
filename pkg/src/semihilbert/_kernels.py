"""Jitted numeric kernels.

Two hot paths live here: the cyclic Jacobi diagonalization of complex
Hermitian matrices (the package's only spectral engine) and the certified
angle sweep behind the numerical radius.  Everything else in the package
is thin numpy on top of these.
"""

import numpy as np
from numba import njit

# Off-diagonal Frobenius mass below this fraction of ||H||_F counts as
# converged.
_OFF_TOL = 1e-13
_MAX_SWEEPS = 100


@njit(cache=True)
def jacobi_inplace(H, V, want_vectors):
    """Diagonalize Hermitian H in place by cyclic Jacobi rotations.

    The diagonal of H converges to the eigenvalues; when ``want_vectors``
    is set, V (preinitialized to the identity) accumulates the unitary so
    that on exit ``H_in = V diag(H) V*``.  Returns 0 on convergence, 1 if
    the sweep budget ran out.
    """
    n = H.shape[0]
    if n <= 1:
        return 0
    norm_h = 0.0
    for i in range(n):
        for j in range(n):
            norm_h += abs(H[i, j]) ** 2
    norm_h = np.sqrt(norm_h)
    off_tol = _OFF_TOL * norm_h
    for _ in range(_MAX_SWEEPS):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += abs(H[i, j]) ** 2
        if np.sqrt(off) <= off_tol:
            return 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                h = H[p, q]
                ah = abs(h)
                if ah <= 1e-300:
                    continue
                # Unitary 2x2 rotation zeroing H[p, q]: factor out the
                # phase of the pivot, then a real Jacobi angle.
                ph = h / ah
                tau = (H[p, p].real - H[q, q].real) / (2.0 * ah)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    hip = H[i, p]
                    hiq = H[i, q]
                    H[i, p] = c * hip + s * np.conj(ph) * hiq
                    H[i, q] = -s * ph * hip + c * hiq
                for i in range(n):
                    hpi = H[p, i]
                    hqi = H[q, i]
                    H[p, i] = c * hpi + s * ph * hqi
                    H[q, i] = -s * np.conj(ph) * hpi + c * hqi
                if want_vectors:
                    for i in range(n):
                        vip = V[i, p]
                        viq = V[i, q]
                        V[i, p] = c * vip + s * np.conj(ph) * viq
                        V[i, q] = -s * ph * vip + c * viq
    return 1


@njit(cache=True)
def lambda_max_destructive(H):
    """Largest eigenvalue of Hermitian H.  H is destroyed."""
    n = H.shape[0]
    if n == 0:
        return 0.0
    V = np.empty((1, 1), dtype=np.complex128)
    jacobi_inplace(H, V, False)
    best = H[0, 0].real
    for i in range(1, n):
        if H[i, i].real > best:
            best = H[i, i].real
    return best


@njit(cache=True)
def _rotated_real_part_max(C, theta, buf):
    """lambda_max of Re(e^{i theta} C), using buf as scratch."""
    n = C.shape[0]
    e = complex(np.cos(theta), np.sin(theta))
    for a in range(n):
        for b in range(n):
            buf[a, b] = 0.5 * (e * C[a, b] + np.conj(e * C[b, a]))
    return lambda_max_destructive(buf)


@njit(cache=True)
def radius_sweep(C, grid, gap, cap, max_cells):
    """Certified maximum of f(theta) = lambda_max(Re(e^{i theta} C)).

    Samples f on a uniform grid over [0, 2pi], then bisects every cell
    whose upper bound still exceeds lower + gap.  Cell upper bounds use
    the cheaper of two certificates: the Lipschitz cone (constant
    sigma_max(C)) and the curvature bound max(f_l, f_r) + kappa h^2 / 8,
    valid because every theta |-> Re(e^{i theta} z) chord function has
    second derivative bounded by kappa >= w(C).

    Returns (lower, upper, theta_star, status); status 0 = converged,
    1 = round budget exceeded, 2 = cell budget exceeded.
    """
    n = C.shape[0]
    if n == 0:
        return 0.0, 0.0, 0.0, 0
    # sigma_max(C): Lipschitz constant of the sweep.
    M = np.empty((n, n), dtype=np.complex128)
    for a in range(n):
        for b in range(n):
            acc = 0.0 + 0.0j
            for k in range(n):
                acc += np.conj(C[k, a]) * C[k, b]
            M[a, b] = acc
    sigma2 = lambda_max_destructive(M)
    sigma = np.sqrt(sigma2) if sigma2 > 0.0 else 0.0
    if sigma == 0.0:
        return 0.0, 0.0, 0.0, 0

    buf = np.empty((n, n), dtype=np.complex128)
    capc = 2 * grid + 16
    left = np.empty(capc)
    right = np.empty(capc)
    f_left = np.empty(capc)
    f_right = np.empty(capc)

    two_pi = 2.0 * np.pi
    f0 = _rotated_real_part_max(C, 0.0, buf)
    lower = f0
    theta_star = 0.0
    f_prev = f0
    for j in range(grid):
        tr = two_pi * (j + 1) / grid
        fv = f0 if j == grid - 1 else _rotated_real_part_max(C, tr, buf)
        left[j] = two_pi * j / grid
        right[j] = tr
        f_left[j] = f_prev
        f_right[j] = fv
        if fv > lower:
            lower = fv
            theta_star = tr
        f_prev = fv
    m = grid

    upper_prev = 1e308
    ubmax = 1e308
    for _ in range(cap):
        kappa = sigma if sigma < upper_prev else upper_prev
        ubmax = -1e308
        for k in range(m):
            hk = right[k] - left[k]
            ub_lip = 0.5 * (f_left[k] + f_right[k]) + 0.5 * sigma * hk
            mx = f_left[k] if f_left[k] > f_right[k] else f_right[k]
            ub_cur = mx + 0.125 * kappa * hk * hk
            ub = ub_lip if ub_lip < ub_cur else ub_cur
            if ub > ubmax:
                ubmax = ub
        if ubmax - lower <= gap:
            return lower, ubmax, theta_star, 0
        upper_prev = ubmax
        thresh = lower + gap
        m0 = m
        for k in range(m0):
            hk = right[k] - left[k]
            ub_lip = 0.5 * (f_left[k] + f_right[k]) + 0.5 * sigma * hk
            mx = f_left[k] if f_left[k] > f_right[k] else f_right[k]
            ub_cur = mx + 0.125 * kappa * hk * hk
            ub = ub_lip if ub_lip < ub_cur else ub_cur
            if ub > thresh:
                if m >= capc:
                    newcap = 2 * capc
                    if newcap > max_cells:
                        return lower, ubmax, theta_star, 2
                    nl = np.empty(newcap)
                    nr = np.empty(newcap)
                    nfl = np.empty(newcap)
                    nfr = np.empty(newcap)
                    nl[:m] = left[:m]
                    nr[:m] = right[:m]
                    nfl[:m] = f_left[:m]
                    nfr[:m] = f_right[:m]
                    left, right, f_left, f_right = nl, nr, nfl, nfr
                    capc = newcap
                mid = 0.5 * (left[k] + right[k])
                fm = _rotated_real_part_max(C, mid, buf)
                if fm > lower:
                    lower = fm
                    theta_star = mid
                left[m] = mid
                right[m] = right[k]
                f_left[m] = fm
                f_right[m] = f_right[k]
                m += 1
                right[k] = mid
                f_right[k] = fm
    return lower, ubmax, theta_star, 1
