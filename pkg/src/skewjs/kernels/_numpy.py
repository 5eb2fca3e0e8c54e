"""Pure-numpy reference kernels.

Divergence reductions use :func:`math.fsum` so summation is exactly
compensated; the per-bin solvers vectorize across bins instead of looping.
This backend is always importable and is the fallback when numba is
unavailable or disabled via ``SKEWJS_NO_NUMBA``.
"""

from __future__ import annotations

import math

import numpy as np


def comp_sum(x):
    """Compensated sum of a 1-D float array."""
    return math.fsum(x.tolist())


def dot_sum(a, b):
    """Compensated dot product of two 1-D float arrays."""
    return math.fsum((a * b).tolist())


def xlogx_sum(x):
    """Sum of ``x_i * log(x_i)`` over bins with ``x_i > 0``.

    Zero bins contribute nothing (the ``0 log 0 = 0`` convention).
    """
    xs = x[x > 0.0]
    if xs.size == 0:
        return 0.0
    return math.fsum((xs * np.log(xs)).tolist())


def kl_sum(p, q):
    """Sum of ``p_i * log(p_i / q_i)`` over bins with ``p_i > 0``.

    Returns ``inf`` when some ``p_i > 0`` faces ``q_i = 0``; bins with
    ``p_i = 0`` are skipped regardless of ``q_i``.
    """
    mask = p > 0.0
    ps = p[mask]
    qs = q[mask]
    if np.any(qs == 0.0):
        return float("inf")
    if ps.size == 0:
        return 0.0
    return math.fsum((ps * np.log(ps / qs)).tolist())


def kl_plus_sum(p, q):
    """Extended divergence sum ``p log(p/q) + q - p`` for positive vectors.

    Bins with ``p_i = 0`` contribute ``q_i``; a positive ``p_i`` against
    ``q_i = 0`` yields ``inf``.
    """
    mask = p > 0.0
    ps = p[mask]
    qs = q[mask]
    if np.any(qs == 0.0):
        return float("inf")
    terms = (ps * np.log(ps / qs) + qs - ps).tolist()
    terms.extend(q[~mask].tolist())
    if not terms:
        return 0.0
    return math.fsum(terms)


def cross_entropy_sum(p, q):
    """``-sum p_i log q_i`` over ``p_i > 0``; ``inf`` on support violation."""
    mask = p > 0.0
    ps = p[mask]
    qs = q[mask]
    if np.any(qs == 0.0):
        return float("inf")
    if ps.size == 0:
        return 0.0
    return -math.fsum((ps * np.log(qs)).tolist())


def separable_plain_js(values, omega, x0, tol, max_iter):
    """Per-bin fixed point ``x = exp(sum_j omega_j log((v_j + x) / 2))``.

    ``values`` has shape ``(n, d)`` with strictly positive entries, ``omega``
    is a length-``n`` weight vector and ``x0`` the starting point per bin.
    The map is a contraction on ``x > 0`` so plain iteration converges; bins
    stop once the step falls below ``tol * (1 + |x|)``.

    Returns ``(x, iters, ok)`` with per-bin iteration counts and convergence
    flags.
    """
    n, d = values.shape
    x = np.array(x0, dtype=np.float64, copy=True)
    iters = np.zeros(d, dtype=np.int64)
    ok = np.zeros(d, dtype=bool)
    active = np.ones(d, dtype=bool)
    for t in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        xn = np.exp(omega @ np.log(0.5 * (values[:, idx] + x[idx])))
        done = np.abs(xn - x[idx]) <= tol * (1.0 + np.abs(xn))
        x[idx] = xn
        iters[idx] = t
        ok[idx[done]] = True
        active[idx[done]] = False
    return x, iters, ok


def separable_jeffreys(values, omega, tol, max_iter):
    """Per-bin root of ``x (1 + log(x/g)) = a`` for the Jeffreys centroid.

    ``a`` is the weighted arithmetic mean of the bin values and ``g`` their
    weighted geometric mean, so the root is bracketed by ``[g, a]``.  The
    update ``x <- a / (1 + log(x/g))`` is safeguarded by that bracket, with a
    bisection step forced every eighth iteration to guarantee progress.

    Returns ``(x, iters, ok)`` like :func:`separable_plain_js`.
    """
    n, d = values.shape
    a = omega @ values
    g = np.exp(omega @ np.log(values))
    lo = np.minimum(g, a)
    hi = np.maximum(g, a)
    x = hi.copy()
    iters = np.zeros(d, dtype=np.int64)
    ok = hi - lo <= tol * (1.0 + hi)
    x[ok] = 0.5 * (lo[ok] + hi[ok])
    active = ~ok
    for t in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        ai = a[idx]
        gi = g[idx]
        xi = x[idx]
        xn = ai / (1.0 + np.log(xi / gi))
        outside = (xn < lo[idx]) | (xn > hi[idx])
        if t % 8 == 0:
            outside[:] = True
        xn[outside] = 0.5 * (lo[idx][outside] + hi[idx][outside])
        psi = xn * (1.0 + np.log(xn / gi)) - ai
        shrink_hi = psi > 0.0
        hi_idx = idx[shrink_hi]
        lo_idx = idx[~shrink_hi]
        hi[hi_idx] = xn[shrink_hi]
        lo[lo_idx] = xn[~shrink_hi]
        done = (np.abs(xn - xi) <= tol * (1.0 + np.abs(xn))) | (
            hi[idx] - lo[idx] <= tol * (1.0 + hi[idx])
        )
        x[idx] = xn
        iters[idx] = t
        ok[idx[done]] = True
        active[idx[done]] = False
    return x, iters, ok
