"""Numba-compiled kernels.

Same contract as :mod:`skewjs.kernels._numpy`.  Reductions run as explicit
loops with Kahan compensation, compiled by ``@njit`` without fastmath so the
IEEE semantics of the reference backend carry over.  Compiled machine code is
cached on disk, so only the first call in a fresh environment pays the
compilation cost.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def comp_sum(x):
    s = 0.0
    c = 0.0
    for i in range(x.shape[0]):
        y = x[i] - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


@njit(cache=True)
def dot_sum(a, b):
    s = 0.0
    c = 0.0
    for i in range(a.shape[0]):
        y = a[i] * b[i] - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


@njit(cache=True)
def xlogx_sum(x):
    s = 0.0
    c = 0.0
    for i in range(x.shape[0]):
        v = x[i]
        if v > 0.0:
            y = v * np.log(v) - c
            t = s + y
            c = (t - s) - y
            s = t
    return s


@njit(cache=True)
def kl_sum(p, q):
    s = 0.0
    c = 0.0
    for i in range(p.shape[0]):
        pi = p[i]
        if pi > 0.0:
            qi = q[i]
            if qi == 0.0:
                return np.inf
            y = pi * np.log(pi / qi) - c
            t = s + y
            c = (t - s) - y
            s = t
    return s


@njit(cache=True)
def kl_plus_sum(p, q):
    s = 0.0
    c = 0.0
    for i in range(p.shape[0]):
        pi = p[i]
        qi = q[i]
        if pi > 0.0:
            if qi == 0.0:
                return np.inf
            term = pi * np.log(pi / qi) + qi - pi
        else:
            term = qi
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


@njit(cache=True)
def cross_entropy_sum(p, q):
    s = 0.0
    c = 0.0
    for i in range(p.shape[0]):
        pi = p[i]
        if pi > 0.0:
            qi = q[i]
            if qi == 0.0:
                return np.inf
            y = pi * np.log(qi) - c
            t = s + y
            c = (t - s) - y
            s = t
    return -s


@njit(cache=True)
def separable_plain_js(values, omega, x0, tol, max_iter):
    n, d = values.shape
    x = x0.copy()
    iters = np.zeros(d, dtype=np.int64)
    ok = np.zeros(d, dtype=np.bool_)
    for i in range(d):
        xi = x[i]
        for t in range(1, max_iter + 1):
            s = 0.0
            c = 0.0
            for j in range(n):
                y = omega[j] * np.log(0.5 * (values[j, i] + xi)) - c
                tt = s + y
                c = (tt - s) - y
                s = tt
            xn = np.exp(s)
            iters[i] = t
            done = abs(xn - xi) <= tol * (1.0 + abs(xn))
            xi = xn
            if done:
                ok[i] = True
                break
        x[i] = xi
    return x, iters, ok


@njit(cache=True)
def separable_jeffreys(values, omega, tol, max_iter):
    n, d = values.shape
    x = np.empty(d, dtype=np.float64)
    iters = np.zeros(d, dtype=np.int64)
    ok = np.zeros(d, dtype=np.bool_)
    for i in range(d):
        a = 0.0
        ca = 0.0
        l = 0.0
        cl = 0.0
        for j in range(n):
            y = omega[j] * values[j, i] - ca
            t = a + y
            ca = (t - a) - y
            a = t
            y = omega[j] * np.log(values[j, i]) - cl
            t = l + y
            cl = (t - l) - y
            l = t
        g = np.exp(l)
        lo = min(g, a)
        hi = max(g, a)
        if hi - lo <= tol * (1.0 + hi):
            x[i] = 0.5 * (lo + hi)
            ok[i] = True
            continue
        xi = hi
        for t in range(1, max_iter + 1):
            xn = a / (1.0 + np.log(xi / g))
            if xn < lo or xn > hi or t % 8 == 0:
                xn = 0.5 * (lo + hi)
            psi = xn * (1.0 + np.log(xn / g)) - a
            if psi > 0.0:
                hi = xn
            else:
                lo = xn
            iters[i] = t
            done = abs(xn - xi) <= tol * (1.0 + abs(xn)) or hi - lo <= tol * (
                1.0 + hi
            )
            xi = xn
            if done:
                ok[i] = True
                break
        x[i] = xi
    return x, iters, ok
