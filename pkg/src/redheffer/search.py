"""Grid scans and golden-section refinement shared by the threshold code."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1 / phi


def golden_section(f, a: float, b: float, tol: float = 1e-15, max_iter: int = 200):
    """Minimize a unimodal scalar function on [a, b].

    Returns (x, f(x)) for the best point seen, endpoints included, so a
    monotone function returns its smaller endpoint value.
    """
    a, b = min(a, b), max(a, b)
    fa, fb = f(a), f(b)
    best = (a, fa) if fa <= fb else (b, fb)
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol * max(1.0, abs(a) + abs(b)):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = f(d)
    for x, fx in ((c, fc), (d, fd)):
        if fx < best[1]:
            best = (x, fx)
    return best


def grid_minimum(f, xs: np.ndarray, threads: int = 1):
    """Index and value of the minimum of a vectorized f over xs.

    With threads > 1 the grid is split into contiguous chunks; ties resolve
    to the lowest index either way, so the answer does not depend on the
    thread count.
    """
    xs = np.asarray(xs, dtype=float)
    if threads <= 1 or xs.size < 2 * threads:
        vals = np.asarray(f(xs))
        i = int(np.argmin(vals))
        return i, float(vals[i])
    bounds = np.linspace(0, xs.size, threads + 1).astype(int)
    chunks = [(bounds[j], bounds[j + 1]) for j in range(threads)]

    def scan(lohi):
        lo, hi = lohi
        vals = np.asarray(f(xs[lo:hi]))
        i = int(np.argmin(vals))
        return lo + i, float(vals[i])

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(scan, chunks))
    best = results[0]
    for r in results[1:]:
        if r[1] < best[1]:
            best = r
    return best


def refined_minimum(f, xs: np.ndarray, threads: int = 1):
    """Grid minimum followed by golden-section search on the neighbouring cells.

    Returns (x, value, refined) where refined says whether the search
    improved on the grid point.
    """
    xs = np.asarray(xs, dtype=float)
    i, v = grid_minimum(f, xs, threads)
    return refine_at(lambda t: float(f(np.array(t))), xs, i, v)


def refine_at(scalar, xs: np.ndarray, i: int, v: float):
    """Golden-section search on the cells either side of grid index i."""
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, xs.size - 1)]
    x, fx = golden_section(scalar, lo, hi)
    if fx < v:
        return float(x), fx, True
    return float(xs[i]), v, False
