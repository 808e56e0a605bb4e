"""Closed-form pieces of the generalized Redheffer inequality.

    (1 + 4x^2)^(1/alpha) cos(pi x) >= 1 - 4x^2,   x in [0, 1/2].

With y = 4x^2 the cosine factors as (1 - y) * F_inf(y), where the partial
products

    F_n(y) = prod_{k=2}^{n} (1 - y / (2k-1)^2)

decrease to F_inf(y) as n grows.  Every function here accepts a scalar or
a numpy array and returns the same shape (a Python float for scalars).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

ALPHA_T = math.log(2.0) / math.log(4.0 / math.pi)
SUCCESS_BOUND = 8.0 / math.pi**2
ALPHA_2 = math.log(2.0) / math.log(21.0 / 16.0)
QUARTER_PI = math.pi / 4.0


def constants() -> dict[str, float]:
    return {
        "alpha_t": ALPHA_T,
        "success_bound": SUCCESS_BOUND,
        "alpha_2": ALPHA_2,
        "quarter_pi": QUARTER_PI,
    }


def _out(arr):
    arr = np.asarray(arr, dtype=float)
    return float(arr) if arr.ndim == 0 else arr


def _check_n(n, least=2):
    if int(n) != n or n < least:
        raise DomainError(f"index must be an integer >= {least}, got {n!r}")
    return int(n)


def _check_interval(name, v, lo, hi):
    v = np.asarray(v, dtype=float)
    if np.any(np.isnan(v)) or np.any(v < lo) or np.any(v > hi):
        raise DomainError(f"{name} must lie in [{lo}, {hi}]")
    return v


def _check_alpha(alpha):
    if not alpha > 0 or not math.isfinite(alpha):
        raise DomainError(f"alpha must be a positive finite number, got {alpha!r}")
    return float(alpha)


def _root_power(u, alpha):
    # (1 + u)^(1/alpha), accurate where u is small
    return np.exp(np.log1p(u) / alpha)


def f_partial(n: int, y):
    """Partial product F_n(y) for n >= 2 and y in [0, 1].

    Factors are multiplied in increasing k so results are reproducible
    bit for bit.
    """
    n = _check_n(n)
    y = _check_interval("y", y, 0.0, 1.0)
    prod = np.ones_like(y)
    for k in range(2, n + 1):
        prod = prod * (1.0 - y / (2 * k - 1) ** 2)
    return _out(prod)


def f_log_derivative(n: int, y):
    """F_n'(y) / F_n(y) = -sum_{k=2}^{n} 1 / ((2k-1)^2 - y)."""
    n = _check_n(n)
    y = _check_interval("y", y, 0.0, 1.0)
    acc = np.zeros_like(y)
    for k in range(2, n + 1):
        acc = acc + 1.0 / ((2 * k - 1) ** 2 - y)
    return _out(-acc)


def f_infinity(y):
    """Limit of F_n(y), i.e. cos(pi sqrt(y) / 2) / (1 - y).

    Written as (pi/2) sinc(s/2) / (1 + sqrt(y)) with s = 1 - sqrt(y), which
    removes the 0/0 at y = 1 and gives exactly pi/4 there.
    """
    y = _check_interval("y", y, 0.0, 1.0)
    r = np.sqrt(y)
    s = 1.0 - r
    return _out(0.5 * math.pi * np.sinc(0.5 * s) / (1.0 + r))


def g_function(n: int, alpha: float, y):
    """Induction functional G_{n,alpha}(y) = (1+y)^(1/alpha) F_n(y) - (1 + y/(4n-2))."""
    alpha = _check_alpha(alpha)
    fn = np.asarray(f_partial(n, y))
    y = np.asarray(y, dtype=float)
    return _out(_root_power(y, alpha) * fn - (1.0 + y / (4 * n - 2)))


def margin(alpha: float, x):
    """LHS minus RHS of the generalized inequality; >= 0 where it holds."""
    alpha = _check_alpha(alpha)
    x = _check_interval("x", x, 0.0, 0.5)
    u = 4.0 * x * x
    return _out(_root_power(u, alpha) * np.cos(math.pi * x) - (1.0 - u))


def corollary_lhs(theta):
    """sin^2(pi theta) (1/theta^2 + 1/(1-theta)^2), bounded below by 8 on (0, 1)."""
    theta = np.asarray(theta, dtype=float)
    if np.any(np.isnan(theta)) or np.any(theta <= 0.0) or np.any(theta >= 1.0):
        raise DomainError("theta must lie in the open interval (0, 1)")
    s = np.sin(math.pi * theta)
    return _out(s * s * (1.0 / theta**2 + 1.0 / (1.0 - theta) ** 2))


def induction_step_residual(m: int, y):
    """(1 - y/(2m+1)^2)(1 + y/(4m-2)) - (1 + y/(4m+2)).

    Nonnegativity of this quantity for m >= 2 is what carries
    G_{m,alpha} >= 0 over to G_{m+1,alpha} >= 0.
    """
    m = _check_n(m)
    y = _check_interval("y", y, 0.0, 1.0)
    return _out(
        (1.0 - y / (2 * m + 1) ** 2) * (1.0 + y / (4 * m - 2)) - (1.0 + y / (4 * m + 2))
    )


def induction_step_lower_bound(m: int, y):
    """Quadratic lower bound 3 y^2 / (2 (2m-1) (2m+1)^2) for the residual."""
    m = _check_n(m)
    y = _check_interval("y", y, 0.0, 1.0)
    return _out(3.0 * y * y / (2.0 * (2 * m - 1) * (2 * m + 1) ** 2))
