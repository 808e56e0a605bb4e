"""Threshold sequences for the generalized inequality, plus grid certification.

Three sequences are tracked for n >= 2:

* ``alpha_n``: the largest alpha with G_{n,alpha} >= 0 on [0, 1], found by
  bisection on alpha with a grid + golden-section inner minimum;
* ``beta_n``: the closed-form upper bound obtained from G_{n,alpha}(1) >= 0;
* ``gamma_n``: -log 2 / log F_n(1), the alpha at which (1+y)^(1/alpha) F_n(y)
  touches 1 at y = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import inequality as ineq
from .errors import BracketError, DomainError
from .search import golden_section, grid_minimum, refine_at, refined_minimum

CERTIFY_TOL = 1e-12
ALPHA_EQ_BETA_TOL = 1e-5
CONCAVITY_TOL = 1e-10


@dataclass(frozen=True)
class SolverConfig:
    alpha_lo: float = 0.5
    alpha_hi: float = 8.0
    alpha_tol: float = 1e-8
    y_grid: int = 4097
    neg_tol: float = 1e-13

    def __post_init__(self):
        if not self.alpha_lo < self.alpha_hi:
            raise DomainError("alpha_lo must be below alpha_hi")
        if self.alpha_lo <= 0:
            raise DomainError("alpha_lo must be positive")
        if self.alpha_tol <= 0 or self.neg_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.y_grid < 3:
            raise DomainError("y_grid needs at least 3 points")


@dataclass(frozen=True)
class ThresholdRow:
    n: int
    alpha_n: float
    beta_n: float
    gamma_n: float
    alpha_eq_beta: bool


@dataclass(frozen=True)
class MarginReport:
    alpha: float
    grid_count: int
    min_margin: float
    argmin_x: float
    refined: bool

    @property
    def passed(self) -> bool:
        return self.min_margin >= -CERTIFY_TOL


@dataclass(frozen=True)
class GScanReport:
    n: int
    alpha: float
    grid_count: int
    min_g: float
    argmin_y: float
    refined: bool

    @property
    def passed(self) -> bool:
        return self.min_g >= -CERTIFY_TOL


def beta_threshold(n: int) -> float:
    f1 = ineq.f_partial(n, 1.0)
    return math.log(2.0) / (math.log1p(1.0 / (4 * n - 2)) - math.log(f1))


def gamma_threshold(n: int) -> float:
    return -math.log(2.0) / math.log(ineq.f_partial(n, 1.0))


def _g_min(n, alpha, ys, fn):
    """Refined minimum of G_{n,alpha} over [0, 1] given F_n precomputed on ys."""
    vals = np.exp(np.log1p(ys) / alpha) * fn - (1.0 + ys / (4 * n - 2))
    i = int(np.argmin(vals))
    return refine_at(lambda y: ineq.g_function(n, alpha, y), ys, i, float(vals[i]))


def g_scan(n: int, alpha: float, grid_count: int = 4097, threads: int = 1) -> GScanReport:
    """Minimum of G_{n,alpha} on a uniform grid of [0, 1], refined locally."""
    ineq._check_n(n)
    ineq._check_alpha(alpha)
    if grid_count < 3:
        raise DomainError("grid_count must be at least 3")
    ys = np.linspace(0.0, 1.0, grid_count)
    y, v, refined = refined_minimum(lambda t: ineq.g_function(n, alpha, t), ys, threads)
    return GScanReport(n, float(alpha), grid_count, v, y, refined)


def alpha_threshold_numeric(n: int, cfg: SolverConfig = SolverConfig()) -> float:
    """Numeric n-threshold: sup of alpha with min_y G_{n,alpha}(y) >= -neg_tol.

    G(0) = 0 for every alpha, so "negative" means below -neg_tol rather
    than <= 0.  The returned value is the last alpha that passed.
    """
    ineq._check_n(n)
    ys = np.linspace(0.0, 1.0, cfg.y_grid)
    fn = np.asarray(ineq.f_partial(n, ys))

    def fails(alpha):
        return _g_min(n, alpha, ys, fn)[1] < -cfg.neg_tol

    lo, hi = cfg.alpha_lo, cfg.alpha_hi
    if fails(lo) or not fails(hi):
        raise BracketError(
            f"predicate does not change between alpha={lo} and alpha={hi} for n={n}"
        )
    while hi - lo > cfg.alpha_tol:
        mid = 0.5 * (lo + hi)
        if fails(mid):
            hi = mid
        else:
            lo = mid
    return lo


def threshold_row(n: int, cfg: SolverConfig = SolverConfig()) -> ThresholdRow:
    a = alpha_threshold_numeric(n, cfg)
    b = beta_threshold(n)
    return ThresholdRow(n, a, b, gamma_threshold(n), abs(a - b) < ALPHA_EQ_BETA_TOL)


def threshold_table(n_max: int, cfg: SolverConfig = SolverConfig()) -> list[ThresholdRow]:
    ineq._check_n(n_max)
    return [threshold_row(n, cfg) for n in range(2, n_max + 1)]


def certify_inequality(alpha: float, grid_count: int = 100001, threads: int = 1) -> MarginReport:
    """Smallest margin over a uniform grid of [0, 1/2], refined around the grid argmin."""
    ineq._check_alpha(alpha)
    if grid_count < 2:
        raise DomainError("grid_count must be at least 2")
    xs = np.linspace(0.0, 0.5, grid_count)
    x, v, refined = refined_minimum(lambda t: ineq.margin(alpha, t), xs, threads)
    return MarginReport(float(alpha), grid_count, v, x, refined)


def find_violation(alpha: float, tol: float = 1e-14) -> Optional[float]:
    """Look for x in [0, 1/2] with margin(alpha, x) < -tol.

    Violations above the sharp constant sit in a layer next to x = 1/2
    whose width shrinks as alpha approaches it, so the probe points are
    x = 1/2 - 2^-j, j = 2..40, followed by golden-section descent between
    the neighbours of the best probe.  Returns None when nothing is found.
    """
    ineq._check_alpha(alpha)
    xs = 0.5 - np.exp2(-np.arange(2, 41, dtype=float))
    vals = np.asarray(ineq.margin(alpha, xs))
    j = int(np.argmin(vals))
    lo = xs[j - 1] if j > 0 else 0.0
    hi = xs[j + 1] if j + 1 < xs.size else 0.5
    x, v = golden_section(lambda t: ineq.margin(alpha, t), lo, hi)
    if vals[j] <= v:
        x, v = float(xs[j]), float(vals[j])
    return float(x) if v < -tol else None


def concavity_check(alpha: float, grid_count: int = 1001) -> bool:
    """True when all central second differences of G_{2,alpha} on [0, 1] are <= 1e-10."""
    if not 7.0 / 9.0 < alpha < 3.0:
        raise DomainError("concavity is only claimed for 7/9 < alpha < 3")
    if grid_count < 3:
        raise DomainError("grid_count must be at least 3")
    g = np.asarray(ineq.g_function(2, alpha, np.linspace(0.0, 1.0, grid_count)))
    return bool(np.all(g[:-2] - 2.0 * g[1:-1] + g[2:] <= CONCAVITY_TOL))


@dataclass(frozen=True)
class CorollaryReport:
    grid_count: int
    min_lhs: float
    argmin_theta: float

    @property
    def passed(self) -> bool:
        return self.min_lhs >= 8.0 - 1e-9


def corollary_scan(grid_count: int = 100001, threads: int = 1) -> CorollaryReport:
    """Minimum of the corollary left-hand side over theta_i = i / (grid_count + 1).

    The grid is interior to (0, 1) and contains theta = 1/2 whenever
    grid_count is odd.
    """
    if grid_count < 1:
        raise DomainError("grid_count must be positive")
    thetas = np.arange(1, grid_count + 1, dtype=float) / (grid_count + 1)
    i, v = grid_minimum(ineq.corollary_lhs, thetas, threads)
    return CorollaryReport(grid_count, v, float(thetas[i]))
