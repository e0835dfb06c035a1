"""Turning sampled sums into verdicts on growth claims.

Every asymptotic claim O(t**alpha * (ln t)**k) is tested two ways: a
least-squares growth exponent over a log grid (slope must not exceed the
claimed alpha plus a stated tolerance), and a max-ratio envelope constant
frozen on first certified run.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from .config import SLOPE_TOL_CLEAN
from .phases import nsum_power


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class SampleSeries:
    """Magnitudes |S(t)| sampled over a strictly increasing t-grid."""

    label: str
    points: Sequence[Tuple[float, float]]
    ln_power: int = 0

    def __post_init__(self):
        ts = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValueError("t-grid must be strictly increasing")
        if any(p[1] < 0.0 for p in self.points):
            raise ValueError("magnitudes must be nonnegative")


@dataclass(frozen=True)
class FitReport:
    slope: float
    intercept: float
    residual_rms: float
    max_ratio_constant: float
    claimed_exponent: float
    tolerance: float
    verdict: Verdict
    dropped_points: int = 0


def _usable(series: SampleSeries):
    pts = [(t, m) for t, m in series.points if m > 0.0]
    dropped = len(series.points) - len(pts)
    if len(pts) < 5:
        raise ValueError("need at least 5 usable points for a fit")
    return pts, dropped


def fit_growth_exponent(series: SampleSeries, claimed_exponent: float = math.nan,
                        tolerance: float = SLOPE_TOL_CLEAN) -> FitReport:
    """Least-squares line through (ln t, ln(magnitude / (ln t)**ln_power))."""
    pts, dropped = _usable(series)
    x = np.array([math.log(t) for t, _ in pts])
    y = np.array([math.log(m) - series.ln_power * math.log(math.log(t)) for t, m in pts])
    slope, intercept = np.polyfit(x, y, 1)
    rms = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    if math.isnan(claimed_exponent):
        verdict = Verdict.PASS
        constant = math.inf
    else:
        constant = max(
            m / (t**claimed_exponent * math.log(t) ** series.ln_power) for t, m in pts
        )
        verdict = Verdict.PASS if (slope <= claimed_exponent + tolerance
                                   and math.isfinite(constant)) else Verdict.FAIL
    return FitReport(slope=float(slope), intercept=float(intercept), residual_rms=rms,
                     max_ratio_constant=float(constant), claimed_exponent=claimed_exponent,
                     tolerance=tolerance, verdict=verdict, dropped_points=dropped)


def bound_envelope(series: SampleSeries, alpha: float, ln_power: Optional[int] = None) -> float:
    """max over the grid of magnitude / (t**alpha (ln t)**k) - the envelope constant."""
    pts, _ = _usable(series)
    k = series.ln_power if ln_power is None else ln_power
    return max(m / (t**alpha * math.log(t) ** k) for t, m in pts)


def j_integral(m1: int, t: float, sigma1: float, sigma2: float) -> float:
    """J(m1, t) = int_{m1+1}^{t} (m1+x)**(-sigma1) x**(-sigma2) dx (adaptive)."""
    if sigma1 + sigma2 >= 1.0:
        raise ValueError("requires sigma1 + sigma2 < 1")
    if not m1 + 1 < t:
        raise ValueError("requires m1 + 1 < t")
    val, _ = integrate.quad(
        lambda x: (m1 + x) ** (-sigma1) * x ** (-sigma2),
        m1 + 1.0, t, epsrel=1e-12, epsabs=0.0, limit=300,
    )
    return val


def j_integral_bound(m1: int, t: float, sigma1: float, sigma2: float) -> float:
    """Closed-form majorant from (m1+x)**(-sigma1) < (2x)**(-sigma1) for sigma1 < 0."""
    p = 1.0 - sigma1 - sigma2
    return 2.0 ** (-sigma1) * (t**p - (m1 + 1.0) ** p) / p


def j2_integral(sigma: float, t: float, delta: float) -> Tuple[float, float]:
    """Rectangle integral over x in [t^{1-d}, t], y in [1, x t^{d-1}] of x^-sigma (x+y)^-sigma.

    Returns (numeric, asymptotic) where asymptotic is the leading term
    t**(1 - 2 sigma + delta) / (2 (1 - sigma)).
    """
    if not 0.0 <= sigma < 1.0:
        raise ValueError("sigma must lie in [0, 1)")
    x_lo = t ** (1.0 - delta)
    if x_lo <= 1.0:
        raise ValueError("requires t**(1-delta) > 1")
    tau = t ** (delta - 1.0)
    one_m = 1.0 - sigma

    def inner(x: float) -> float:
        # closed form of int_1^{x*tau} (x+y)**(-sigma) dy
        return ((x + x * tau) ** one_m - (x + 1.0) ** one_m) / one_m

    numeric, _ = integrate.quad(lambda x: x ** (-sigma) * inner(x),
                                x_lo, t, epsrel=1e-11, epsabs=0.0, limit=500)
    asymptotic = t ** (1.0 - 2.0 * sigma + delta) / (2.0 * one_m)
    return numeric, asymptotic


@dataclass(frozen=True)
class PartialSummationBound:
    lhs: float
    g_constant: float
    h_constant: float
    bound: float
    sign_conditions_ok: bool
    holds: bool


def gh_bound_check(a: np.ndarray, b: np.ndarray) -> PartialSummationBound:
    """Two-dimensional partial-summation inequality |sum sum a*b| <= 5GH.

    G is the max absolute rectangle prefix sum of a; H bounds the
    nonnegative real weights b, whose first differences and mixed second
    difference must each keep one sign across the grid.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 2:
        raise ValueError("a and b must be matrices of equal shape")
    if (b < 0.0).any():
        raise ValueError("weights must be nonnegative")
    h = float(b.max(initial=0.0))
    prefix = np.cumsum(np.cumsum(a, axis=0), axis=1)
    g = float(np.abs(prefix).max(initial=0.0))
    lhs = abs(complex((a * b).sum()))
    d_row = np.diff(b, axis=0)      # b[m,n] - b[m+1,n] (negated)
    d_col = np.diff(b, axis=1)
    d_mix = np.diff(np.diff(b, axis=0), axis=1)
    sign_ok = all(
        (d >= 0.0).all() or (d <= 0.0).all()
        for d in (d_row, d_col, d_mix)
        if d.size
    )
    bound = 5.0 * g * h
    return PartialSummationBound(lhs=lhs, g_constant=g, h_constant=h, bound=bound,
                                 sign_conditions_ok=sign_ok, holds=lhs <= bound + 1e-12)


@dataclass(frozen=True)
class BoxSumResult:
    value: complex
    bound: float
    ratio: float
    # second-derivative scales of the box phase, recorded for the report
    lambda1: float = field(default=math.nan)
    lambda2: float = field(default=math.nan)


def box_sum_check(m_lo: int, m_hi: int, n_lo: int, n_hi: int, t: float) -> BoxSumResult:
    """Factorized box sum sum_m m**(it) * sum_n n**(-it) against the t*ln(t) scale.

    Requires n > m on the whole box so the two indices decouple.
    """
    if n_lo <= m_hi:
        raise ValueError(
            "box must satisfy n>m identically; triangle-overlapping boxes unsupported"
        )
    if m_lo < 1:
        raise ValueError("indices must be positive")
    if t <= 1.0:
        raise ValueError("t must exceed 1")
    left = nsum_power(0.0, t, m_lo, m_hi, minus_it=False)   # m**(+it)
    right = nsum_power(0.0, t, n_lo, n_hi, minus_it=True)   # n**(-it)
    value = left * right
    bound = t * math.log(t)
    return BoxSumResult(value=value, bound=bound, ratio=abs(value) / bound,
                        lambda1=t / m_lo**2, lambda2=t / n_lo**2)


def box_sum_brute(m_lo: int, m_hi: int, n_lo: int, n_hi: int, t: float) -> complex:
    """Pair-by-pair evaluation of the box sum (equivalence reference)."""
    total = 0j
    for m in range(m_lo, m_hi + 1):
        for n in range(n_lo, n_hi + 1):
            total += complex(math.cos(t * math.log(m / n)), math.sin(t * math.log(m / n)))
    return total


def log_grid(t_min: float, t_max: float, points: int) -> List[float]:
    """Strictly increasing log-spaced grid."""
    if points < 5:
        raise ValueError("need at least 5 grid points")
    if not t_min < t_max:
        raise ValueError("need t_min < t_max")
    return list(np.geomspace(t_min, t_max, points))
