"""Double exponential sums: full grids, coupled-index sums, and exact splits.

Two evaluation strategies exist for most sums.  BruteForce enumerates every
index pair (budget-capped); the fast route rewrites the inner sum as a prefix
difference (or, where a third factor couples the indices, as an FFT
convolution).  Both must agree; the tests enforce it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.signal import fftconvolve

from .config import BRUTE_FORCE_BUDGET
from .kernel import sum_array_deterministic
from .phases import nsum_power, power_prefix


class Strategy(enum.Enum):
    BRUTE_FORCE = "brute_force"
    PREFIX_FACTORIZED = "prefix_factorized"


@dataclass(frozen=True)
class DoubleSumResult:
    value: complex
    term_count: int
    strategy: Strategy


@dataclass(frozen=True)
class SplitSumResult:
    total: complex
    part1: Optional[complex]
    part2: Optional[complex]
    term_count: int
    strategy: Strategy


def _powers(exponent: complex, lo: int, hi: int) -> np.ndarray:
    """n**(-exponent) for n in [lo, hi] (empty for hi < lo)."""
    if hi < lo:
        return np.zeros(0, dtype=np.complex128)
    n = np.arange(lo, hi + 1, dtype=np.float64)
    return np.exp(-exponent * np.log(n))


def _check_brute_budget(t: float) -> None:
    if t > BRUTE_FORCE_BUDGET:
        raise ValueError(f"brute-force budget exceeded at t={t}")


def grid_double_sum(sigma: float, t: float, strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> DoubleSumResult:
    """sum_{m<=[t]} sum_{n<=[t]} m**(-s) n**(-sbar); equals |sum m**(-s)|^2."""
    big_t = int(t)
    if big_t < 1:
        raise ValueError("need t >= 1")
    if strategy is Strategy.PREFIX_FACTORIZED:
        if big_t > 10**7:
            raise ValueError("budget exceeded")
        p = nsum_power(sigma, t, 1, big_t, minus_it=True)
        q = nsum_power(sigma, t, 1, big_t, minus_it=False)
        value = p * q
    else:
        _check_brute_budget(t)
        a = _powers(complex(sigma, t), 1, big_t)   # m**(-s)
        b = _powers(complex(sigma, -t), 1, big_t)  # n**(-sbar)
        rows = [complex((a[i] * b).sum()) for i in range(big_t)]
        value = sum_array_deterministic(np.array(rows))
    return DoubleSumResult(value=value, term_count=big_t * big_t, strategy=strategy)


def f_sum(u: complex, v: complex, n_max: int, strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> complex:
    """f(u, v) = sum_{m1<=N} sum_{m2<=N} m1**(-u) (m1+m2)**(-v)."""
    if n_max < 1:
        raise ValueError("N must be >= 1")
    if strategy is Strategy.BRUTE_FORCE:
        _check_brute_budget(n_max)
        rows = []
        for m1 in range(1, n_max + 1):
            inner = _powers(v, m1 + 1, m1 + n_max).sum()
            rows.append(complex(m1 ** (-u) * inner))
        return sum_array_deterministic(np.array(rows))
    cum_v = power_prefix(v, 2 * n_max)
    m = np.arange(1, n_max + 1, dtype=np.int64)
    inner = cum_v[m + n_max] - cum_v[m]
    outer = _powers(u, 1, n_max)
    return sum_array_deterministic(outer * inner)


def g_sum(u: complex, v: complex, n_max: int, strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> complex:
    """g(u, v) = sum_{m<=N} sum_{n=N+1}^{N+m} m**(-u) n**(-v)."""
    if n_max < 1:
        raise ValueError("N must be >= 1")
    if strategy is Strategy.BRUTE_FORCE:
        _check_brute_budget(n_max)
        rows = []
        for m in range(1, n_max + 1):
            inner = _powers(v, n_max + 1, n_max + m).sum()
            rows.append(complex(m ** (-u) * inner))
        return sum_array_deterministic(np.array(rows))
    cum_v = power_prefix(v, 2 * n_max)
    m = np.arange(1, n_max + 1, dtype=np.int64)
    inner = cum_v[n_max + m] - cum_v[n_max]
    outer = _powers(u, 1, n_max)
    return sum_array_deterministic(outer * inner)


def lemma32_identity_residual(u: complex, v: complex, n_max: int) -> complex:
    """LHS - RHS of the exact square-grid rearrangement identity.

    f(u,v) + f(v,u) + sum m**-(u+v)
      = (sum m**-u)(sum n**-v) + g(u,v) + g(v,u)
    """
    lhs = f_sum(u, v, n_max) + f_sum(v, u, n_max)
    lhs += complex(_powers(u + v, 1, n_max).sum())
    rhs = complex(_powers(u, 1, n_max).sum()) * complex(_powers(v, 1, n_max).sum())
    rhs += g_sum(u, v, n_max) + g_sum(v, u, n_max)
    return lhs - rhs


def tail_double_sum(sigma: float, t: float, strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> complex:
    """sum_{m<=[t]} sum_{n=[t]+1}^{[t]+m} m**(-sbar) n**(-s).

    The reported estimate quantity is 2*Re of the returned value.
    """
    big_t = int(t)
    if big_t < 1:
        raise ValueError("need t >= 1")
    if strategy is Strategy.BRUTE_FORCE:
        _check_brute_budget(t)
        rows = []
        for m in range(1, big_t + 1):
            inner = _powers(complex(sigma, t), big_t + 1, big_t + m).sum()
            rows.append(complex(m ** complex(-sigma, t) * inner))
        return sum_array_deterministic(np.array(rows))
    cum_s = power_prefix(complex(sigma, t), 2 * big_t)
    m = np.arange(1, big_t + 1, dtype=np.int64)
    inner = cum_s[big_t + m] - cum_s[big_t]
    outer = _powers(complex(sigma, -t), 1, big_t)
    return sum_array_deterministic(outer * inner)


@dataclass(frozen=True)
class RelationCheck:
    lhs: complex
    rhs: complex
    residual: complex
    relative_residual: float


def relation_36_check(sigma: float, t: float) -> RelationCheck:
    """Exact relation tying the shifted double sum to |sum m**-s|^2.

    2 Re{sum sum m2**(-sbar) (m1+m2)**(-s)} - |sum m**(-s)|^2
      = -sum m**(-2 sigma) + 2 Re{tail}
    """
    big_t = int(t)
    if big_t < 1 or big_t > 10**5:
        raise ValueError("budget: need 1 <= [t] <= 1e5")
    s = complex(sigma, t)
    cum_s = power_prefix(s, 2 * big_t)
    m = np.arange(1, big_t + 1, dtype=np.int64)
    shifted = sum_array_deterministic(
        _powers(complex(sigma, -t), 1, big_t) * (cum_s[m + big_t] - cum_s[m])
    )
    zsum = nsum_power(sigma, t, 1, big_t, minus_it=True)
    lhs = 2.0 * shifted.real - (zsum * zsum.conjugate()).real
    diag = float(np.sum(np.arange(1, big_t + 1, dtype=np.float64) ** (-2.0 * sigma)))
    tail = tail_double_sum(sigma, t)
    rhs = -diag + 2.0 * tail.real
    resid = lhs - rhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    return RelationCheck(lhs=lhs, rhs=rhs, residual=resid, relative_residual=abs(resid) / scale)


def s4_a_sum(sigma1: float, sigma2: float, t: float,
             strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> DoubleSumResult:
    """sum_{m1,m2<=[t]} (m1+m2)**(-sigma1-it) m2**(-sigma2+it)."""
    if not (sigma1 < 0.0 and sigma2 > 1.0):
        raise ValueError("requires sigma1 < 0 and sigma2 > 1")
    big_t = int(t)
    if big_t < 1:
        raise ValueError("need t >= 1")
    e_outer = complex(sigma2, -t)  # m**(-sigma2 + it)
    e_inner = complex(sigma1, t)   # n**(-sigma1 - it)
    if strategy is Strategy.BRUTE_FORCE:
        _check_brute_budget(t)
        rows = []
        for m in range(1, big_t + 1):
            inner = _powers(e_inner, m + 1, m + big_t).sum()
            rows.append(complex(m ** (-e_outer) * inner))
        value = sum_array_deterministic(np.array(rows))
    else:
        if big_t > 10**7:
            raise ValueError("budget exceeded")
        cum = power_prefix(e_inner, 2 * big_t)
        m = np.arange(1, big_t + 1, dtype=np.int64)
        value = sum_array_deterministic(_powers(e_outer, 1, big_t) * (cum[m + big_t] - cum[m]))
    return DoubleSumResult(value=value, term_count=big_t * big_t, strategy=strategy)


def s4_b_sum(sigma1: float, sigma2: float, sigma3: float, t: float,
             strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> SplitSumResult:
    """Triple-factor double sum with the m2<=m1 / m2>m1 split.

    total = sum_{m1,m2<=[t]} (m1+m2)**(-sigma1-it) m2**(-sigma2+it) m1**(-sigma3)

    BruteForce returns both split parts (part1: m2 <= m1, evaluated in both
    enumeration orders; part2: m2 > m1).  The fast route computes only the
    total, as sum_n (m1+m2=n weight) via FFT convolution of the two index
    factors, since the third factor prevents prefix factorization.
    """
    if not (sigma1 < 0.0 and 0.0 < sigma2 < 1.0 and sigma3 >= 1.0):
        raise ValueError("requires sigma1 < 0, sigma2 in (0,1), sigma3 >= 1")
    big_t = int(t)
    if big_t < 1:
        raise ValueError("need t >= 1")
    if strategy is Strategy.BRUTE_FORCE:
        _check_brute_budget(t)
        a3 = _powers(complex(sigma3, 0.0), 1, big_t)       # m1**(-sigma3)
        b2 = _powers(complex(sigma2, -t), 1, big_t)        # m2**(-sigma2+it)
        c1 = _powers(complex(sigma1, t), 1, 2 * big_t)     # n**(-sigma1-it)
        part1_rows = []
        part2_rows = []
        for m1 in range(1, big_t + 1):
            coupled = c1[m1 : m1 + big_t]  # (m1+m2)-factor for m2 = 1..[t]
            row = a3[m1 - 1] * b2 * coupled
            part1_rows.append(complex(row[:m1].sum()))
            part2_rows.append(complex(row[m1:].sum()))
        part1 = sum_array_deterministic(np.array(part1_rows))
        part2 = sum_array_deterministic(np.array(part2_rows))
        return SplitSumResult(total=part1 + part2, part1=part1, part2=part2,
                              term_count=big_t * big_t, strategy=strategy)
    if big_t > 10**7:
        raise ValueError("budget exceeded")
    a3 = _powers(complex(sigma3, 0.0), 1, big_t)
    b2 = _powers(complex(sigma2, -t), 1, big_t)
    c1 = _powers(complex(sigma1, t), 1, 2 * big_t)
    conv = fftconvolve(a3, b2)  # conv[k] = sum_{m1+m2 = k+2} a3[m1] b2[m2]
    total = sum_array_deterministic(c1[1:] * conv)
    return SplitSumResult(total=total, part1=None, part2=None,
                          term_count=big_t * big_t, strategy=Strategy.PREFIX_FACTORIZED)


def s4_b_part1_exchanged(sigma1: float, sigma2: float, sigma3: float, t: float) -> complex:
    """The m2 <= m1 part enumerated in the exchanged (m2-outer) order."""
    if not (sigma1 < 0.0 and 0.0 < sigma2 < 1.0 and sigma3 >= 1.0):
        raise ValueError("requires sigma1 < 0, sigma2 in (0,1), sigma3 >= 1")
    big_t = int(t)
    _check_brute_budget(t)
    a3 = _powers(complex(sigma3, 0.0), 1, big_t)
    b2 = _powers(complex(sigma2, -t), 1, big_t)
    c1 = _powers(complex(sigma1, t), 1, 2 * big_t)
    rows = []
    for m2 in range(1, big_t + 1):
        m1 = np.arange(m2, big_t + 1)
        row = a3[m1 - 1] * b2[m2 - 1] * c1[m1 + m2 - 1]
        rows.append(complex(row.sum()))
    return sum_array_deterministic(np.array(rows))


# --- restricted-set decomposition ------------------------------------------

def _ratio_thresholds(t: float, delta2: float, delta3: float):
    if not (0.0 < delta2 < 1.0 and 0.0 < delta3 < 1.0):
        raise ValueError("delta parameters must lie in (0, 1)")
    return t ** (1.0 - delta2) - 1.0, t ** (1.0 - delta3) - 1.0


def m_set_contains(m1: int, m2: int, t: float, delta2: float, delta3: float) -> bool:
    """Strict membership 1/(t**(1-d2)-1) < m2/m1 < t**(1-d3)-1.

    Cross-multiplied so no division is performed; the same threshold values
    drive the set builders below, which is what keeps the decomposition
    exact at the boundaries.
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("indices must be positive")
    ratio2, ratio3 = _ratio_thresholds(t, delta2, delta3)
    return m2 * ratio2 > m1 and m2 < m1 * ratio3


def _row_split(m1: int, big_t: int, ratio2: float, ratio3: float):
    """For fixed m1 return (k2, k1): the row {1..[t]} splits into
    low-ratio block m2 <= k2, middle block k2 < m2 < k1 (the restricted set),
    and high-ratio block m2 >= k1.  Uses the same comparisons as
    m_set_contains, adjusted to be exact under float rounding.
    """
    # largest m2 with m2 * ratio2 <= m1  (complement of the lower condition)
    k2 = int(m1 / ratio2)
    while (k2 + 1) * ratio2 <= m1:
        k2 += 1
    while k2 >= 1 and k2 * ratio2 > m1:
        k2 -= 1
    k2 = min(k2, big_t)
    # smallest m2 with m2 >= m1 * ratio3  (complement of the upper condition)
    k1 = int(m1 * ratio3) + 1
    while k1 > 1 and (k1 - 1) >= m1 * ratio3:
        k1 -= 1
    while k1 < m1 * ratio3:
        k1 += 1
    return k2, k1


@dataclass(frozen=True)
class DecompositionReport:
    lhs: complex
    rhs: complex
    residual: complex
    relative_residual: float
    partition_exact: bool
    m_count: int
    s1_count: int
    s2_count: int
    # how many (m1, m2) pairs the published closed-form ranges classify
    # differently from the exact complement sets (the ±1 boundary effect)
    literal_s1_mismatch: int
    literal_s2_mismatch: int
    simplified_s1_mismatch: int
    simplified_s2_mismatch: int


def s5_decomposition_residual(sigma: float, t: float, delta2: float, delta3: float) -> DecompositionReport:
    """Residual and partition audit for full = restricted + S1 + S2.

    Summand: m1**(-s) (m1+m2)**(-sbar).  The three right-hand index sets are
    the restricted set and the exact complements of its two ratio conditions;
    those partition {1..[t]}^2 whenever ratio2*ratio3 > 1.  The published
    closed-form ranges are audited against the exact sets and their
    disagreement counts reported, never silently reconciled.
    """
    big_t = int(t)
    if big_t < 1 or big_t > BRUTE_FORCE_BUDGET:
        raise ValueError("budget: need 1 <= [t] <= 3e4")
    ratio2, ratio3 = _ratio_thresholds(t, delta2, delta3)
    s = complex(sigma, t)
    cum_bar = power_prefix(complex(sigma, -t), 2 * big_t)
    outer = _powers(s, 1, big_t)

    full_rows = []
    m_rows = []
    s1_rows = []
    s2_rows = []
    m_count = s1_count = s2_count = 0
    partition_exact = True
    lit_s1 = lit_s2 = simp_s1 = simp_s2 = 0

    # published closed-form outer/inner bounds
    lit_s1_outer = int(t / ratio3) - 1
    lit_s2_outer_lo = int(t ** (1.0 - delta2))
    simp_s1_outer = int(t**delta3)
    t_pow_1m2 = t ** (1.0 - delta2)

    for m1 in range(1, big_t + 1):
        k2, k1 = _row_split(m1, big_t, ratio2, ratio3)
        k1c = min(k1, big_t + 1)
        if not (0 <= k2 < k1c <= big_t + 1):
            partition_exact = False
        m_count += max(0, k1c - 1 - k2)
        s2_count += k2
        s1_count += big_t - k1c + 1
        w = outer[m1 - 1]
        # inner sums over n = m1 + m2
        full_rows.append(w * complex(cum_bar[m1 + big_t] - cum_bar[m1]))
        s2_rows.append(w * complex(cum_bar[m1 + k2] - cum_bar[m1]))
        m_rows.append(w * complex(cum_bar[m1 + k1c - 1] - cum_bar[m1 + k2]))
        s1_rows.append(w * complex(cum_bar[m1 + big_t] - cum_bar[m1 + k1c - 1]))

        # audit of the published ranges against the exact sets
        lit_k1 = int(ratio3 * m1) + 1 if m1 <= lit_s1_outer else big_t + 1
        lit_s1 += abs(min(lit_k1, big_t + 1) - k1c)
        lit_k2 = int(m1 / ratio2) - 1 if m1 >= lit_s2_outer_lo else 0
        lit_s2 += abs(max(lit_k2, 0) - k2)
        simp_k1 = int(t ** (1.0 - delta3) * m1) + 1 if m1 <= simp_s1_outer else big_t + 1
        simp_s1 += abs(min(simp_k1, big_t + 1) - k1c)
        simp_k2 = int(m1 / t_pow_1m2) if m1 >= lit_s2_outer_lo else 0
        simp_s2 += abs(max(simp_k2, 0) - k2)

    if m_count + s1_count + s2_count != big_t * big_t:
        partition_exact = False

    lhs = sum_array_deterministic(np.array(full_rows))
    m_sum = sum_array_deterministic(np.array(m_rows))
    s1 = sum_array_deterministic(np.array(s1_rows))
    s2 = sum_array_deterministic(np.array(s2_rows))
    rhs = m_sum + s1 + s2
    resid = lhs - rhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    return DecompositionReport(
        lhs=lhs, rhs=rhs, residual=resid, relative_residual=abs(resid) / scale,
        partition_exact=partition_exact,
        m_count=m_count, s1_count=s1_count, s2_count=s2_count,
        literal_s1_mismatch=lit_s1, literal_s2_mismatch=lit_s2,
        simplified_s1_mismatch=simp_s1, simplified_s2_mismatch=simp_s2,
    )


@dataclass(frozen=True)
class SmallSetSum:
    total: complex
    sa: complex
    sb: complex
    l_of_t: Optional[int] = None


def s5_1_sum(sigma: float, t: float, delta: float,
             strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> SmallSetSum:
    """Small-outer-range sum sum_{m<=[t^d]} sum_{n=[t^{1-d}m]+1}^{[t]+m} m**(-s) n**(-sbar).

    sa takes the inner range up to [t], sb the overhang [t]+1..[t]+m.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    big_t = int(t)
    m_max = int(t**delta)
    if m_max < 1:
        raise ValueError("empty outer range")
    s = complex(sigma, t)
    if strategy is Strategy.BRUTE_FORCE:
        _check_brute_budget(t)
        sa_rows, sb_rows = [], []
        for m in range(1, m_max + 1):
            lo = int(t ** (1.0 - delta) * m) + 1
            w = m ** (-s)
            sa_rows.append(complex(w * _powers(complex(sigma, -t), lo, big_t).sum()))
            sb_rows.append(complex(w * _powers(complex(sigma, -t), big_t + 1, big_t + m).sum()))
        sa = sum_array_deterministic(np.array(sa_rows))
        sb = sum_array_deterministic(np.array(sb_rows))
        return SmallSetSum(total=sa + sb, sa=sa, sb=sb)
    if big_t + m_max > 10**7 + 4096:
        raise ValueError("budget exceeded")
    cum = power_prefix(complex(sigma, -t), big_t + m_max)
    m = np.arange(1, m_max + 1, dtype=np.int64)
    lo = (t ** (1.0 - delta) * m.astype(np.float64)).astype(np.int64)
    lo = np.minimum(lo, big_t)  # floor rounding can land just past [t]: empty range
    w = _powers(s, 1, m_max)
    sa = sum_array_deterministic(w * (cum[big_t] - cum[lo]))
    sb = sum_array_deterministic(w * (cum[big_t + m] - cum[big_t]))
    return SmallSetSum(total=sa + sb, sa=sa, sb=sb)


def s5_2_sum(sigma: float, t: float, delta: float,
             strategy: Strategy = Strategy.PREFIX_FACTORIZED) -> SmallSetSum:
    """Near-diagonal sum sum_{m=[t^{1-d}]}^{[t]} sum_{n=m+1}^{[m(1+t^{d-1})]} m**(-s) n**(-sbar).

    sa caps the inner range at P(t) = min([t], [m(1+t^{d-1})]); sb is the
    overhang past [t], nonempty only for m >= l(t) = [t - t^d] + 1.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    big_t = int(t)
    m_lo = int(t ** (1.0 - delta))
    if m_lo < 1:
        raise ValueError("outer range start below 1")
    l_of_t = int(t - t**delta) + 1
    tau = t ** (delta - 1.0)
    s = complex(sigma, t)
    if strategy is Strategy.BRUTE_FORCE:
        _check_brute_budget(t)
        sa_rows, sb_rows = [], []
        for m in range(m_lo, big_t + 1):
            hi = int(m * (1.0 + tau))
            w = m ** (-s)
            p_t = min(big_t, hi)
            sa_rows.append(complex(w * _powers(complex(sigma, -t), m + 1, p_t).sum()))
            sb_rows.append(complex(w * _powers(complex(sigma, -t), big_t + 1, hi).sum()))
        sa = sum_array_deterministic(np.array(sa_rows))
        sb = sum_array_deterministic(np.array(sb_rows))
        return SmallSetSum(total=sa + sb, sa=sa, sb=sb, l_of_t=l_of_t)
    upper = int(big_t * (1.0 + tau)) + 1
    if upper > 10**7 + 4096:
        raise ValueError("budget exceeded")
    cum = power_prefix(complex(sigma, -t), upper)
    m = np.arange(m_lo, big_t + 1, dtype=np.int64)
    hi = (m.astype(np.float64) * (1.0 + tau)).astype(np.int64)
    p_t = np.minimum(hi, big_t)
    w = _powers(s, m_lo, big_t)
    sa = sum_array_deterministic(w * np.where(p_t > m, cum[p_t] - cum[m], 0j))
    sb = sum_array_deterministic(w * np.where(hi > big_t, cum[np.maximum(hi, big_t)] - cum[big_t], 0j))
    return SmallSetSum(total=sa + sb, sa=sa, sb=sb, l_of_t=l_of_t)
