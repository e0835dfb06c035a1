"""Functional-equation factor, eta-kernel error term, and identity residuals.

The two asymptotic identities implemented here relate partial zeta sums over
one index window to reflected sums over another.  Each residual routine
returns the computed left side, right side, their exact difference, and the
error-term magnitude (envelope) the difference is expected to track.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import ETA_DIST_EPS
from .kernel import log_gamma_complex
from .phases import nsum_power

_LN_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class EtaParams:
    """The (alpha, beta, gamma) ingredients of the eta-kernel at (sigma, t)."""

    eta: float
    alpha: complex
    beta: complex
    gamma_phase: float
    sigma: float
    t: float
    near_resonance: bool = False  # eta within ETA_DIST_EPS of 2*pi*Z


@dataclass(frozen=True)
class IdentityResidual:
    lhs: complex
    rhs: complex
    residual: complex
    envelope: float


def _dist_to_2pi_grid(eta: float) -> float:
    k = round(eta / (2.0 * math.pi))
    return abs(eta - 2.0 * math.pi * k)


def chi_exact(s: complex) -> complex:
    """chi(s) = (2 pi)**s / pi * sin(pi s / 2) * Gamma(1 - s).

    Assembled in the log domain so the huge Gamma and sin factors cancel
    before exponentiation; relative error <= 1e-11 for |Im s| <= 1e5.
    """
    s = complex(s)
    one_minus_s = 1.0 - s
    if one_minus_s.imag == 0.0 and one_minus_s.real <= 0.0 and \
            one_minus_s.real == int(one_minus_s.real):
        raise ValueError("gamma pole")
    if abs(s.imag) > 1e7:
        raise ValueError("log-gamma window exceeded")
    total = s * _LN_2PI - math.log(math.pi)
    total += _log_sin_half(s)
    total += log_gamma_complex(one_minus_s)
    return cmath.exp(total)


def _log_sin_half(s: complex) -> complex:
    """log sin(pi s / 2) without overflow for large |Im s|."""
    z = 0.5 * math.pi * s
    if abs(z.imag) <= 20.0:
        return cmath.log(cmath.sin(z))
    if z.imag > 0:
        return cmath.log(0.5j) - 1j * z + cmath.log(1.0 - cmath.exp(2j * z))
    return cmath.log(-0.5j) + 1j * z + cmath.log(1.0 - cmath.exp(-2j * z))


def chi_asymptotic(s: complex) -> complex:
    """Leading large-t form (2 pi / t)**(s - 1/2) e^{it} e^{i pi/4}."""
    s = complex(s)
    t = s.imag
    if t < 10.0:
        raise ValueError("asymptotic regime requires Im s >= 10")
    return cmath.exp((s - 0.5) * (_LN_2PI - math.log(t))) * cmath.exp(1j * (t + math.pi / 4.0))


def eta_params(sigma: float, t: float, eta: float) -> EtaParams:
    if eta <= 0.0 or t <= 0.0:
        raise ValueError("eta and t must be positive")
    floor_ratio = math.floor(t / eta)
    alpha = 1.0 - cmath.exp(-1j * eta)
    beta = complex(t - eta * floor_ratio, -(sigma - 1.0))
    gamma_phase = t - eta - eta * floor_ratio
    return EtaParams(
        eta=eta,
        alpha=alpha,
        beta=beta,
        gamma_phase=gamma_phase,
        sigma=sigma,
        t=t,
        near_resonance=_dist_to_2pi_grid(eta) <= 1e-6,
    )


def e_term(sigma: float, t: float, eta: float):
    """Eta-kernel value and its error envelope.

    value = e^{i gamma} (eta/t)**s * {1/alpha + (i/(2 alpha^3))(eta^2/t)
            [(alpha^2/eta^2)(beta^2 + sigma - 1) - 2 alpha beta / eta - alpha + 2]}

    The envelope combines the dropped relative 1/t factor on the main term
    with the regime-dependent additive remainder: eta/t below the eta ~ t**(1/3)
    crossover, exp(-|alpha| t / eta^2) + eta^4/t^2 above it.
    """
    if not (ETA_DIST_EPS < eta < math.sqrt(t)):
        raise ValueError("validity window")
    if not 0.0 < sigma < 1.0:
        raise ValueError("sigma must lie in (0, 1)")
    if _dist_to_2pi_grid(eta) <= ETA_DIST_EPS:
        raise ValueError("eta too close to 2*pi*Z")
    p = eta_params(sigma, t, eta)
    a, b = p.alpha, p.beta
    s = complex(sigma, t)
    bracket = (a * a / (eta * eta)) * (b * b + sigma - 1.0) - 2.0 * a * b / eta - a + 2.0
    brace = 1.0 / a + (1j / (2.0 * a**3)) * (eta * eta / t) * bracket
    value = cmath.exp(1j * p.gamma_phase) * cmath.exp(s * math.log(eta / t)) * brace
    if eta < t ** (1.0 / 3.0):
        remainder = eta / t
    else:
        remainder = math.exp(-abs(a) * t / (eta * eta)) + eta**4 / (t * t)
    envelope = abs(value) / t + remainder
    return value, envelope


def fl_identity_residual(sigma: float, t: float, eta: float) -> IdentityResidual:
    """Residual of: sum_{n=[t]+1}^{[eta/2pi]} n**(-s) = (eta/2pi)**(1-s)/(1-s) + O(t**-sigma)."""
    if not 0.0 <= sigma < 1.0:
        raise ValueError("sigma must lie in [0, 1)")
    lo = int(t) + 1
    hi = int(eta / (2.0 * math.pi))
    if hi < lo:
        raise ValueError("empty sum: need eta/2pi > t")
    if eta / (2.0 * math.pi) <= 1.0001 * t:
        raise ValueError("requires eta/2pi > (1+eps) t")
    s = complex(sigma, t)
    lhs = nsum_power(sigma, t, lo, hi, minus_it=True)
    x = eta / (2.0 * math.pi)
    rhs = cmath.exp((1.0 - s) * math.log(x)) / (1.0 - s)
    return IdentityResidual(lhs=lhs, rhs=rhs, residual=lhs - rhs, envelope=t ** (-sigma))


def fr_identity_residual(sigma: float, t: float, eta1: float, eta2: float) -> IdentityResidual:
    """Residual of the reflected two-window identity.

    lhs  = sum_{n=[t/eta2]+1}^{[t/eta1]} n**(-s)
    rhs  = chi(s) * sum_{n=[eta1/2pi]+1}^{[eta2/2pi]} n**(-(1-s))
           + E(sigma, t, eta2) - E(sigma, t, eta1)
    """
    if not 0.0 < sigma < 1.0:
        raise ValueError("sigma must lie in (0, 1)")
    if not (ETA_DIST_EPS < eta1 < eta2 < math.sqrt(t)):
        raise ValueError(
            f"validity window: need {ETA_DIST_EPS} < eta1 < eta2 < sqrt(t), "
            f"got eta1={eta1}, eta2={eta2}, sqrt(t)={math.sqrt(t):.3f}"
        )
    for eta in (eta1, eta2):
        if _dist_to_2pi_grid(eta) <= ETA_DIST_EPS:
            raise ValueError(f"eta={eta} too close to 2*pi*Z")
    s = complex(sigma, t)
    lhs = nsum_power(sigma, t, int(t / eta2) + 1, int(t / eta1), minus_it=True)
    # 1/n**(1-s) = n**(-(1-sigma) + it)
    right_sum = nsum_power(1.0 - sigma, t, int(eta1 / (2.0 * math.pi)) + 1,
                           int(eta2 / (2.0 * math.pi)), minus_it=False)
    e2, env2 = e_term(sigma, t, eta2)
    e1, env1 = e_term(sigma, t, eta1)
    rhs = chi_exact(s) * right_sum + e2 - e1
    return IdentityResidual(lhs=lhs, rhs=rhs, residual=lhs - rhs, envelope=env1 + env2)


# Bernoulli numbers B_2..B_12 for the Euler-Maclaurin tail.
_BERNOULLI = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0)


def zeta_reference(s: complex) -> complex:
    """Euler-Maclaurin zeta to ~1e-10 relative for |Im s| <= 1e5.

    N ~ max(20, 2|t|) initial terms, correction through the sixth
    Bernoulli term.
    """
    s = complex(s)
    if s == 1.0:
        raise ValueError("pole at s = 1")
    if abs(s.imag) > 1e5:
        raise ValueError("imaginary part outside evaluator window")
    n_terms = max(20, int(2.0 * abs(s.imag)) + 1)
    head = nsum_power(s.real, s.imag, 1, n_terms, minus_it=True)
    n = float(n_terms)
    tail = cmath.exp((1.0 - s) * math.log(n)) / (s - 1.0)
    tail -= 0.5 * cmath.exp(-s * math.log(n))
    # sum_k B_2k / (2k)! * s(s+1)...(s+2k-2) * n**(-s-2k+1)
    rising = s
    fact = 2.0
    for k, b2k in enumerate(_BERNOULLI, start=1):
        tail += (b2k / fact) * rising * cmath.exp(-(s + 2.0 * k - 1.0) * math.log(n))
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k)
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0)
    return head + tail


def functional_equation_residual(sigma: float, t: float) -> IdentityResidual:
    """Relative residual of zeta(s) = chi(s) zeta(1-s) at s = sigma - 1 + it."""
    if not 0.0 < sigma < 1.0:
        raise ValueError("sigma must lie in (0, 1)")
    if not 10.0 <= t <= 1e4:
        raise ValueError("t outside [10, 1e4]")
    s = complex(sigma - 1.0, t)
    lhs = zeta_reference(s)
    rhs = chi_exact(s) * zeta_reference(1.0 - s)
    envelope = abs(lhs)
    return IdentityResidual(lhs=lhs, rhs=rhs, residual=lhs - rhs, envelope=envelope)
