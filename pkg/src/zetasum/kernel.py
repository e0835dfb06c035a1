"""Precision-controlled summation, complex log-gamma, and the extended oracle.

Everything here is pure and reentrant.  The deterministic-reduction contract
(fixed chunking, fixed association order) makes every output independent of
scheduling, so callers may parallelize across chunks or grid points freely.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath as mp
import numpy as np

from .config import CHUNK_SIZE, EXTENDED_DPS, ORACLE_BUDGET
from .specs import ComplexScalar, PhaseKind, SumSpec


def _two_sum(a: float, b: float):
    """Error-free transform: s + e == a + b exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _as_complex(z) -> complex:
    if isinstance(z, ComplexScalar):
        return z.as_complex()
    return complex(z)


@dataclass
class Accumulator:
    """Neumaier-compensated running sum of complex terms.

    Adding N terms of magnitude <= 1 leaves an error <= 4*N*ulp.
    """

    sum_re: float = 0.0
    sum_im: float = 0.0
    comp_re: float = 0.0
    comp_im: float = 0.0
    count: int = 0

    def add(self, z) -> None:
        z = _as_complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("non-finite input")
        s, e = _two_sum(self.sum_re, z.real)
        self.sum_re, self.comp_re = s, self.comp_re + e
        s, e = _two_sum(self.sum_im, z.imag)
        self.sum_im, self.comp_im = s, self.comp_im + e
        self.count += 1

    @property
    def value(self) -> complex:
        return complex(self.sum_re + self.comp_re, self.sum_im + self.comp_im)


def sum_compensated(terms: Iterable) -> complex:
    """Neumaier sum of a finite stream of complex terms."""
    acc = Accumulator()
    for z in terms:
        acc.add(z)
    return acc.value


def reduce_deterministic(chunks: Sequence, chunk_size: int = CHUNK_SIZE) -> complex:
    """Combine ordered chunk partial sums by a fixed binary-tree reduction.

    Adjacent pairs are combined level by level with compensated addition
    (odd leftovers promoted unchanged), so the result is a pure function of
    the chunk list: bit-identical however many workers produced the chunks.
    """
    del chunk_size  # association order is fixed by the tree, not the width
    nodes = []
    for z in chunks:
        z = _as_complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("non-finite input")
        nodes.append((z.real, 0.0, z.imag, 0.0))
    if not nodes:
        return 0j
    while len(nodes) > 1:
        nxt = []
        for i in range(0, len(nodes) - 1, 2):
            ar, ae, br, be = nodes[i]
            cr, ce, dr, de = nodes[i + 1]
            s_re, e_re = _two_sum(ar, cr)
            s_im, e_im = _two_sum(br, dr)
            nxt.append((s_re, ae + ce + e_re, s_im, be + de + e_im))
        if len(nodes) % 2:
            nxt.append(nodes[-1])
        nodes = nxt
    s_re, e_re, s_im, e_im = nodes[0]
    return complex(s_re + e_re, s_im + e_im)


def sum_array_deterministic(values: np.ndarray, chunk_size: int = CHUNK_SIZE) -> complex:
    """Deterministic compensated sum of a 1-D array of complex terms.

    Within a chunk numpy's pairwise summation keeps the error at
    O(log n) ulp; chunk partials are then combined by the fixed tree.
    """
    values = np.asarray(values)
    if values.size == 0:
        return 0j
    if not np.isfinite(values).all():
        raise ValueError("non-finite input")
    partials = [
        complex(values[i : i + chunk_size].sum())
        for i in range(0, values.size, chunk_size)
    ]
    return reduce_deterministic(partials)


# Lanczos approximation, g = 7, 9 terms: ~1e-14 relative over the half-plane
# Re z >= 1/2 within the |z| <= 1e7 window.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.9189385332046727417803297364056176


def _log_sin_safe(z: complex) -> complex:
    """log(sin(z)) valid for large |Im z| where sin itself overflows.

    The imaginary part is reduced modulo 2*pi for |Im z| > 20; every caller
    exponentiates the assembled total, so the branch offset is immaterial.
    """
    if abs(z.imag) <= 20.0:
        return cmath.log(cmath.sin(z))
    if z.imag > 0:
        # sin z = (i/2) e^{-iz} (1 - e^{2iz}); |e^{2iz}| < e^{-40}
        return cmath.log(0.5j) - 1j * z + cmath.log(1.0 - cmath.exp(2j * z))
    return cmath.log(-0.5j) + 1j * z + cmath.log(1.0 - cmath.exp(-2j * z))


def log_gamma_complex(z) -> complex:
    """Principal-branch log Gamma via Lanczos, reflection for Re z < 1/2.

    Relative error <= 1e-13 for |z| <= 1e7 away from the poles.  In the
    reflected half-plane with |Im z| > 20 the imaginary part is only
    determined modulo 2*pi (consumers exponentiate).
    """
    z = _as_complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise ValueError("gamma pole")
    if z.real < 0.5:
        # log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return math.log(math.pi) - _log_sin_safe(math.pi * z) - log_gamma_complex(1.0 - z)
    w = z - 1.0
    x = _LANCZOS_C[0]
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        x += c / (w + i)
    tt = w + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (w + 0.5) * cmath.log(tt) - tt + cmath.log(x)


def _oracle_phase(kind: PhaseKind, t, m):
    if kind is PhaseKind.F1:
        return t * mp.log(1 + t / m)
    if kind is PhaseKind.F2:
        return t * mp.log(1 + mp.mpf(m) / t)
    return t * mp.log(m)


def oracle_recompute(spec: SumSpec, dps: int = EXTENDED_DPS) -> ComplexScalar:
    """Term-by-term extended-precision evaluation of a sum description.

    This is the independent reference for every certified value: no prefix
    tables, no factorization, no shared code with the fast paths.
    """
    if spec.term_count > ORACLE_BUDGET:
        raise ValueError(f"oracle budget exceeded: {spec.term_count} terms")
    if spec.term_count == 0:
        return ComplexScalar.extended(mp.mpf(0), mp.mpf(0), flag="empty set")
    sign = -1 if spec.conjugate else 1
    with mp.workdps(dps):
        t = mp.mpf(spec.t)
        sigma = mp.mpf(spec.sigma)
        total = mp.mpc(0)
        for m in range(spec.lo, spec.hi + 1):
            phase = _oracle_phase(spec.phase, t, m)
            total += mp.power(m, -sigma) * mp.exp(mp.mpc(0, sign * phase))
        return ComplexScalar.extended(total.real, total.imag)


def oracle_log_gamma(z: complex, dps: int = EXTENDED_DPS) -> ComplexScalar:
    """Extended-precision log Gamma (certification reference)."""
    with mp.workdps(dps):
        v = mp.loggamma(mp.mpc(z))
        return ComplexScalar.extended(v.real, v.imag)
