"""Named experiment suites keyed to claim ids.

The registry itself is data (claims.json); each entry carries an anchor
string and the default parameters of its sweep. Runners here turn a resolved
configuration into a flat list of ClaimRecord rows that the CLI serializes.
Adding a sweep means adding a manifest entry plus one runner; the evaluators
stay untouched.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import golden
from .asymptotics import (chi_asymptotic, chi_exact, fl_identity_residual,
                          fr_identity_residual, functional_equation_residual)
from .doublesums import (Strategy, grid_double_sum, lemma32_identity_residual,
                         relation_36_check, s4_a_sum, s4_b_sum,
                         s5_1_sum, s5_2_sum, s5_decomposition_residual,
                         tail_double_sum)
from .estlab import (SampleSeries, Verdict, fit_growth_exponent,
                     gh_bound_check, j2_integral, log_grid)
from .phases import nsum_power, single_sum
from .specs import PhaseKind, SumSpec

NAN = math.nan


class UnknownSuiteError(ValueError):
    """Raised for a suite id missing from the registry; lists valid ids."""


@dataclass(frozen=True)
class ExperimentConfig:
    suite: str
    sigma_list: Optional[List[float]] = None
    t_min: Optional[float] = None
    t_max: Optional[float] = None
    points: Optional[int] = None
    delta: Optional[float] = None
    delta2: Optional[float] = None
    delta3: Optional[float] = None
    threads: int = 1
    precision: str = "standard"
    seed: Optional[int] = None
    out_format: str = "csv"
    out_path: Optional[str] = None


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    anchor: str
    sigma: float
    t: float
    param1: float
    param2: float
    value: complex
    magnitude: float
    envelope: float
    ratio: float
    slope: float
    verdict: str

    def passed(self) -> bool:
        return self.verdict == "pass"


def load_manifest() -> Dict[str, dict]:
    text = resources.files("zetasum").joinpath("claims.json").read_text()
    return json.loads(text)


def registered_suites() -> List[str]:
    return sorted(load_manifest())


def _pmap(fn: Callable, items: Sequence, threads: int) -> list:
    """Order-preserving map, optionally across a thread pool."""
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _grid(config: ExperimentConfig, d: dict) -> List[float]:
    return log_grid(config.t_min if config.t_min is not None else d["t_min"],
                    config.t_max if config.t_max is not None else d["t_max"],
                    config.points if config.points is not None else d["points"])


def _sigmas(config: ExperimentConfig, d: dict) -> List[float]:
    if config.sigma_list:
        return list(config.sigma_list)
    return list(d["sigma_list"])


def _seed(config: ExperimentConfig, d: dict) -> int:
    return config.seed if config.seed is not None else d.get("seed", 0)


# ---------------------------------------------------------------------------
# individual suite runners
# ---------------------------------------------------------------------------


def _run_identity_312(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    tol = d["tolerance"]
    rng = np.random.default_rng(_seed(config, d))
    records = []
    for n_max in d["n_values"]:
        for _ in range(d["draws"]):
            u = complex(rng.uniform(-2, 2), rng.uniform(-50, 50))
            v = complex(rng.uniform(-2, 2), rng.uniform(-50, 50))
            res = lemma32_identity_residual(u, v, n_max)
            # scale by the product side so the residual is relative
            m = np.arange(1, n_max + 1, dtype=np.float64)
            scale = abs(np.exp(-u * np.log(m)).sum() * np.exp(-v * np.log(m)).sum())
            rel = abs(res) / max(scale, 1.0)
            records.append(ClaimRecord(
                claim_id=meta["claim_id"], anchor=meta["anchor"],
                sigma=u.real, t=float(n_max), param1=u.imag, param2=v.imag,
                value=res, magnitude=rel, envelope=tol, ratio=rel / tol,
                slope=NAN, verdict=_verdict(rel <= tol)))
    return records


def _run_relation_34(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    tol = d["tolerance"]
    jobs = [(s, t) for s in _sigmas(config, d) for t in d["t_values"]]

    def one(job):
        s, t = job
        rc = relation_36_check(s, t)
        rel = rc.relative_residual
        return ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=s, t=t, param1=NAN, param2=NAN,
            value=rc.residual, magnitude=abs(rc.residual), envelope=tol,
            ratio=rel / tol, slope=NAN, verdict=_verdict(rel <= tol))

    return _pmap(one, jobs, config.threads)


def _run_decomp_53(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    tol = d["tolerance"]
    pairs = [(d2, d3) for d2, d3 in d["delta_pairs"]]
    if config.delta2 is not None and config.delta3 is not None:
        pairs = [(config.delta2, config.delta3)]
    jobs = [(t, p) for t in d["t_values"] for p in pairs]

    def one(job):
        t, (d2, d3) = job
        rep = s5_decomposition_residual(0.5, t, d2, d3)
        ok = rep.partition_exact and rep.relative_residual <= tol
        return ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=0.5, t=t, param1=d2, param2=d3,
            value=rep.residual, magnitude=abs(rep.residual), envelope=tol,
            ratio=rep.relative_residual / tol, slope=NAN, verdict=_verdict(ok))

    return _pmap(one, jobs, config.threads)


def _run_identity_26(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    tol = d["tolerance"]
    ts = _grid(config, d)
    records = []
    for s in _sigmas(config, d):
        rows = _pmap(lambda t: fl_identity_residual(s, t, 9.0 * math.pi * t),
                     ts, config.threads)
        mags = [abs(r.residual) for r in rows]
        fit = fit_growth_exponent(SampleSeries(meta["claim_id"], list(zip(ts, mags)),
                                               ln_power=0),
                                  claimed_exponent=-s, tolerance=tol)
        ok = fit.verdict is Verdict.PASS
        for t, r in zip(ts, rows):
            records.append(ClaimRecord(
                claim_id=meta["claim_id"], anchor=meta["anchor"],
                sigma=s, t=t, param1=9.0 * math.pi * t, param2=NAN,
                value=r.residual, magnitude=abs(r.residual), envelope=r.envelope,
                ratio=abs(r.residual) / r.envelope, slope=fit.slope,
                verdict=_verdict(ok)))
    return records


def nudge_eta(eta: float, clearance: float = 0.1) -> float:
    """Push eta away from the nearest multiple of 2 pi if it sits too close."""
    k = round(eta / (2.0 * math.pi))
    dist = eta - 2.0 * math.pi * k
    if abs(dist) < clearance:
        return 2.0 * math.pi * k + (clearance if dist >= 0 else -clearance)
    return eta


def _run_identity_27(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    ts = _grid(config, d)
    sigma = _sigmas(config, d)[0]

    def main_case(t):
        return fr_identity_residual(sigma, t, math.e, nudge_eta(math.sqrt(t) / 2.0))

    def empty_case(t):
        # both etas inside (2pi, 4pi): the chi-side sum has an empty range
        return fr_identity_residual(sigma, t, 2.0 * math.pi + 0.5,
                                    4.0 * math.pi - 0.5)

    rows = _pmap(main_case, ts, config.threads)
    empty_ts = d["empty_case_t"]
    empty_rows = _pmap(empty_case, empty_ts, config.threads)
    all_ratios = [abs(r.residual) / r.envelope for r in rows + empty_rows]
    context = {"suite": meta["claim_id"], "sigma": sigma, "t_grid": ts,
               "empty_case_t": empty_ts, "eta1": "e", "eta2": "sqrt(t)/2"}
    frozen = golden.freeze(meta["claim_id"],
                           max(all_ratios) * d["headroom"], context)
    c = frozen["constant"]
    records = []
    for t, r in zip(ts, rows):
        ratio = abs(r.residual) / r.envelope
        records.append(ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=sigma, t=t, param1=math.e, param2=nudge_eta(math.sqrt(t) / 2.0),
            value=r.residual, magnitude=abs(r.residual), envelope=c * r.envelope,
            ratio=ratio / c, slope=NAN, verdict=_verdict(ratio <= c)))
    for t, r in zip(empty_ts, empty_rows):
        ratio = abs(r.residual) / r.envelope
        records.append(ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=sigma, t=t, param1=2.0 * math.pi + 0.5, param2=4.0 * math.pi - 0.5,
            value=r.residual, magnitude=abs(r.residual), envelope=c * r.envelope,
            ratio=ratio / c, slope=NAN, verdict=_verdict(ratio <= c)))
    return records


def _run_lemma_23(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    ts = _grid(config, d)
    records = []
    for s in _sigmas(config, d):
        vals = _pmap(lambda t: single_sum(SumSpec(PhaseKind.F2, s, t, 1, int(t))),
                     ts, config.threads)
        mags = [abs(v) for v in vals]
        fit = fit_growth_exponent(SampleSeries(meta["claim_id"], list(zip(ts, mags)),
                                               ln_power=0),
                                  claimed_exponent=0.0, tolerance=d["slope_tolerance"])
        slope_ok = abs(fit.slope) <= d["slope_tolerance"]
        context = {"suite": meta["claim_id"], "sigma": s, "t_grid": ts}
        frozen = golden.freeze(f"{meta['claim_id']}-sigma-{s:g}",
                               max(mags) * d["headroom"], context)
        c = frozen["constant"]
        ok = slope_ok and all(m <= c for m in mags)
        for t, v, m in zip(ts, vals, mags):
            records.append(ClaimRecord(
                claim_id=meta["claim_id"], anchor=meta["anchor"],
                sigma=s, t=t, param1=NAN, param2=NAN,
                value=v, magnitude=m, envelope=c, ratio=m / c,
                slope=fit.slope, verdict=_verdict(ok)))
    return records


def _exponent_sweep(config, meta, evaluate) -> List[ClaimRecord]:
    """Shared shape of the pure growth-exponent suites."""
    d = meta["defaults"]
    ts = _grid(config, d)
    records = []
    for s in _sigmas(config, d) if "sigma_list" in d else [NAN]:
        vals = _pmap(lambda t: evaluate(s, t), ts, config.threads)
        mags = [abs(v) for v in vals]
        fit = fit_growth_exponent(
            SampleSeries(meta["claim_id"], list(zip(ts, mags)),
                         ln_power=d["ln_power"]),
            claimed_exponent=d["claimed_exponent"], tolerance=d["tolerance"])
        ok = fit.verdict is Verdict.PASS
        for t, v, m in zip(ts, vals, mags):
            env = (t ** (d["claimed_exponent"] + d["tolerance"])
                   * math.log(t) ** d["ln_power"] * fit.max_ratio_constant)
            records.append(ClaimRecord(
                claim_id=meta["claim_id"], anchor=meta["anchor"],
                sigma=s, t=t, param1=NAN, param2=NAN,
                value=v, magnitude=m, envelope=env,
                ratio=m / env if env > 0 else NAN,
                slope=fit.slope, verdict=_verdict(ok)))
    return records


def _run_est_213(config, meta) -> List[ClaimRecord]:
    return _exponent_sweep(
        config, meta,
        lambda s, t: single_sum(SumSpec(PhaseKind.F1, s, t, 1, int(t))))


def _run_est_25(config, meta) -> List[ClaimRecord]:
    return _exponent_sweep(
        config, meta,
        lambda s, t: nsum_power(s, t, 1, int(t), minus_it=False))


def _run_chi_checks(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    tol = d["tolerance"]
    ts = log_grid(d["t_min"], d["t_max"], d["points"])
    records = []
    for t in ts:
        s = complex(0.5, t)
        chi = chi_exact(s)
        dev = abs(abs(chi) - 1.0)
        records.append(ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=0.5, t=t, param1=1.0, param2=NAN,
            value=chi, magnitude=dev, envelope=tol, ratio=dev / tol,
            slope=NAN, verdict=_verdict(dev <= tol)))
        ratio_dev = abs(chi / chi_asymptotic(s) - 1.0)
        env = 10.0 / t
        records.append(ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=0.5, t=t, param1=2.0, param2=NAN,
            value=chi, magnitude=ratio_dev, envelope=env, ratio=ratio_dev / env,
            slope=NAN, verdict=_verdict(ratio_dev <= env)))
    rng = np.random.default_rng(_seed(config, d))
    for _ in range(d["involution_draws"]):
        sg = rng.uniform(0.05, 0.95)
        t = rng.uniform(10.0, 1e4)
        s = complex(sg, t)
        prod = chi_exact(s) * chi_exact(1.0 - s)
        dev = abs(prod - 1.0)
        records.append(ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=sg, t=t, param1=3.0, param2=NAN,
            value=prod, magnitude=dev, envelope=tol, ratio=dev / tol,
            slope=NAN, verdict=_verdict(dev <= tol)))
    return records


def _run_appendix_a(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    tol = d["tolerance"]
    records = []
    for s in _sigmas(config, d):
        for t in d["t_values"]:
            r = functional_equation_residual(s, t)
            rel = abs(r.residual) / r.envelope
            records.append(ClaimRecord(
                claim_id=meta["claim_id"], anchor=meta["anchor"],
                sigma=s, t=t, param1=NAN, param2=NAN,
                value=r.residual, magnitude=abs(r.residual), envelope=r.envelope * tol,
                ratio=rel / tol, slope=NAN, verdict=_verdict(rel <= tol)))
    # finite-sum growth at s = sigma - 1 + it
    sg = d["slope_sigma"]
    ts = log_grid(d["t_min"], d["t_max"], d["points"])
    vals = _pmap(lambda t: nsum_power(sg - 1.0, t, 1, int(t), minus_it=True),
                 ts, config.threads)
    mags = [abs(v) for v in vals]
    claimed = 1.5 - sg
    fit = fit_growth_exponent(SampleSeries(meta["claim_id"], list(zip(ts, mags)),
                                           ln_power=0),
                              claimed_exponent=claimed,
                              tolerance=d["slope_tolerance"])
    ok = fit.verdict is Verdict.PASS
    for t, v, m in zip(ts, vals, mags):
        env = t ** (claimed + d["slope_tolerance"]) * fit.max_ratio_constant
        records.append(ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=sg, t=t, param1=sg - 1.0, param2=NAN,
            value=v, magnitude=m, envelope=env, ratio=m / env,
            slope=fit.slope, verdict=_verdict(ok)))
    return records


def _run_thm_51(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    delta = config.delta if config.delta is not None else d["delta"]
    meta = dict(meta)
    return _exponent_sweep(
        config, meta,
        lambda s, t: s5_1_sum(s, t, delta).total)


def _run_thm_53(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    delta = config.delta if config.delta is not None else d["delta"]
    ts = _grid(config, d)
    s = _sigmas(config, d)[0]
    vals = _pmap(lambda t: s5_2_sum(s, t, delta).total, ts, config.threads)
    mags = [abs(v) for v in vals]
    fit = fit_growth_exponent(SampleSeries(meta["claim_id"], list(zip(ts, mags)),
                                           ln_power=d["ln_power"]),
                              claimed_exponent=0.0, tolerance=d["slope_tolerance"])
    slope_ok = abs(fit.slope) <= d["slope_tolerance"]
    ln_mags = [m / math.log(t) for t, m in zip(ts, mags)]
    context = {"suite": meta["claim_id"], "sigma": s, "delta": delta, "t_grid": ts}
    frozen = golden.freeze(meta["claim_id"], max(ln_mags) * d["headroom"], context)
    c = frozen["constant"]
    ok = slope_ok and all(m <= c * math.log(t) for t, m in zip(ts, mags))
    return [ClaimRecord(
        claim_id=meta["claim_id"], anchor=meta["anchor"],
        sigma=s, t=t, param1=delta, param2=NAN,
        value=v, magnitude=m, envelope=c * math.log(t),
        ratio=m / (c * math.log(t)), slope=fit.slope, verdict=_verdict(ok))
        for t, v, m in zip(ts, vals, mags)]


def _run_lemma_52(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    ts = _grid(config, d)
    records = []
    for sg, delta in d["pairs"]:
        def one(t):
            num, asym = j2_integral(sg, t, delta)
            rel = abs(num / asym - 1.0)
            decay = max(t ** (-2.0 * delta * (1.0 - sg)), t ** (-delta))
            return num, asym, rel, decay
        rows = _pmap(one, ts, config.threads)
        ratios = [rel / decay for _, _, rel, decay in rows]
        context = {"suite": meta["claim_id"], "sigma": sg, "delta": delta,
                   "t_grid": ts}
        frozen = golden.freeze(f"{meta['claim_id']}-s{sg:g}-d{delta:g}",
                               max(ratios) * d["headroom"], context)
        c = frozen["constant"]
        for t, (num, asym, rel, decay) in zip(ts, rows):
            records.append(ClaimRecord(
                claim_id=meta["claim_id"], anchor=meta["anchor"],
                sigma=sg, t=t, param1=delta, param2=asym,
                value=complex(num), magnitude=rel, envelope=c * decay,
                ratio=rel / (c * decay), slope=NAN,
                verdict=_verdict(rel <= c * decay)))
    return records


def _run_bound_5gh(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    rng = np.random.default_rng(_seed(config, d))
    sigmas = d["sigma_list"]
    records = []
    failures = 0
    sign_failures = 0
    worst = 0.0
    worst_case = None
    n_inst = d["instances"]
    for i in range(n_inst):
        sg = sigmas[int(rng.integers(len(sigmas)))]
        rows = int(rng.integers(2, d["max_side"] + 1))
        cols = int(rng.integers(2, d["max_side"] + 1))
        m_lo = int(rng.integers(1, 101))
        n_lo = int(rng.integers(1, 101))
        a = np.exp(2j * math.pi * rng.random((rows, cols)))
        m = np.arange(m_lo, m_lo + rows, dtype=np.float64) ** (-sg)
        n = np.arange(n_lo, n_lo + cols, dtype=np.float64) ** (-sg)
        chk = gh_bound_check(a, np.outer(m, n))
        ratio = chk.lhs / chk.bound if chk.bound > 0 else NAN
        if not chk.holds:
            failures += 1
        if not chk.sign_conditions_ok:
            sign_failures += 1
        if ratio > worst:
            worst = ratio
            worst_case = (sg, rows, cols, chk)
    ok = failures == 0 and sign_failures == 0
    sg, rows, cols, chk = worst_case
    records.append(ClaimRecord(
        claim_id=meta["claim_id"], anchor=meta["anchor"],
        sigma=sg, t=float(n_inst), param1=float(rows), param2=float(cols),
        value=complex(chk.lhs), magnitude=chk.lhs, envelope=chk.bound,
        ratio=worst, slope=NAN, verdict=_verdict(ok)))
    return records


def _run_lemma_41(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    ts = _grid(config, d)
    vals = _pmap(lambda t: s4_a_sum(d["sigma1"], d["sigma2"], t).value,
                 ts, config.threads)
    mags = [abs(v) for v in vals]
    fit = fit_growth_exponent(SampleSeries(meta["claim_id"], list(zip(ts, mags)),
                                           ln_power=d["ln_power"]),
                              claimed_exponent=d["claimed_exponent"],
                              tolerance=d["tolerance"])
    ok = fit.verdict is Verdict.PASS
    return [ClaimRecord(
        claim_id=meta["claim_id"], anchor=meta["anchor"],
        sigma=d["sigma1"], t=t, param1=d["sigma2"], param2=NAN,
        value=v, magnitude=m,
        envelope=t ** (d["claimed_exponent"] + d["tolerance"]) * fit.max_ratio_constant,
        ratio=NAN, slope=fit.slope, verdict=_verdict(ok))
        for t, v, m in zip(ts, vals, mags)]


def _run_lemma_42(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    ts = _grid(config, d)
    sg = d["sigma"]
    vals = _pmap(lambda t: s4_b_sum(sg - 1.0, sg, 1.0, t).total,
                 ts, config.threads)
    mags = [abs(v) for v in vals]
    fit = fit_growth_exponent(SampleSeries(meta["claim_id"], list(zip(ts, mags)),
                                           ln_power=d["ln_power"]),
                              claimed_exponent=d["claimed_exponent"],
                              tolerance=d["tolerance"])
    ok = fit.verdict is Verdict.PASS
    return [ClaimRecord(
        claim_id=meta["claim_id"], anchor=meta["anchor"],
        sigma=sg, t=t, param1=sg - 1.0, param2=1.0,
        value=v, magnitude=m,
        envelope=t ** (d["claimed_exponent"] + d["tolerance"]) * fit.max_ratio_constant,
        ratio=NAN, slope=fit.slope, verdict=_verdict(ok))
        for t, v, m in zip(ts, vals, mags)]


def _run_determinism(config, meta) -> List[ClaimRecord]:
    d = meta["defaults"]
    tol = d["tolerance"]
    rng = np.random.default_rng(_seed(config, d))
    records = []
    for i in range(d["draws"]):
        t = float(rng.uniform(50.0, d["t_max_draw"]))
        sg = float(rng.uniform(0.1, 0.9))
        fast = grid_double_sum(sg, t).value + tail_double_sum(sg, t)
        slow = (grid_double_sum(sg, t, Strategy.BRUTE_FORCE).value
                + tail_double_sum(sg, t, Strategy.BRUTE_FORCE))
        rel = abs(fast - slow) / max(abs(slow), 1e-300)
        records.append(ClaimRecord(
            claim_id=meta["claim_id"], anchor=meta["anchor"],
            sigma=sg, t=t, param1=float(i), param2=NAN,
            value=fast - slow, magnitude=rel, envelope=tol, ratio=rel / tol,
            slope=NAN, verdict=_verdict(rel <= tol)))
    # same sub-suite run on one thread and eight must agree exactly
    probe = ExperimentConfig(suite="relation-3.4", threads=1)
    manifest = load_manifest()
    sub = dict(manifest["relation-3.4"], claim_id="relation-3.4")
    one_thread = _run_relation_34(probe, sub)
    eight = _run_relation_34(replace(probe, threads=8), sub)
    identical = repr(one_thread) == repr(eight)
    records.append(ClaimRecord(
        claim_id=meta["claim_id"], anchor=meta["anchor"],
        sigma=NAN, t=NAN, param1=1.0, param2=8.0,
        value=complex(len(one_thread)), magnitude=0.0 if identical else 1.0,
        envelope=0.0, ratio=NAN, slope=NAN, verdict=_verdict(identical)))
    return records


_RUNNERS: Dict[str, Callable] = {
    "identity-3.12": _run_identity_312,
    "relation-3.4": _run_relation_34,
    "decomp-5.3": _run_decomp_53,
    "identity-2.6": _run_identity_26,
    "identity-2.7": _run_identity_27,
    "lemma-2.3": _run_lemma_23,
    "est-2.13": _run_est_213,
    "est-2.5": _run_est_25,
    "chi-checks": _run_chi_checks,
    "appendix-a": _run_appendix_a,
    "thm-5.1": _run_thm_51,
    "thm-5.3": _run_thm_53,
    "lemma-5.2": _run_lemma_52,
    "bound-5gh": _run_bound_5gh,
    "lemma-4.1": _run_lemma_41,
    "lemma-4.2": _run_lemma_42,
    "determinism": _run_determinism,
}


def run_suite(config: ExperimentConfig) -> List[ClaimRecord]:
    manifest = load_manifest()
    if config.suite not in manifest:
        raise UnknownSuiteError(
            f"unknown suite {config.suite!r}; registered suites: "
            + ", ".join(sorted(manifest)))
    meta = dict(manifest[config.suite], claim_id=config.suite)
    return _RUNNERS[config.suite](config, meta)
