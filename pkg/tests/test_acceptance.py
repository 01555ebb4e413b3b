"""End-to-end acceptance suite.

Each criterion prints one PASS/FAIL line (run pytest with -s to see them
inline) and asserts its stated tolerance and runtime budget.  Every
expected value is either derived from an independent oracle inside the
test or checked against the closed-form rate predictions.
"""

import itertools
import math
import time

import numpy as np
import pytest

from levywave import (
    BesovParams,
    CompoundPoisson,
    Gaussian,
    GaussianJump,
    GridSpec,
    InverseGaussian,
    Laplace,
    SAlphaS,
    WaveletCoeffs,
    WaveletSpec,
    best_n_term,
    compare_families,
    dwt_periodic,
    empirical_regularity_scan,
    forward_fft,
    generate_noise,
    idwt_periodic,
    make_rng,
    psi_eval,
    sample_id_increment,
    synthesize_process,
    trial_seed,
    weighted_magnitudes,
)
from levywave.harness import ExperimentConfig, run_experiment
from levywave.spectral import FractionalLaplacian

BASE_SEED = 20260810


def _emit(num, name, ok, detail, elapsed, budget):
    status = "PASS" if ok else "FAIL"
    print(f"\n[{status}] criterion {num} ({name}): {detail} [{elapsed:.1f}s / budget {budget:.0f}s]")


def _experiment(family, params, trials=20, **overrides):
    config = ExperimentConfig(
        family=family, params=params, gamma=1.0, d=1, J=14, k=4,
        trials=trials, base_seed=BASE_SEED, **overrides,
    )
    return run_experiment(config)


def test_criterion_1_wavelet_correctness():
    t0 = time.time()
    budget = 5.0
    worst_rt = worst_pv = 0.0
    cases = [(k, 1, 10) for k in (1, 2, 4)] + [(k, 2, 8) for k in (1, 2, 4)] + [(4, 2, 10)]
    rng = make_rng(1)
    for k, d, J in cases:
        spec = WaveletSpec(k=k)
        x = rng.normal(size=(2**J,) * d)
        x -= x.mean()
        coeffs = dwt_periodic(x, spec)
        back = idwt_periodic(coeffs, spec)
        worst_rt = max(worst_rt, float(np.abs(back - x).max() / np.abs(x).max()))
        energy = sum(
            float(np.sum((arr / 2.0 ** ((j + coeffs.zeta) * d / 2.0)) ** 2))
            for j, bands in coeffs.levels.items()
            for arr in bands.values()
        )
        target = float(np.sum(x**2)) * 2.0 ** (-J * d)
        worst_pv = max(worst_pv, abs(energy - target) / target)
    elapsed = time.time() - t0
    ok = worst_rt <= 1e-10 and worst_pv <= 1e-10 and elapsed < budget
    _emit(1, "wavelet correctness", ok,
          f"max roundtrip {worst_rt:.2e}, max energy mismatch {worst_pv:.2e} over "
          f"k in {{1,2,4}}, d in {{1,2}}, J <= 10", elapsed, budget)
    assert ok


def _random_small_container(rng):
    zeta = int(rng.integers(0, 2))
    j_max = int(rng.integers(0, 3 if zeta == 0 else 2))
    coeffs = WaveletCoeffs.zeros(d=1, zeta=zeta, j_coarse=0, j_max=j_max)
    for j in range(j_max + 1):
        for g in coeffs.levels[j]:
            arr = coeffs.levels[j][g]
            picks = rng.integers(0, 2, size=arr.shape).astype(bool)
            if rng.integers(0, 2):
                arr[picks] = rng.integers(0, 5, size=int(picks.sum())).astype(float)
            else:
                arr[picks] = rng.normal(size=int(picks.sum()))
    return coeffs


def test_criterion_2_nterm_oracle_equivalence():
    t0 = time.time()
    budget = 10.0
    rng = make_rng(2)
    cases = 0
    while cases < 500:
        coeffs = _random_small_container(rng)
        p = float(rng.integers(1, 3))
        params = BesovParams(tau=float(rng.integers(0, 2)), p=p, q=p, d=1)
        mags = weighted_magnitudes(coeffs, params)
        if mags.size > 12:
            continue
        n = int(rng.integers(0, mags.size + 1))
        _, greedy = best_n_term(coeffs, params, n)
        best = math.inf
        p = params.p
        for kept in itertools.combinations(range(mags.size), n):
            disc = sorted(float(mags[i]) ** p for i in range(mags.size) if i not in kept)
            acc = 0.0
            for v in disc:
                acc += v
            best = min(best, acc ** (1.0 / p))
        assert greedy == best, f"case {cases}: greedy {greedy!r} != exhaustive {best!r}"
        cases += 1
    elapsed = time.time() - t0
    ok = elapsed < budget
    _emit(2, "n-term oracle equivalence", ok,
          "greedy residual equals exhaustive subset minimum exactly on 500 random "
          "containers (<= 12 coefficients, p in {1,2})", elapsed, budget)
    assert ok


def test_criterion_3_sampler_fidelity():
    t0 = time.time()
    budget = 30.0
    m = 2**16
    h = 2.0**-8
    bound = 4.0 / math.sqrt(m)
    rng = make_rng(3)
    families = [
        Gaussian(1.0), SAlphaS(1.5), SAlphaS(1.0),
        CompoundPoisson(1.0, GaussianJump(1.0)), Laplace(), InverseGaussian(1.0, 1.0),
    ]
    worst = 0.0
    for exponent in families:
        draws = sample_id_increment(exponent, h, rng, size=m)
        for xi in (0.5, 1.0, 2.0, 5.0, 10.0):
            ecf = complex(np.mean(np.exp(1j * xi * draws)))
            target = complex(np.exp(h * psi_eval(exponent, xi)))
            worst = max(worst, abs(ecf - target))
    elapsed = time.time() - t0
    ok = worst <= bound and elapsed < budget
    _emit(3, "sampler fidelity", ok,
          f"sup |ECF - exp(h psi)| = {worst:.5f} <= {bound:.5f} over all families, "
          f"xi in {{0.5,1,2,5,10}}, M = 2^16", elapsed, budget)
    assert ok


def test_criterion_4_gaussian_rate():
    t0 = time.time()
    budget = 60.0
    report = _experiment("gaussian", {"sigma2": 1.0}, trials=20)
    elapsed = time.time() - t0
    ok = 0.35 <= report.kappa_median <= 0.65 and elapsed < budget
    _emit(4, "gaussian rate", ok,
          f"median kappa {report.kappa_median:.3f} in [0.35, 0.65] (theory 0.5)",
          elapsed, budget)
    assert ok


def test_criterion_5_cauchy_rate():
    t0 = time.time()
    budget = 180.0
    report = _experiment("sas", {"alpha": 1.0}, trials=50)
    elapsed = time.time() - t0
    ok = 0.7 <= report.kappa_median <= 1.3 and elapsed < budget
    _emit(5, "cauchy rate", ok,
          f"median kappa {report.kappa_median:.3f} in [0.7, 1.3] (theory 1), 50 trials",
          elapsed, budget)
    assert ok


def test_criterion_6_superpolynomial_regime():
    t0 = time.time()
    budget = 120.0
    gauss = _experiment("gaussian", {"sigma2": 1.0}, trials=20)
    poisson = _experiment("compound_poisson", {"rate": 1.0}, trials=20)
    laplace = _experiment("laplace", {}, trials=20)
    g64 = gauss.median_sigma_at(64)
    checks = []
    for label, report in (("compound_poisson", poisson), ("laplace", laplace)):
        s64 = report.median_sigma_at(64)
        ratio = g64 / s64 if s64 > 0 else math.inf
        gap = report.kappa_median - gauss.kappa_median
        checks.append((f"{label} sigma64 ratio {ratio:.1f} >= 10", ratio >= 10.0))
        checks.append((f"{label} kappa gap {gap:.2f} >= 0.5", gap >= 0.5))
    elapsed = time.time() - t0
    ok = all(flag for _, flag in checks) and elapsed < budget
    detail = "; ".join(f"{msg} [{'ok' if flag else 'FAILED'}]" for msg, flag in checks)
    _emit(6, "superpolynomial regime", ok, detail, elapsed, budget)
    assert ok, detail


def test_criterion_7_family_ordering():
    t0 = time.time()
    budget = 300.0
    shared = dict(gamma=1.0, d=1, J=14, k=4, trials=20, base_seed=BASE_SEED)
    configs = [
        ExperimentConfig(family="gaussian", params={"sigma2": 1.0}, **shared),
        ExperimentConfig(family="sas", params={"alpha": 1.5}, **shared),
        ExperimentConfig(family="sas", params={"alpha": 1.0}, **shared),
        ExperimentConfig(family="inverse_gaussian",
                         params={"delta": 1.0, "ig_gamma": 1.0}, **shared),
        ExperimentConfig(family="compound_poisson", params={"rate": 1.0}, **shared),
    ]
    report = compare_families(configs)
    elapsed = time.time() - t0
    ordering = " < ".join(f"{e.label}:{e.kappa_median:.2f}" for e in report.entries)
    ok = report.ok and elapsed < budget
    _emit(7, "family ordering", ok,
          f"{ordering}; inversions: {report.inversions or 'none'}", elapsed, budget)
    assert ok


def test_criterion_8_noise_criticality():
    t0 = time.time()
    budget = 60.0
    taus = np.linspace(-1.0, 0.0, 21)
    spec = WaveletSpec(k=4)
    grid = GridSpec(d=1, J=12)
    rows = []
    for t in range(20):
        noise = generate_noise(Gaussian(1.0), grid, trial_seed(BASE_SEED, 1000 + t))
        coeffs = dwt_periodic(noise.values, spec)
        rows.append(empirical_regularity_scan(coeffs, [2.0], taus)[0])
    med = np.median(rows, axis=0)
    crossing = float(np.interp(0.0, med, taus))  # med increases with tau
    elapsed = time.time() - t0
    ok = abs(crossing - (-0.5)) <= 0.15 and elapsed < budget
    _emit(8, "noise criticality", ok,
          f"membership sign change at tau = {crossing:.3f} (expected -0.5 +- 0.15)",
          elapsed, budget)
    assert ok


def test_criterion_9_spectral_slope():
    t0 = time.time()
    budget = 60.0
    grid = GridSpec(d=1, J=11)
    results = []
    ok = True
    for gamma in (0.75, 1.0, 1.5):
        symbol = FractionalLaplacian(gamma)
        power = np.zeros(grid.n)
        trials = 50
        for t in range(trials):
            field = synthesize_process(Gaussian(1.0), grid, symbol, trial_seed(BASE_SEED, t))
            power += np.abs(forward_fft(field, grid).coeffs) ** 2
        power /= trials
        m = np.arange(1, grid.n // 2)
        sel = (m >= 2) & (m <= grid.n // 8)
        slope = float(
            np.polyfit(np.log(m[sel].astype(float)), np.log(power[1 : grid.n // 2][sel]), 1)[0]
        )
        results.append(f"gamma={gamma}: slope {slope:.3f} (target {-2 * gamma})")
        ok = ok and abs(slope - (-2.0 * gamma)) <= 0.2
    elapsed = time.time() - t0
    ok = ok and elapsed < budget
    _emit(9, "spectral slope", ok, "; ".join(results), elapsed, budget)
    assert ok
