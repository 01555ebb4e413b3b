import math

import numpy as np
import pytest

from levywave import (
    WaveletCoeffs,
    WaveletSpec,
    coeff_iter,
    daubechies_lowpass,
    dwt_periodic,
    export_coeffs_csv,
    idwt_periodic,
    make_rng,
    quadrature_mirror_highpass,
)

DB4_PUBLISHED = np.array([
    0.230377813308896, 0.714846570552915, 0.630880767929859, -0.027983769416859,
    -0.187034811719093, 0.030841381835560, 0.032883011666885, -0.010597401785069,
])


def test_haar_filter():
    np.testing.assert_allclose(daubechies_lowpass(1), [1 / math.sqrt(2)] * 2, atol=1e-15)


def test_db2_closed_form():
    s3 = math.sqrt(3.0)
    s2 = 4.0 * math.sqrt(2.0)
    expected = np.array([(1 + s3) / s2, (3 + s3) / s2, (3 - s3) / s2, (1 - s3) / s2])
    np.testing.assert_allclose(daubechies_lowpass(2), expected, atol=1e-14)


def test_db4_published_values():
    np.testing.assert_allclose(daubechies_lowpass(4), DB4_PUBLISHED, atol=1e-12)


@pytest.mark.parametrize("k", range(1, 9))
def test_quadrature_mirror_identities(k):
    h = daubechies_lowpass(k)
    g = quadrature_mirror_highpass(h)
    assert h.size == 2 * k
    assert abs(h.sum() - math.sqrt(2.0)) < 1e-12
    assert abs(g.sum()) < 1e-12
    assert abs(np.dot(h, h) - 1.0) < 1e-12
    assert abs(np.dot(g, g) - 1.0) < 1e-12
    for t in range(1, k):
        assert abs(np.dot(h[: -2 * t], h[2 * t :])) < 1e-12
        assert abs(np.dot(g[: -2 * t], g[2 * t :])) < 1e-12
    for t in range(-k + 1, k):
        lo = max(0, 2 * t)
        hi = min(2 * k, 2 * k + 2 * t)
        assert abs(sum(h[i] * g[i - 2 * t] for i in range(lo, hi))) < 1e-12


@pytest.mark.parametrize("k,zeta", [(1, 0), (2, 2), (3, 3), (4, 3), (5, 4), (8, 4)])
def test_base_shift(k, zeta):
    spec = WaveletSpec(k=k)
    assert spec.zeta == zeta
    assert 2**zeta >= 2 * k - 1
    assert zeta == 0 or 2 ** (zeta - 1) < 2 * k - 1


@pytest.mark.parametrize("k", [1, 2, 4])
@pytest.mark.parametrize("d,J", [(1, 8), (2, 6)])
def test_perfect_reconstruction(k, d, J):
    spec = WaveletSpec(k=k)
    rng = make_rng(17 * k + d + J)
    x = rng.normal(size=(2**J,) * d)
    coeffs = dwt_periodic(x, spec)
    back = idwt_periodic(coeffs, spec)
    assert np.abs(back - x).max() <= 1e-10 * np.abs(x).max()


@pytest.mark.parametrize("k", [1, 2, 4])
@pytest.mark.parametrize("d,J", [(1, 8), (2, 5)])
def test_parseval(k, d, J):
    # stored values relate to orthonormal-basis coefficients by 2^((j+zeta)d/2)
    spec = WaveletSpec(k=k)
    rng = make_rng(23 * k + d)
    x = rng.normal(size=(2**J,) * d)
    x -= x.mean()
    coeffs = dwt_periodic(x, spec)
    energy = sum(
        float(np.sum((arr / 2.0 ** ((j + coeffs.zeta) * d / 2.0)) ** 2))
        for j, bands in coeffs.levels.items()
        for arr in bands.values()
    )
    target = float(np.sum(x**2)) * 2.0 ** (-J * d)
    assert abs(energy - target) <= 1e-10 * target


def test_zero_field_gives_zero_coefficients():
    coeffs = dwt_periodic(np.zeros(64), WaveletSpec(k=2))
    assert all(
        np.abs(arr).max() == 0.0 for bands in coeffs.levels.values() for arr in bands.values()
    )


@pytest.mark.parametrize("d", [1, 2])
def test_unit_coefficient_is_orthonormal_basis_function(d):
    # synthesizing lambda = 1 gives 2^(-(j+zeta)d/2) Psi; analysis recovers it
    spec = WaveletSpec(k=4)
    J = 8 if d == 1 else 6
    base = dwt_periodic(np.zeros((2**J,) * d), spec)
    j, gender = 2, 1
    index = (3,) * d
    base.levels[j][gender][index] = 1.0
    f = idwt_periodic(base, spec)
    norm = math.sqrt(float(np.sum(f**2)) * 2.0 ** (-J * d))
    assert norm * 2.0 ** ((j + spec.zeta) * d / 2.0) == pytest.approx(1.0, abs=1e-10)
    again = dwt_periodic(f, spec)
    for lvl, bands in again.levels.items():
        for gen, arr in bands.items():
            expected = np.zeros_like(arr)
            if (lvl, gen) == (j, gender):
                expected[index] = 1.0
            assert np.abs(arr - expected).max() <= 1e-10


def test_coarse_scaling_coefficient_unit_norm():
    spec = WaveletSpec(k=2)
    base = dwt_periodic(np.zeros(128), spec)
    j0 = base.j_coarse
    base.levels[j0][0][0] = 1.0
    f = idwt_periodic(base, spec)
    norm = math.sqrt(float(np.sum(f**2)) / 128.0)
    assert norm * 2.0 ** ((j0 + spec.zeta) / 2.0) == pytest.approx(1.0, abs=1e-10)


def test_idwt_linearity():
    spec = WaveletSpec(k=2)
    rng = make_rng(31)
    c1 = dwt_periodic(rng.normal(size=64), spec)
    c2 = dwt_periodic(rng.normal(size=64), spec)
    combo = WaveletCoeffs(
        d=1,
        zeta=c1.zeta,
        j_coarse=c1.j_coarse,
        levels={
            j: {g: 2.5 * c1.levels[j][g] + c2.levels[j][g] for g in c1.levels[j]}
            for j in c1.levels
        },
    )
    lhs = idwt_periodic(combo, spec)
    rhs = 2.5 * idwt_periodic(c1, spec) + idwt_periodic(c2, spec)
    assert np.abs(lhs - rhs).max() <= 1e-12 * max(1.0, np.abs(rhs).max())


def test_full_decomposition_counts_1d():
    # Haar on 8 samples: 1+1 at the coarsest level, then 2 and 4 details
    coeffs = dwt_periodic(np.arange(8.0), WaveletSpec(k=1))
    assert coeffs.total_count() == 8
    layout = {j: {g: arr.size for g, arr in bands.items()} for j, bands in coeffs.levels.items()}
    assert layout == {0: {0: 1, 1: 1}, 1: {1: 2}, 2: {1: 4}}


def test_single_level_counts_2d():
    coeffs = dwt_periodic(np.arange(16.0).reshape(4, 4), WaveletSpec(k=1), levels=1)
    sizes = {g: arr.size for g, arr in coeffs.levels[coeffs.j_coarse].items()}
    assert sizes == {0: 4, 1: 4, 2: 4, 3: 4}
    scaling = sum(arr.size for g, arr in coeffs.levels[coeffs.j_coarse].items() if g == 0)
    detail = coeffs.total_count() - scaling
    assert (scaling, detail) == (4, 12)


def test_gender_cardinalities_2d():
    coeffs = dwt_periodic(make_rng(5).normal(size=(64, 64)), WaveletSpec(k=2))
    for j in sorted(coeffs.levels):
        bands = coeffs.levels[j]
        if j == coeffs.j_coarse:
            assert sorted(bands) == [0, 1, 2, 3]
        else:
            assert sorted(bands) == [1, 2, 3]
        for arr in bands.values():
            assert arr.shape == (2 ** (j + coeffs.zeta),) * 2


def test_coeff_iter_order_and_stability():
    coeffs = dwt_periodic(make_rng(6).normal(size=32), WaveletSpec(k=1))
    stream1 = list(coeff_iter(coeffs))
    stream2 = list(coeff_iter(coeffs))
    assert stream1 == stream2
    assert len(stream1) == 32
    keys = [(j, g, m) for j, g, m, _ in stream1]
    assert keys == sorted(keys)


def test_dwt_input_validation():
    spec = WaveletSpec(k=4)
    with pytest.raises(ValueError, match="power of two"):
        dwt_periodic(np.zeros(24), spec)
    with pytest.raises(ValueError, match="square"):
        dwt_periodic(np.zeros((8, 16)), spec)
    with pytest.raises(ValueError, match="too coarse"):
        dwt_periodic(np.zeros(8), spec)  # needs J >= zeta + 1 = 4
    with pytest.raises(ValueError, match="levels"):
        dwt_periodic(np.zeros(64), WaveletSpec(k=1), levels=7)


def test_idwt_shape_mismatch_rejected():
    spec = WaveletSpec(k=1)
    coeffs = dwt_periodic(np.arange(16.0), spec)
    coeffs.levels[2][1] = coeffs.levels[2][1][:2]
    with pytest.raises(ValueError, match="shape"):
        idwt_periodic(coeffs, spec)


@pytest.mark.parametrize("k", [2, 4])
def test_vanishing_moments_on_polynomial_samples(k):
    # degree < k polynomial samples produce zero details away from wrap-around
    spec = WaveletSpec(k=k)
    n = 4096
    t = np.arange(n) / n
    coeffs_poly = np.arange(1, k + 1, dtype=float)
    x = sum(c * t**q for q, c in enumerate(coeffs_poly))
    coeffs = dwt_periodic(x, spec)
    taps = 2 * k
    clean = n  # clean prefix length of the current scaling band
    scale_ref = max(
        np.abs(arr).max() for bands in coeffs.levels.values() for arr in bands.values()
    )
    checked = 0
    for j in sorted(coeffs.levels, reverse=True):  # fine to coarse order of creation
        if j == coeffs.j_coarse:
            break
        n_clean_out = (clean - taps) // 2 + 1
        if n_clean_out >= 1:
            detail = coeffs.levels[j][1][:n_clean_out]
            assert np.abs(detail).max() <= 1e-8 * max(1.0, scale_ref)
            checked += 1
        clean = n_clean_out
    assert checked >= 4


def test_export_csv(tmp_path):
    coeffs = dwt_periodic(np.arange(16.0), WaveletSpec(k=1))
    path = tmp_path / "coeffs.csv"
    export_coeffs_csv(coeffs, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "j,genderIndex,mFlat,lambda"
    assert len(lines) == 1 + 16
    j, gender, m_flat, _ = lines[1].split(",")
    assert (j, gender, m_flat) == ("0", "0", "0")
