"""Periodized Daubechies wavelet analysis and synthesis on the d-torus.

Coefficients are indexed by (level j, gender G, shift m).  At the coarsest
level of a full decomposition there are 2^d genders per shift (the pure
scaling combination included); every finer level has 2^d - 1 detail
genders.  A gender is stored as a bitmask: bit r set means high-pass along
axis r.  Level j holds 2^(j + zeta) shifts per axis, where the base shift
zeta is the smallest integer with 2^zeta >= 2k - 1, so that the coarsest
basis functions fit inside the unit cube.

Stored coefficient values carry the normalization
lambda = 2^((j + zeta) d / 2) * <f, Psi>, with <f, Psi> the coefficient
against the L2-normalized basis function.  Grid samples are identified
with fine-scale scaling coefficients (standard pyramid initialization).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "daubechies_lowpass",
    "quadrature_mirror_highpass",
    "WaveletSpec",
    "WaveletCoeffs",
    "dwt_periodic",
    "idwt_periodic",
    "coeff_iter",
    "export_coeffs_csv",
]


@lru_cache(maxsize=None)
def _lowpass_cached(k: int) -> tuple:
    if k == 1:
        c = 1.0 / math.sqrt(2.0)
        return (c, c)
    # autocorrelation polynomial P(y) = sum_{j<k} C(k-1+j, j) y^j
    pcoef = [math.comb(k - 1 + j, j) for j in range(k)]
    yroots = np.roots(pcoef[::-1])
    zroots = []
    for y in yroots:
        # y = (2 - z - 1/z)/4  <=>  z^2 + (4y - 2) z + 1 = 0
        b = 4.0 * y - 2.0
        disc = np.sqrt(b * b - 4.0 + 0j)
        r1 = 0.5 * (-b + disc)
        r2 = 0.5 * (-b - disc)
        zroots.append(r1 if abs(r1) <= 1.0 else r2)
    poly = np.array([1.0 + 0j])
    for z in zroots:
        poly = np.convolve(poly, [-z, 1.0])
    for _ in range(k):
        poly = np.convolve(poly, [0.5, 0.5])
    h = poly.real
    h = h * (math.sqrt(2.0) / h.sum())
    if abs(h[0]) < abs(h[-1]):  # canonical front-loaded orientation
        h = h[::-1]
    return tuple(float(v) for v in h)


def daubechies_lowpass(k: int) -> np.ndarray:
    """Length-2k orthonormal low-pass filter with k vanishing moments."""
    if not (isinstance(k, int) and k >= 1):
        raise ValueError(f"vanishing-moment count must be a positive integer, got {k}")
    return np.array(_lowpass_cached(k))


def quadrature_mirror_highpass(h: np.ndarray) -> np.ndarray:
    """High-pass mate g[n] = (-1)^n h[L-1-n]."""
    h = np.asarray(h, dtype=float)
    signs = (-1.0) ** np.arange(h.size)
    return signs * h[::-1]


@dataclass(frozen=True)
class WaveletSpec:
    """Daubechies-k analysis parameters."""

    k: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and self.k >= 1):
            raise ValueError(f"k must be a positive integer, got {self.k}")

    @property
    def zeta(self) -> int:
        """Smallest integer with 2^zeta >= 2k - 1 (support fits the unit cube)."""
        z = 0
        while (1 << z) < 2 * self.k - 1:
            z += 1
        return z

    @property
    def lowpass(self) -> np.ndarray:
        return daubechies_lowpass(self.k)

    @property
    def highpass(self) -> np.ndarray:
        return quadrature_mirror_highpass(self.lowpass)

    def max_level(self, J: int) -> int:
        """Finest coefficient level available on a 2^J-per-axis grid."""
        return J - self.zeta - 1


@dataclass
class WaveletCoeffs:
    """Coefficient pyramid: levels[j][gender] -> shift array of shape (2^(j+zeta),)^d."""

    d: int
    zeta: int
    j_coarse: int
    levels: dict

    @property
    def j_max(self) -> int:
        return max(self.levels)

    @property
    def depth(self) -> int:
        return self.j_max - self.j_coarse + 1

    def total_count(self) -> int:
        return sum(arr.size for bands in self.levels.values() for arr in bands.values())

    def genders(self, j: int):
        return sorted(self.levels[j])

    def scaled(self, a: float) -> "WaveletCoeffs":
        levels = {
            j: {g: a * arr for g, arr in bands.items()}
            for j, bands in self.levels.items()
        }
        return WaveletCoeffs(d=self.d, zeta=self.zeta, j_coarse=self.j_coarse, levels=levels)

    @classmethod
    def zeros(cls, d: int, zeta: int, j_coarse: int, j_max: int) -> "WaveletCoeffs":
        """Empty pyramid with the standard gender layout, for building test inputs."""
        levels = {}
        for j in range(j_coarse, j_max + 1):
            shape = (1 << (j + zeta),) * d
            bands = {g: np.zeros(shape) for g in range(1, 1 << d)}
            if j == j_coarse:
                bands[0] = np.zeros(shape)
            levels[j] = bands
        return cls(d=d, zeta=zeta, j_coarse=j_coarse, levels=levels)


def coeff_iter(coeffs: WaveletCoeffs):
    """Yield (j, gender, shift tuple, value) in the canonical deterministic order.

    Levels ascend, then genders ascend, then shifts in lexicographic order.
    """
    for j in sorted(coeffs.levels):
        bands = coeffs.levels[j]
        for g in sorted(bands):
            arr = bands[g]
            for m in np.ndindex(arr.shape):
                yield j, g, m, float(arr[m])


# ---------------------------------------------------------------------------
# single-axis periodic filter-bank steps


def _analyze_axis(x: np.ndarray, h: np.ndarray, g: np.ndarray, axis: int):
    x = np.moveaxis(x, axis, 0)
    n = x.shape[0]
    taps = h.size
    idx = (2 * np.arange(n // 2)[:, None] + np.arange(taps)[None, :]) % n
    win = x[idx]  # (n//2, taps, ...)
    lo = np.tensordot(win, h, axes=(1, 0))
    hi = np.tensordot(win, g, axes=(1, 0))
    return np.moveaxis(lo, 0, axis), np.moveaxis(hi, 0, axis)


def _synthesize_axis(lo: np.ndarray, hi: np.ndarray, h: np.ndarray, g: np.ndarray, axis: int):
    lo = np.moveaxis(lo, axis, 0)
    hi = np.moveaxis(hi, axis, 0)
    n = 2 * lo.shape[0]
    up_lo = np.zeros((n,) + lo.shape[1:])
    up_hi = np.zeros_like(up_lo)
    up_lo[::2] = lo
    up_hi[::2] = hi
    out = np.zeros_like(up_lo)
    for t in range(h.size):
        out += h[t] * np.roll(up_lo, t, axis=0)
        out += g[t] * np.roll(up_hi, t, axis=0)
    return np.moveaxis(out, 0, axis)


def _analyze_step(c: np.ndarray, h: np.ndarray, g: np.ndarray) -> dict:
    parts = {0: c}
    for axis in range(c.ndim):
        grown = {}
        for mask, arr in parts.items():
            lo, hi = _analyze_axis(arr, h, g, axis)
            grown[mask] = lo
            grown[mask | (1 << axis)] = hi
        parts = grown
    return parts


def _synthesize_step(parts: dict, h: np.ndarray, g: np.ndarray, d: int) -> np.ndarray:
    current = dict(parts)
    for axis in reversed(range(d)):
        bit = 1 << axis
        merged = {}
        for mask in current:
            if mask & bit:
                continue
            merged[mask] = _synthesize_axis(current[mask], current[mask | bit], h, g, axis)
        current = merged
    return current[0]


# ---------------------------------------------------------------------------
# multilevel transforms


def _lambda_scale(j: int, zeta: int, d: int) -> float:
    return 2.0 ** ((j + zeta) * d / 2.0)


def dwt_periodic(values, spec: WaveletSpec, levels: int | None = None) -> WaveletCoeffs:
    """Orthonormal periodic analysis of a square dyadic grid.

    Args:
        values: real grid samples, shape (2^J,) or (2^J, 2^J).
        spec: filter family.
        levels: number of splitting steps; defaults to the maximum
            J - zeta, which decomposes down to level 0.
    """
    x = np.asarray(values, dtype=float)
    d = x.ndim
    if d not in (1, 2):
        raise ValueError(f"only 1-d and 2-d grids are supported, got ndim={d}")
    n = x.shape[0]
    if any(s != n for s in x.shape):
        raise ValueError(f"grid must be square, got shape {x.shape}")
    J = n.bit_length() - 1
    if (1 << J) != n:
        raise ValueError(f"grid length must be a power of two, got {n}")
    zeta = spec.zeta
    max_steps = J - zeta
    if max_steps < 1:
        raise ValueError(f"grid level {J} too coarse for k={spec.k}: needs J >= {zeta + 1}")
    steps = max_steps if levels is None else int(levels)
    if not 1 <= steps <= max_steps:
        raise ValueError(f"levels must lie in [1, {max_steps}], got {levels}")

    h = spec.lowpass
    g = spec.highpass
    c = x * 2.0 ** (-J * d / 2.0)  # samples -> fine scaling coefficients
    pyramid = {}
    length = n
    for _ in range(steps):
        parts = _analyze_step(c, h, g)
        length //= 2
        j = int(math.log2(length)) - zeta
        pyramid[j] = {mask: parts[mask] for mask in range(1, 1 << d)}
        c = parts[0]
    j_coarse = int(math.log2(length)) - zeta
    pyramid[j_coarse][0] = c

    for j, bands in pyramid.items():
        factor = _lambda_scale(j, zeta, d)
        for mask in bands:
            bands[mask] = bands[mask] * factor
    return WaveletCoeffs(d=d, zeta=zeta, j_coarse=j_coarse, levels=pyramid)


def idwt_periodic(coeffs: WaveletCoeffs, spec: WaveletSpec) -> np.ndarray:
    """Exact inverse of dwt_periodic."""
    if spec.zeta != coeffs.zeta:
        raise ValueError(
            f"filter base shift {spec.zeta} does not match coefficients ({coeffs.zeta})"
        )
    d = coeffs.d
    js = sorted(coeffs.levels)
    if js[0] != coeffs.j_coarse or 0 not in coeffs.levels[js[0]]:
        raise ValueError("coefficient pyramid is missing its coarse scaling band")
    h = spec.lowpass
    g = spec.highpass

    c = coeffs.levels[js[0]][0] / _lambda_scale(js[0], coeffs.zeta, d)
    for j in js:
        factor = _lambda_scale(j, coeffs.zeta, d)
        parts = {}
        for mask in range(1, 1 << d):
            if mask not in coeffs.levels[j]:
                raise ValueError(f"level {j} is missing gender {mask}")
            band = coeffs.levels[j][mask] / factor
            if band.shape != c.shape:
                raise ValueError(
                    f"level {j} gender {mask} has shape {band.shape}, expected {c.shape}"
                )
            parts[mask] = band
        parts[0] = c
        c = _synthesize_step(parts, h, g, d)
    J = int(math.log2(c.shape[0]))
    return c * 2.0 ** (J * d / 2.0)


def export_coeffs_csv(coeffs: WaveletCoeffs, path) -> None:
    """Debug and golden-test dump with columns (j, genderIndex, mFlat, lambda)."""
    with open(path, "w") as fh:
        fh.write("j,genderIndex,mFlat,lambda\n")
        for j in sorted(coeffs.levels):
            bands = coeffs.levels[j]
            for gender in sorted(bands):
                flat = bands[gender].ravel()
                for m_flat, value in enumerate(flat):
                    fh.write(f"{j},{gender},{m_flat},{value!r}\n")
