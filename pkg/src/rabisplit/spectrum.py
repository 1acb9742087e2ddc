"""Analytic emission spectrum, its complex roots, peaks and normalization.

Frequencies are offsets from the cavity resonance, in gamma_par units.  The
spectrum is evaluated in the numerically stable real form

    n_w = g2*gamma_perp*N_e / ((w**2 - c)**2 + b**2*w**2)

which is algebraically identical to the root-factorized form
g2*gamma_perp*N_e / ((w**2 - w_plus**2)*(w**2 - w_minus**2)) with

    w_pm = -i*(2*kappa + gamma_perp)/4 +- i*sqrt((2*kappa - gamma_perp)**2/16 + g2*N).

The identity and the dw/(2*pi) normalization (integral of n_w equals the
mean photon number) are enforced by the test suite.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import AboveThreshold
from .params import SystemParams
from .steadystate import (
    SteadyState,
    excited_population,
    threshold_margin,
)

GRID_POINTS = 2001


@dataclass(frozen=True)
class SpectrumAnalysis:
    """Sampled spectrum plus its closed-form structure.

    roots          (w_plus, w_minus), both with negative imaginary part below
                   threshold
    peak_positions one or two real frequencies maximizing n_w
    splitting      peak separation, 0 when single-peaked
    omega, n_omega sampled grid
    total_photons  integral of n_w over dw/(2*pi) by adaptive quadrature
    """

    roots: tuple[complex, complex]
    peak_positions: tuple[float, ...]
    splitting: float
    omega: np.ndarray
    n_omega: np.ndarray
    total_photons: float


def roots(params: SystemParams, inversion: float) -> tuple[complex, complex]:
    """Complex root pair of the spectral denominator, any real inversion.

    The square root uses the principal branch, so for strongly negative
    g2*N the pair is (-s - i*b/2, +s - i*b/2) with s real positive: the
    "+" branch carries the negative real part.  The pair is degenerate
    exactly where (2*kappa - gamma_perp)**2/16 + g2*N vanishes.
    """
    quarter_sum = 0.25 * (2.0 * params.kappa + params.gamma_perp)
    arg = (2.0 * params.kappa - params.gamma_perp) ** 2 / 16.0 + params.g2 * inversion
    branch = cmath.sqrt(complex(arg, 0.0))
    w_plus = -1j * quarter_sum + 1j * branch
    w_minus = -1j * quarter_sum - 1j * branch
    return w_plus, w_minus


def emission_spectrum(params: SystemParams, inversion: float, n_excited: float, omega):
    """Pointwise n_w on a scalar or array of frequencies (stable form)."""
    c = threshold_margin(params, inversion)
    if c <= 0.0:
        raise AboveThreshold("spectrum undefined at or above threshold")
    w2 = np.asarray(omega, dtype=float) ** 2
    num = params.g2 * params.gamma_perp * n_excited
    return num / ((w2 - c) ** 2 + params.decay_sum**2 * w2)


def peak_positions(params: SystemParams, inversion: float) -> tuple[float, ...]:
    """Frequencies maximizing n_w: +-sqrt(c - b**2/2) when c > b**2/2, else 0.

    Note the peaks sit strictly inside the root real parts Re(w_pm) whenever
    both exist; the two are distinct observables.
    """
    c = threshold_margin(params, inversion)
    if c <= 0.0:
        raise AboveThreshold("spectrum undefined at or above threshold")
    excess = c - 0.5 * params.decay_sum**2
    if excess > 0.0:
        x = float(np.sqrt(excess))
        return (-x, x)
    return (0.0,)


def splitting(params: SystemParams, inversion: float) -> float:
    """Peak separation; 0 for a single-peaked spectrum."""
    peaks = peak_positions(params, inversion)
    return peaks[-1] - peaks[0] if len(peaks) == 2 else 0.0


def max_splitting(params: SystemParams) -> float:
    """Largest achievable splitting, reached in the zero-pump limit N = -N0:
    2*sqrt(kappa*gamma_perp/2 + g2*N0 - (2*kappa + gamma_perp)**2/8), or 0
    when the argument is not positive (single-peaked at every pump)."""
    arg = threshold_margin(params, -float(params.n_emitters)) - 0.5 * params.decay_sum**2
    return 2.0 * float(np.sqrt(arg)) if arg > 0.0 else 0.0


def _width_scale(params: SystemParams, inversion: float) -> float:
    """Linewidth-like frequency scale of the spectrum, valid for any state.

    For single-peaked states this is the exact FWHM; for split states the
    same expression still yields a sound overall width scale.
    """
    c = threshold_margin(params, inversion)
    b = params.decay_sum
    r = 2.0 * c / b**2
    return 2.0 * b / np.sqrt(2.0) * np.sqrt(r - 1.0 + np.sqrt(r**2 + (r - 1.0) ** 2))


def default_grid(params: SystemParams, inversion: float) -> np.ndarray:
    """Symmetric grid resolving both split peaks and broad single peaks:
    half-width max(6 * width scale, 1.5 * max splitting), 2001 points."""
    half = max(6.0 * _width_scale(params, inversion), 1.5 * max_splitting(params))
    return np.linspace(-half, half, GRID_POINTS)


def total_photons(params: SystemParams, inversion: float, n_excited: float) -> float:
    """Adaptive quadrature of n_w over dw/(2*pi).

    The outer cutoff W is set from the w**-4 tail bound so the neglected
    remainder is below 1e-9 of the integral.
    """
    c = threshold_margin(params, inversion)
    if c <= 0.0:
        raise AboveThreshold("spectrum undefined at or above threshold")
    if n_excited == 0.0:
        return 0.0
    b = params.decay_sum
    peaks = peak_positions(params, inversion)
    scale = np.sqrt(c) + b + peaks[-1]
    w_inner = 10.0 * scale
    w_outer = max((8.0 * b * c * 1e9 / (3.0 * np.pi)) ** (1.0 / 3.0), 2.0 * np.sqrt(2.0 * c), w_inner)

    def f(w):
        return emission_spectrum(params, inversion, n_excited, w)

    pts = sorted({p for p in (0.5 * peaks[-1], peaks[-1], 2.0 * peaks[-1], np.sqrt(c)) if 0.0 < p < w_inner})
    inner, _ = quad(f, 0.0, w_inner, points=pts or None, limit=400, epsabs=0.0, epsrel=1e-11)
    outer, _ = quad(f, w_inner, w_outer, limit=400, epsabs=0.0, epsrel=1e-11)
    return 2.0 * (inner + outer) / (2.0 * np.pi)


def evaluate(params: SystemParams, state: SteadyState, grid=None) -> SpectrumAnalysis:
    """Full spectrum analysis for a steady state on a caller grid (or the
    default grid when none is given)."""
    inversion = state.inversion
    if threshold_margin(params, inversion) <= 0.0:
        raise AboveThreshold("spectrum undefined at or above threshold")
    omega = default_grid(params, inversion) if grid is None else np.asarray(grid, dtype=float)
    n_e = excited_population(params, inversion)
    return SpectrumAnalysis(
        roots=roots(params, inversion),
        peak_positions=peak_positions(params, inversion),
        splitting=splitting(params, inversion),
        omega=omega,
        n_omega=emission_spectrum(params, inversion, n_e, omega),
        total_photons=total_photons(params, inversion, n_e),
    )
