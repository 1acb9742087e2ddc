"""FWHM linewidth of the single-peaked spectrum and pump sweeps.

The linewidth is defined only while the spectrum has a single peak
(N >= N_c, equivalently r <= 1):

    dw   = (2*kappa + gamma_perp)/sqrt(2) * sqrt(r - 1 + sqrt(r**2 + (r-1)**2))
    r    = (N_th - N)/(N_th - N_c) = 8*g2*(N_th - N)/(2*kappa + gamma_perp)**2

For r << 1 this reduces to dw ~ (2*kappa + gamma_perp)*r/2, which equals
(2*kappa*gamma_perp/(2*kappa + gamma_perp))**2 * N_e/(2*kappa*<n>*N_th), an
inverse-output-power law of reduced Schawlow-Townes form.  Both algebraic
routes are implemented and must agree identically; note the well-known
missing factor 1/2 relative to standard above-threshold results, which this
below-threshold model does not contain (population fluctuations are frozen),
so the asymptote is flagged as trustworthy only for r < 0.01.

In the split regime no FWHM is reported at all (SplitSpectrum): the width of
one of two overlapping peaks is not a linewidth.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SplitSpectrum
from .params import SystemParams
from .regimes import critical_inversions
from .steadystate import SteadyState, solve_steady_state

ASYMPTOTE_VALID_R = 0.01

# Default pump window for linewidth/photon-number sweeps: zero pump plus a
# log-spaced ramp.  The 2.7 upper edge spans the threshold region of the
# reference laser device (photon number crosses 1 near P ~ 2.6) while
# keeping the LED contrast qualitative; see README for the rationale.
DEFAULT_PUMP_MAX = 2.7
DEFAULT_PUMP_MIN = 1e-3
DEFAULT_PUMP_POINTS = 121


@dataclass(frozen=True)
class LinewidthPoint:
    """One pump point of a sweep.  fwhm is None in the split regime
    (split=True); out_power is None unless the photon energy is set."""

    pump: float
    inversion: float
    photons: float
    r: float
    fwhm: float | None
    fwhm_asymptotic: float
    out_flux: float
    out_power: float | None
    split: bool
    asymptote_valid: bool


def width_ratio(params: SystemParams, inversion: float) -> float:
    """r = (N_th - N)/(N_th - N_c); decreases toward 0 at threshold, equals
    1 exactly at the two-peak boundary N = N_c."""
    inv = critical_inversions(params)
    return (inv.n_th - inversion) / (inv.n_th - inv.n_c)


def linewidth(params: SystemParams, state: SteadyState) -> float:
    """Closed-form FWHM of the single-peaked spectrum."""
    r = width_ratio(params, state.inversion)
    if r > 1.0:
        raise SplitSpectrum(
            f"spectrum is double-peaked (r = {r}); report the splitting instead"
        )
    total = 2.0 * params.kappa + params.gamma_perp
    return total / np.sqrt(2.0) * float(np.sqrt(r - 1.0 + np.sqrt(r**2 + (r - 1.0) ** 2)))


def linewidth_asymptotic(params: SystemParams, state: SteadyState) -> float:
    """Small-r linewidth asymptote (2*kappa + gamma_perp)*r/2."""
    r = width_ratio(params, state.inversion)
    return 0.5 * (2.0 * params.kappa + params.gamma_perp) * r


def linewidth_asymptotic_from_flux(params: SystemParams, state: SteadyState) -> float:
    """The same asymptote written against the output flux,
    (2*kappa*gamma_perp/(2*kappa + gamma_perp))**2 * N_e/(2*kappa*<n>*N_th);
    algebraically identical to linewidth_asymptotic."""
    total = 2.0 * params.kappa + params.gamma_perp
    n_th = critical_inversions(params).n_th
    flux = 2.0 * params.kappa * state.photons
    return (2.0 * params.kappa * params.gamma_perp / total) ** 2 * state.n_excited / (flux * n_th)


def point(params: SystemParams, state: SteadyState) -> LinewidthPoint:
    r = width_ratio(params, state.inversion)
    split = r > 1.0
    flux = 2.0 * params.kappa * state.photons
    return LinewidthPoint(
        pump=state.pump,
        inversion=state.inversion,
        photons=state.photons,
        r=r,
        fwhm=None if split else linewidth(params, state),
        fwhm_asymptotic=linewidth_asymptotic(params, state),
        out_flux=flux,
        out_power=None if params.photon_energy is None else params.photon_energy * flux,
        split=split,
        asymptote_valid=r < ASYMPTOTE_VALID_R,
    )


def default_pump_grid(
    p_max: float = DEFAULT_PUMP_MAX,
    p_min: float = DEFAULT_PUMP_MIN,
    n: int = DEFAULT_PUMP_POINTS,
) -> np.ndarray:
    return np.concatenate([[0.0], np.geomspace(p_min, p_max, n - 1)])


def pump_sweep(params: SystemParams, pump_grid=None) -> list[LinewidthPoint]:
    """Linewidth and photon number along a pump grid (default grid when
    none is given); split-regime points carry fwhm=None."""
    grid = default_pump_grid() if pump_grid is None else np.asarray(pump_grid, dtype=float)
    return [point(params, solve_steady_state(params, p)) for p in grid]
