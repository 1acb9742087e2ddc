"""Characteristic inversions, critical pumps, operating regions, and the
phase-diagram / coherence-map data behind them.

Region labels:
    (i)   LED: threshold inversion exceeds the emitter number, lasing
          impossible at any pump.
    (ii)  weak-coupling laser: lasing reachable but spectrum never split.
    (iii) split spectrum: collective strong coupling, pump below the
          critical pump where the two peaks merge.
    (iv)  lasing: stimulated emission dominates spontaneous.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .params import SystemParams, validate_pump
from .spectrum import max_splitting
from .steadystate import (
    coherence_floor,
    photon_number,
    pump_for_inversion,
    solve_steady_state,
    threshold_inversion,
)

REGION_LED = "LED(i)"
REGION_WEAK = "weak-coupling-laser(ii)"
REGION_SPLIT = "split-spectrum(iii)"
REGION_LASING = "lasing(iv)"


class CriticalInversions(NamedTuple):
    """n_c_from_threshold re-expresses n_c through n_th as a self-check;
    it equals n_c identically."""

    n_th: float
    n_c: float
    n_e_split: float
    n_c_from_threshold: float


@dataclass(frozen=True)
class RegimeReport:
    n_th: float
    n_c: float
    n_e_split: float
    p_c: float | None
    p_e: float | None
    p_st: float | None
    cond_spectral_split: bool
    cond_eigenmode_split: bool
    region: str


def worker_count() -> int:
    """Parallelism cap for grid sweeps, from RABISPLIT_THREADS (default 1)."""
    try:
        n = int(os.environ.get("RABISPLIT_THREADS", "1"))
    except ValueError:
        return 1
    return max(1, n)


def _map(fn, items):
    n = worker_count()
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def critical_inversions(params: SystemParams) -> CriticalInversions:
    """N_th = kappa*gamma_perp/(2*g2); the spectrum splits below
    N_c = -(4*kappa**2 + gamma_perp**2)/(8*g2) and the eigenmodes split
    below N_E = -(2*kappa - gamma_perp)**2/(16*g2)."""
    n_th = threshold_inversion(params)
    n_c = -(4.0 * params.kappa**2 + params.gamma_perp**2) / (8.0 * params.g2)
    n_e = -((2.0 * params.kappa - params.gamma_perp) ** 2) / (16.0 * params.g2)
    x = 2.0 * params.kappa / params.gamma_perp
    n_c_alt = -0.5 * (x + 1.0 / x) * n_th
    return CriticalInversions(n_th, n_c, n_e, n_c_alt)


def split_conditions(params: SystemParams) -> tuple[bool, bool]:
    """Low-pump (N = -N0) split predicates: spectral two-peak condition
    8*g2*N0 > 4*kappa**2 + gamma_perp**2, and eigenmode-splitting condition
    g*sqrt(N0) > |2*kappa - gamma_perp|/4.  The first implies the second."""
    n0 = float(params.n_emitters)
    spectral = 8.0 * params.g2 * n0 > 4.0 * params.kappa**2 + params.gamma_perp**2
    eigen = np.sqrt(params.g2 * n0) > abs(2.0 * params.kappa - params.gamma_perp) / 4.0
    return bool(spectral), bool(eigen)


def stimulated_equals_spontaneous_pump(params: SystemParams) -> float | None:
    """Pump P_St where the mean photon number crosses 1 (the standard
    stimulated-equals-spontaneous criterion), by bisection on the monotone
    <n>(P).  None when <n> stays below 1 at every pump (saturating LED)."""
    n0 = float(params.n_emitters)
    n_th = threshold_inversion(params)
    if n_th >= n0:
        # photon number saturates; crossing exists only if the saturation
        # value exceeds 1
        sup = photon_number(params, n0 * (1.0 - 1e-12))
        if sup <= 1.0:
            return None
    lo, hi = 0.0, 1.0
    for _ in range(200):
        if solve_steady_state(params, hi).photons > 1.0:
            break
        lo, hi = hi, hi * 2.0
    else:
        return None
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if solve_steady_state(params, mid).photons <= 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def critical_pumps(params: SystemParams):
    """(P_c, P_E, P_St); P_c / P_E are absent when the corresponding
    critical inversion lies below -N0 (never reached at any pump)."""
    n0 = float(params.n_emitters)
    inv = critical_inversions(params)
    p_c = pump_for_inversion(params, inv.n_c) if inv.n_c > -n0 else None
    p_e = pump_for_inversion(params, inv.n_e_split) if inv.n_e_split > -n0 else None
    p_st = stimulated_equals_spontaneous_pump(params)
    return p_c, p_e, p_st


def classify(params: SystemParams, pump: float) -> str:
    """Region label at one pump; boundaries go to the lower-numbered region."""
    validate_pump(pump)
    if threshold_inversion(params) >= float(params.n_emitters):
        return REGION_LED
    p_c, _, p_st = critical_pumps(params)
    if p_c is not None and pump < p_c:
        return REGION_SPLIT
    if p_st is not None and pump > p_st:
        return REGION_LASING
    return REGION_WEAK


def report(params: SystemParams, pump: float) -> RegimeReport:
    inv = critical_inversions(params)
    p_c, p_e, p_st = critical_pumps(params)
    spectral, eigen = split_conditions(params)
    return RegimeReport(
        n_th=inv.n_th, n_c=inv.n_c, n_e_split=inv.n_e_split,
        p_c=p_c, p_e=p_e, p_st=p_st,
        cond_spectral_split=spectral, cond_eigenmode_split=eigen,
        region=classify(params, pump),
    )


@dataclass(frozen=True)
class PhaseDiagram:
    """P_St / P_c / P_E curves over a coupling-strength grid, plus the
    vertical LED boundary g2 = kappa*gamma_perp/(2*N0) where N_th = N0.
    Absent values are NaN."""

    g2: np.ndarray
    p_st: np.ndarray
    p_c: np.ndarray
    p_e: np.ndarray
    g2_vertical: float


def phase_diagram(params: SystemParams, g2_values) -> PhaseDiagram:
    """Critical pumps as functions of g2 at fixed rates and emitter count
    (params.g2 is ignored)."""
    g2_values = np.asarray(g2_values, dtype=float)

    def one(g2: float):
        p = critical_pumps(replace(params, g2=g2))
        return [np.nan if v is None else v for v in p]

    rows = np.array(_map(one, g2_values.tolist()))
    vertical = params.kappa * params.gamma_perp / (2.0 * float(params.n_emitters))
    return PhaseDiagram(
        g2=g2_values, p_st=rows[:, 2], p_c=rows[:, 0], p_e=rows[:, 1],
        g2_vertical=vertical,
    )


@dataclass(frozen=True)
class CoherenceMap:
    """|C0| and maximal splitting over the (2*kappa, gamma_perp) plane.

    Both contours of constant maximal splitting are exact circles in these
    coordinates: (2*kappa)**2 + gamma_perp**2 = 8*g2*N0 - 2*Omega**2, so
    they are emitted as analytic polylines rather than traced from the grid.
    """

    two_kappa: np.ndarray
    gamma_perp: np.ndarray
    abs_c0: np.ndarray      # shape (len(gamma_perp), len(two_kappa))
    omega_max: np.ndarray   # same shape
    contour_zero: np.ndarray  # (n, 2) polyline [two_kappa, gamma_perp]
    contour_ref: np.ndarray | None
    omega_ref: float | None
    reference_point: tuple[float, float] | None


def _iso_splitting_circle(g2: float, n0: float, omega: float, n_points: int = 721):
    radius_sq = 8.0 * g2 * n0 - 2.0 * omega**2
    if radius_sq <= 0.0:
        return None
    radius = np.sqrt(radius_sq)
    theta = np.linspace(0.0, np.pi / 2.0, n_points)[1:-1]
    return np.column_stack([radius * np.cos(theta), radius * np.sin(theta)])


def coherence_map(
    g2: float,
    n_emitters: int,
    two_kappa_values,
    gamma_perp_values,
    reference_point: tuple[float, float] | None = None,
) -> CoherenceMap:
    """Evaluate |C0| and Omega_max over a (2*kappa, gamma_perp) grid.

    reference_point, when given, marks a device whose maximal splitting
    defines the iso-splitting contour (alongside the zero-splitting one).
    """
    two_kappa_values = np.asarray(two_kappa_values, dtype=float)
    gamma_perp_values = np.asarray(gamma_perp_values, dtype=float)
    n0 = float(n_emitters)

    def one_row(gp: float):
        c0 = np.empty(two_kappa_values.size)
        om = np.empty(two_kappa_values.size)
        for j, tk in enumerate(two_kappa_values):
            p = SystemParams(g2=g2, kappa=0.5 * tk, gamma_perp=gp, n_emitters=n_emitters)
            c0[j] = abs(coherence_floor(p))
            om[j] = max_splitting(p)
        return c0, om

    rows = _map(one_row, gamma_perp_values.tolist())
    abs_c0 = np.vstack([r[0] for r in rows])
    omega_max = np.vstack([r[1] for r in rows])

    omega_ref = None
    contour_ref = None
    if reference_point is not None:
        tk_ref, gp_ref = reference_point
        ref_params = SystemParams(g2=g2, kappa=0.5 * tk_ref, gamma_perp=gp_ref, n_emitters=n_emitters)
        omega_ref = max_splitting(ref_params)
        contour_ref = _iso_splitting_circle(g2, n0, omega_ref)

    return CoherenceMap(
        two_kappa=two_kappa_values,
        gamma_perp=gamma_perp_values,
        abs_c0=abs_c0,
        omega_max=omega_max,
        contour_zero=_iso_splitting_circle(g2, n0, 0.0),
        contour_ref=contour_ref,
        omega_ref=omega_ref,
        reference_point=reference_point,
    )
