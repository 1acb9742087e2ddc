"""Self-consistent steady state of the pumped emitter-cavity system.

The linearized field/polarization equations (population inversion frozen at
its mean N) driven by white Langevin noise have the frequency-domain
denominator

    D(w) = (kappa - i*w) * (gamma_perp/2 - i*w) - g2*N
         = (c - w**2) - i*b*w,      b = kappa + gamma_perp/2,
                                    c = kappa*gamma_perp/2 - g2*N.

Only the polarization channel is noise-driven (vacuum field input carries no
normal-ordered noise), with diffusion strength gamma_perp*g2*N_e, so the
photon spectrum is g2*gamma_perp*N_e / |D(w)|**2.  Integrating over
dw/(2*pi) by residues gives the closed forms used here:

    <n>       = g2*gamma_perp*N_e / (2*b*c)
    <v+v>/f   = gamma_perp*N_e*(c + kappa**2) / (2*b*c)

both checked against adaptive quadrature of the spectra in the test suite.
The pump enters through the population balance
gamma_par*(P*N_g - N_e) = 2*kappa*<n> (the field equation forces the
emitter-field correlation flux to equal the cavity loss flux 2*kappa*<n> in
steady state), which inverts in closed form to P(N) and is solved for N(P)
by bisection.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AboveThreshold, ConvergenceFailure, DomainError
from .params import SystemParams, validate_pump

_MAX_BISECTIONS = 200


@dataclass(frozen=True)
class SteadyState:
    """Operating point at one pump value (all rates in gamma_par units).

    sigma holds the emitter-field correlation as the energy-flow combination
    Omega0*<Sigma>, which equals 2*kappa*<n> exactly in steady state; the
    bare <Sigma> is not exposed because only g2 = Omega0**2 * f is ever
    known.  coherence is <D>/N_e, reported through its N_e-independent
    closed form so the P -> 0 limit is well defined.
    """

    pump: float
    inversion: float
    n_excited: float
    n_ground: float
    photons: float
    sigma: float
    d_corr: float
    coherence: float


def threshold_inversion(params: SystemParams) -> float:
    """Semi-classical threshold inversion kappa*gamma_perp/(2*g2)."""
    return params.kappa * params.gamma_perp / (2.0 * params.g2)


def threshold_margin(params: SystemParams, inversion: float) -> float:
    """c = kappa*gamma_perp/2 - g2*N; positive strictly below threshold."""
    return params.kappa * params.gamma_perp / 2.0 - params.g2 * inversion


def excited_population(params: SystemParams, inversion: float) -> float:
    return 0.5 * (params.n_emitters + inversion)


def ground_population(params: SystemParams, inversion: float) -> float:
    return 0.5 * (params.n_emitters - inversion)


def _check_below_threshold(params: SystemParams, inversion: float) -> float:
    c = threshold_margin(params, inversion)
    if c <= 0.0:
        raise AboveThreshold(
            f"inversion {inversion} is at or above the semi-classical "
            f"threshold {threshold_inversion(params)}"
        )
    return c


def photons_per_excited(params: SystemParams, inversion: float) -> float:
    """<n>/N_e = g2*gamma_perp / (2*b*c); finite even at zero excitation."""
    c = _check_below_threshold(params, inversion)
    return params.g2 * params.gamma_perp / (2.0 * params.decay_sum * c)


def photon_number(params: SystemParams, inversion: float) -> float:
    """Mean intra-cavity photon number at a given inversion."""
    return photons_per_excited(params, inversion) * excited_population(params, inversion)


def inter_emitter_correlation(params: SystemParams, inversion: float):
    """Return (<v+v>/f, <D>, C) at a given inversion.

    <v+v>/f = gamma_perp*N_e*(c + kappa**2)/(2*b*c) by residue integration of
    the polarization spectrum; <D> subtracts the self-term N_e, and
    C = <D>/N_e is independent of N_e.  C is negative exactly for N < 0.
    """
    c = _check_below_threshold(params, inversion)
    n_e = excited_population(params, inversion)
    shape = params.gamma_perp * (c + params.kappa**2) / (2.0 * params.decay_sum * c)
    vv_over_f = shape * n_e
    return vv_over_f, vv_over_f - n_e, shape - 1.0


def coherence(params: SystemParams, inversion: float) -> float:
    """Inter-emitter coherence C = <D>/N_e (the N_e-independent closed form)."""
    return inter_emitter_correlation(params, inversion)[2]


def coherence_floor(params: SystemParams) -> float:
    """Minimal coherence C0, reached in the zero-pump limit N = -N0."""
    return coherence(params, -float(params.n_emitters))


def pump_for_inversion(params: SystemParams, inversion: float) -> float:
    """Closed-form pump P(N) = [N_e + (2*kappa/gamma_par)*<n>(N)] / N_g.

    Exact inverse of solve_steady_state; strictly increasing on the open
    interval (-N0, min(N0, N_th)).
    """
    n0 = float(params.n_emitters)
    upper = min(n0, threshold_inversion(params))
    if not (-n0 < inversion < upper):
        raise DomainError(
            f"inversion must lie in ({-n0}, {upper}), got {inversion}"
        )
    n_e = excited_population(params, inversion)
    n_g = ground_population(params, inversion)
    n_ph = photon_number(params, inversion)
    return (n_e + 2.0 * params.kappa * n_ph / params.gamma_par) / n_g


def solve_steady_state(params: SystemParams, pump: float) -> SteadyState:
    """Unique steady state at a given pump, by bisection on P(N) - pump.

    P(N) is monotone on (-N0, min(N0, N_th)) with P -> 0 at the lower end
    and P -> inf at the upper end, so the root is always bracketed.  The
    zero-pump state is returned exactly without iteration.
    """
    pump = validate_pump(pump)
    n0 = float(params.n_emitters)
    if pump == 0.0:
        c0 = threshold_margin(params, -n0)
        shape = params.gamma_perp * (c0 + params.kappa**2) / (2.0 * params.decay_sum * c0)
        return SteadyState(
            pump=0.0, inversion=-n0, n_excited=0.0, n_ground=n0,
            photons=0.0, sigma=0.0, d_corr=0.0, coherence=shape - 1.0,
        )

    upper = min(n0, threshold_inversion(params))
    span = upper + n0
    # Lower bracket endpoint is the exact limit P(-N0) = 0, so its residual
    # is -pump < 0 without evaluation; the upper endpoint backs off until
    # P(hi) exceeds the requested pump.
    lo = -n0
    eps = 1e-12 * span
    hi = upper - eps
    shrink = 0
    while pump_for_inversion(params, hi) - pump <= 0.0:
        eps *= 1e-3
        hi = upper - eps
        shrink += 1
        if shrink > 8:
            raise ConvergenceFailure(
                f"could not bracket inversion for pump={pump}"
            )
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if pump_for_inversion(params, mid) - pump <= 0.0:
            lo = mid
        else:
            hi = mid
    inversion = 0.5 * (lo + hi)

    n_e = excited_population(params, inversion)
    n_g = ground_population(params, inversion)
    n_ph = photon_number(params, inversion)
    _, d_corr, coh = inter_emitter_correlation(params, inversion)
    return SteadyState(
        pump=pump, inversion=inversion, n_excited=n_e, n_ground=n_g,
        photons=n_ph, sigma=2.0 * params.kappa * n_ph, d_corr=d_corr,
        coherence=coh,
    )
