import numpy as np
import pytest

from rabisplit import (
    SystemParams,
    coherence,
    coherence_floor,
    critical_inversions,
    inter_emitter_correlation,
    photon_number,
    pump_for_inversion,
    solve_steady_state,
    threshold_inversion,
    validate,
)
from rabisplit.errors import AboveThreshold, DomainError

from helpers import (
    quad_photon_number,
    quad_vv_over_f,
    random_params_draw,
    random_subthreshold_inversion,
)

N_C_FIG1B = -32.45125  # -(4*80**2 + 19**2)/(8*100), exact decimal


def test_photon_number_at_critical_inversion(fig1b_params):
    # frozen against adaptive quadrature of the spectrum (rel. dev 2.5e-10)
    n = photon_number(fig1b_params, N_C_FIG1B)
    assert n == pytest.approx(0.15576594513419345, rel=1e-12)
    assert n == pytest.approx(
        quad_photon_number(80.0, 19.0, 100.0, N_C_FIG1B, (150 + N_C_FIG1B) / 2), rel=1e-8
    )


def test_photon_number_vanishes_without_excitation(fig1b_params):
    assert photon_number(fig1b_params, -150.0) == 0.0


def test_photon_number_vanishes_with_decoupled_cavity():
    p = validate(SystemParams(g2=1e-12, kappa=80, gamma_perp=19, n_emitters=150))
    assert photon_number(p, -20.0) < 1e-10


def test_photon_number_above_threshold_raises(fig1b_params):
    n_th = threshold_inversion(fig1b_params)
    with pytest.raises(AboveThreshold):
        photon_number(fig1b_params, n_th)
    with pytest.raises(AboveThreshold):
        photon_number(fig1b_params, n_th + 1.0)


def test_pump_at_critical_inversion(fig1b_params):
    p_c = pump_for_inversion(fig1b_params, N_C_FIG1B)
    assert p_c == pytest.approx(0.9174716667764233, rel=1e-12)
    # cross-check: solving at that pump returns N_c
    state = solve_steady_state(fig1b_params, p_c)
    assert state.inversion == pytest.approx(N_C_FIG1B, abs=1e-9)


def test_pump_domain_errors(fig1b_params):
    with pytest.raises(DomainError):
        pump_for_inversion(fig1b_params, -150.0)
    with pytest.raises(DomainError):
        pump_for_inversion(fig1b_params, threshold_inversion(fig1b_params))


def test_pump_vanishes_at_empty_system(fig1b_params):
    assert pump_for_inversion(fig1b_params, -150.0 + 1e-9) < 1e-10


def test_pump_diverges_at_saturation(led_params):
    # emitter number below threshold inversion: N -> N0 needs unbounded pump
    assert pump_for_inversion(led_params, 100.0 - 1e-9) > 1e7


def test_zero_pump_state_exact(fig1b_params):
    state = solve_steady_state(fig1b_params, 0.0)
    assert state.inversion == -150.0
    assert state.photons == 0.0
    assert state.n_excited == 0.0
    assert state.n_ground == 150.0
    assert state.d_corr == 0.0
    assert state.sigma == 0.0
    assert state.coherence == pytest.approx(coherence_floor(fig1b_params), rel=1e-14)


def test_populations_sum_exactly(fig1b_params, rng):
    for pump in rng.uniform(0.01, 5.0, size=20):
        st = solve_steady_state(fig1b_params, float(pump))
        assert st.n_excited + st.n_ground == pytest.approx(150.0, abs=1e-12)
        assert st.n_excited >= 0.0 and st.n_ground >= 0.0


def test_round_trip_and_balance_random_sets(rng):
    """pump_for_inversion inverts solve_steady_state to 1e-9, and the
    population balance gamma_par*(P*N_g - N_e) = 2*kappa*<n> holds."""
    for _ in range(100):
        g2, kappa, gamma_perp, n0 = random_params_draw(rng)
        p = validate(SystemParams(g2=g2, kappa=kappa, gamma_perp=gamma_perp, n_emitters=n0))
        pump = float(10.0 ** rng.uniform(-2.0, 1.5))
        st = solve_steady_state(p, pump)
        assert pump_for_inversion(p, st.inversion) == pytest.approx(pump, rel=1e-9)
        lhs = pump * st.n_ground - st.n_excited
        rhs = 2.0 * kappa * st.photons
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-12)
        assert st.sigma == pytest.approx(rhs, rel=1e-12)


def test_monotonicity_in_pump(rng):
    for _ in range(100):
        g2, kappa, gamma_perp, n0 = random_params_draw(rng)
        p = validate(SystemParams(g2=g2, kappa=kappa, gamma_perp=gamma_perp, n_emitters=n0))
        pumps = np.geomspace(1e-3, 30.0, 60)
        states = [solve_steady_state(p, float(x)) for x in pumps]
        inversions = np.array([s.inversion for s in states])
        photons = np.array([s.photons for s in states])
        assert np.all(np.diff(inversions) > 0)
        assert np.all(np.diff(photons) > 0)


def test_laser_photon_kink_and_led_saturation(laser_params, led_params):
    # threshold-capable device: photon number grows sharply past threshold
    lo = solve_steady_state(laser_params, 1.0).photons
    hi = solve_steady_state(laser_params, 10.0).photons
    assert hi / lo > 50
    # saturating device: photon number approaches a finite ceiling
    n_lo = solve_steady_state(led_params, 500.0).photons
    n_hi = solve_steady_state(led_params, 1000.0).photons
    ceiling = photon_number(led_params, 100.0 * (1 - 1e-12))
    assert n_lo < n_hi < ceiling
    assert ceiling == pytest.approx(0.19047619047619047, rel=1e-9)
    assert (n_hi - n_lo) / n_lo < 0.02


def test_inter_emitter_correlation_quadrature(fig1b_params, rng):
    """<v+v>/f against adaptive quadrature of the polarization spectrum."""
    for inversion in (-150.0, -80.0, N_C_FIG1B, 3.0):
        vv, d_corr, c_val = inter_emitter_correlation(fig1b_params, inversion)
        n_e = (150 + inversion) / 2
        ref = quad_vv_over_f(80.0, 19.0, 100.0, inversion, n_e)
        assert vv == pytest.approx(ref, rel=1e-7)
        assert d_corr == pytest.approx(vv - n_e, rel=1e-12)
        if n_e > 0:
            assert c_val == pytest.approx(d_corr / n_e, rel=1e-9)


def test_coherence_floor_value(fig1b_params, fig1a_params):
    # frozen against quadrature of the polarization spectrum: the shape
    # factor gives C0 = 19*(15760+6400)/(179*15760) - 1
    c0 = coherence_floor(fig1b_params)
    assert c0 == pytest.approx(-0.8507500779854238, rel=1e-12)
    n_e = 7.3  # C is independent of the excited population
    ref = quad_vv_over_f(80.0, 19.0, 100.0, -150.0, n_e) / n_e - 1.0
    assert c0 == pytest.approx(ref, rel=1e-8)
    # weaker coupling traps less: |C0| smaller at g2=10 than at g2=100
    assert abs(coherence_floor(fig1a_params)) == pytest.approx(0.5932664260641716, rel=1e-12)
    assert abs(coherence_floor(fig1a_params)) < abs(c0)


def test_coherence_boundary_identity(rng):
    """C at the critical inversion equals -x(1+x^2)/(1+x)^3, x = 2*kappa/gamma_perp."""
    for _ in range(500):
        g2, kappa, gamma_perp, n0 = random_params_draw(rng)
        p = validate(SystemParams(g2=g2, kappa=kappa, gamma_perp=gamma_perp, n_emitters=n0))
        n_c = critical_inversions(p).n_c
        x = 2.0 * kappa / gamma_perp
        assert coherence(p, n_c) == pytest.approx(
            -x * (1.0 + x**2) / (1.0 + x) ** 3, abs=1e-10, rel=1e-10
        )


def test_coherence_sign_tracks_inversion(rng):
    """C < 0 exactly for N < 0 (and C > 0 on (0, N_th)): multiplying out the
    shape factor gives C < 0 <=> 2c > kappa*gamma_perp <=> N < 0."""
    for _ in range(100):
        g2, kappa, gamma_perp, n0 = random_params_draw(rng)
        p = validate(SystemParams(g2=g2, kappa=kappa, gamma_perp=gamma_perp, n_emitters=n0))
        n_th = threshold_inversion(p)
        upper = min(float(n0), n_th)
        for n in np.linspace(-n0 + 1e-6, upper - 1e-6 * (upper + n0), 25):
            c_val = coherence(p, float(n))
            if n < 0:
                assert c_val < 0.0
            elif n > 0:
                assert c_val > 0.0
        assert coherence(p, 0.0) == pytest.approx(0.0, abs=1e-12)


def test_coherence_uncoupled_limit():
    p = SystemParams(g2=1.0, kappa=7.0, gamma_perp=3.0, n_emitters=100)
    # g2*N -> 0: cross-correlations vanish identically
    assert coherence(p, 0.0) == pytest.approx(0.0, abs=1e-14)
