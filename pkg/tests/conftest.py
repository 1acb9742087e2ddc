import numpy as np
import pytest

from rabisplit import SystemParams, validate


@pytest.fixture
def fig1a_params():
    """Weak-coupling reference device: single-peaked at every pump."""
    return validate(SystemParams(g2=10.0, kappa=80.0, gamma_perp=19.0, n_emitters=150))


@pytest.fixture
def fig1b_params():
    """Strong-coupling reference device: split spectrum at low pump."""
    return validate(SystemParams(g2=100.0, kappa=80.0, gamma_perp=19.0, n_emitters=150))


@pytest.fixture
def laser_params():
    """Threshold-capable sweep device (emitters well above N_th = 125)."""
    return validate(SystemParams(g2=4.0, kappa=100.0, gamma_perp=10.0, n_emitters=500))


@pytest.fixture
def led_params():
    """Saturating sweep device (emitters below N_th = 125)."""
    return validate(SystemParams(g2=4.0, kappa=100.0, gamma_perp=10.0, n_emitters=100))


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
