"""Steady-state model of many incoherently pumped two-level emitters in a
single-mode cavity: emission spectra, collective Rabi splitting, operating
regimes, linewidths, and a stochastic Langevin cross-check.

All rates are normalized to the population decay rate; frequencies are
offsets from the cavity resonance.  See the individual modules for the
closed forms and their validity ranges.
"""

from . import errors
from .linewidth import (
    LinewidthPoint,
    default_pump_grid,
    linewidth,
    linewidth_asymptotic,
    linewidth_asymptotic_from_flux,
    pump_sweep,
    width_ratio,
)
from .oracle import NoiseModel, OracleEstimate, estimate_photon_number, simulate_spectrum
from .params import SystemParams, from_mapping, load_config, validate
from .regimes import (
    CoherenceMap,
    CriticalInversions,
    PhaseDiagram,
    RegimeReport,
    classify,
    coherence_map,
    critical_inversions,
    critical_pumps,
    phase_diagram,
    report,
    split_conditions,
    stimulated_equals_spontaneous_pump,
)
from .spectrum import (
    SpectrumAnalysis,
    emission_spectrum,
    max_splitting,
    peak_positions,
    roots,
    splitting,
    total_photons,
)
from .spectrum import evaluate as evaluate_spectrum
from .steadystate import (
    SteadyState,
    coherence,
    coherence_floor,
    excited_population,
    ground_population,
    inter_emitter_correlation,
    photon_number,
    photons_per_excited,
    pump_for_inversion,
    solve_steady_state,
    threshold_inversion,
    threshold_margin,
)

__version__ = "0.1.0"

__all__ = [
    "CoherenceMap",
    "CriticalInversions",
    "LinewidthPoint",
    "NoiseModel",
    "OracleEstimate",
    "PhaseDiagram",
    "RegimeReport",
    "SpectrumAnalysis",
    "SteadyState",
    "SystemParams",
    "classify",
    "coherence",
    "coherence_floor",
    "coherence_map",
    "critical_inversions",
    "critical_pumps",
    "default_pump_grid",
    "emission_spectrum",
    "errors",
    "estimate_photon_number",
    "evaluate_spectrum",
    "excited_population",
    "from_mapping",
    "ground_population",
    "inter_emitter_correlation",
    "linewidth",
    "linewidth_asymptotic",
    "linewidth_asymptotic_from_flux",
    "load_config",
    "max_splitting",
    "peak_positions",
    "phase_diagram",
    "photon_number",
    "photons_per_excited",
    "pump_for_inversion",
    "pump_sweep",
    "report",
    "roots",
    "simulate_spectrum",
    "solve_steady_state",
    "split_conditions",
    "splitting",
    "stimulated_equals_spontaneous_pump",
    "threshold_inversion",
    "threshold_margin",
    "total_photons",
    "validate",
    "width_ratio",
]
