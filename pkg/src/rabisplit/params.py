"""Physical parameter set and the unit convention shared by every module.

All rates are expressed in units of the population decay rate, i.e. a
validated parameter set has ``gamma_par == 1``.  ``kappa`` is the *amplitude*
decay rate of the cavity field; the energy decay rate of the cavity mode
(the "cavity linewidth") is ``2*kappa``.  Mixing those two up is the most
common input error, so configuration input accepts either ``kappa`` or
``two_kappa`` (mutually exclusive).  The emitter-field coupling enters every
observable only through its square ``g2``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import NonPositiveRate, ValidationError, ZeroEmitters

CONFIG_KEYS = ("g2", "kappa", "two_kappa", "gamma_perp", "n_emitters", "photon_energy")


@dataclass(frozen=True)
class SystemParams:
    """One emitter-cavity device.

    g2            squared effective emitter-field coupling strength, units gamma_par**2
    kappa         cavity field amplitude decay rate, units gamma_par
    gamma_perp    polarization decay rate, units gamma_par
    n_emitters    emitter count, assumed >> 1
    gamma_par     population decay rate; 1 after normalization, kept explicit
                  so results can be re-dimensionalized
    photon_energy optional photon energy in user units; when set, emitted power
                  is reported as photon_energy * 2*kappa*<n> instead of the
                  bare photon flux
    """

    g2: float
    kappa: float
    gamma_perp: float
    n_emitters: int
    gamma_par: float = 1.0
    photon_energy: float | None = None

    @property
    def two_kappa(self) -> float:
        return 2.0 * self.kappa

    @property
    def decay_sum(self) -> float:
        """kappa + gamma_perp/2, the half-sum of the two field-space decay rates."""
        return self.kappa + 0.5 * self.gamma_perp

    def normalized(self) -> "SystemParams":
        """Rescale all rates so gamma_par == 1 (g2 carries two rate powers)."""
        if self.gamma_par == 1.0:
            return self
        s = self.gamma_par
        return replace(
            self,
            g2=self.g2 / s**2,
            kappa=self.kappa / s,
            gamma_perp=self.gamma_perp / s,
            gamma_par=1.0,
        )


def validate(params: SystemParams) -> SystemParams:
    """Check invariants and return the parameter set normalized to gamma_par=1.

    Raises NonPositiveRate / ZeroEmitters; warns (without rejecting) when the
    emitter count is too small for the many-emitter model to be trustworthy.
    """
    for name in ("g2", "kappa", "gamma_perp", "gamma_par"):
        value = getattr(params, name)
        if not value > 0.0:
            raise NonPositiveRate(f"{name} must be positive, got {value}")
    if params.n_emitters < 1:
        raise ZeroEmitters(f"n_emitters must be >= 1, got {params.n_emitters}")
    if params.n_emitters < 10:
        warnings.warn(
            f"n_emitters = {params.n_emitters}: the model assumes a large "
            "emitter number; results for so few emitters are unreliable",
            UserWarning,
            stacklevel=2,
        )
    return params.normalized()


def validate_pump(pump: float) -> float:
    if not pump >= 0.0:
        raise ValidationError(f"pump must be >= 0, got {pump}")
    return float(pump)


def from_mapping(values: dict) -> SystemParams:
    """Build a validated SystemParams from config keys (see CONFIG_KEYS).

    Exactly one of ``kappa`` / ``two_kappa`` must be present.
    """
    unknown = set(values) - set(CONFIG_KEYS)
    if unknown:
        raise ValidationError(f"unknown parameter keys: {sorted(unknown)}")
    if ("kappa" in values) == ("two_kappa" in values):
        raise ValidationError("exactly one of 'kappa' and 'two_kappa' is required")
    kappa = float(values["kappa"]) if "kappa" in values else 0.5 * float(values["two_kappa"])
    try:
        params = SystemParams(
            g2=float(values["g2"]),
            kappa=kappa,
            gamma_perp=float(values["gamma_perp"]),
            n_emitters=int(values["n_emitters"]),
            photon_energy=float(values["photon_energy"]) if "photon_energy" in values else None,
        )
    except KeyError as exc:
        raise ValidationError(f"missing parameter key: {exc.args[0]}") from None
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad parameter value: {exc}") from None
    return validate(params)


def load_config(path: str | Path) -> SystemParams:
    """Read a key=value (one per line) config file; '#' starts a comment."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return from_mapping(values)
