"""Deterministic CSV/JSON writers and the per-run manifest.

Floats are written with repr (shortest round-trip form), absent values as
empty fields, so re-running a command with identical inputs reproduces the
output files byte for byte.
"""
from __future__ import annotations

import json
from pathlib import Path

UNIT_NOTE = (
    "all rates in units of gamma_par (gamma_par = 1); kappa is the field "
    "amplitude decay rate, the cavity linewidth is 2*kappa"
)
SPECTRUM_NOTE = "spectra normalized so that integral n_omega domega/(2*pi) = mean photon number"
P_ST_NOTE = (
    "P_St is the pump where the mean intra-cavity photon number crosses 1 "
    "(stimulated emission into the mode equals spontaneous emission into it); "
    "a modeling choice, not uniquely fixed by the underlying theory"
)


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int,)):
        return str(value)
    if isinstance(value, complex):
        return repr(value)
    return repr(float(value))


def write_csv(path: str | Path, header: list[str], rows) -> Path:
    path = Path(path)
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")
    return path


def _jsonable(value):
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, "tolist"):
        return value.tolist()
    raise TypeError(f"cannot serialize {type(value)}")


def write_json(path: str | Path, payload: dict) -> Path:
    path = Path(path)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True, default=_jsonable) + "\n")
    return path


def write_manifest(
    out_dir: str | Path,
    command: str,
    params_dict: dict,
    outputs: list[Path],
    seed: int | None = None,
    extra: dict | None = None,
) -> Path:
    """RunManifest JSON beside the outputs: the resolved inputs and
    conventions that make the run reproducible, plus every file written."""
    out_dir = Path(out_dir)
    payload = {
        "command": command,
        "parameters": params_dict,
        "unit_convention": UNIT_NOTE,
        "spectral_normalization": SPECTRUM_NOTE,
        "p_st_definition": P_ST_NOTE,
        "seed": seed,
        "outputs": sorted(p.name for p in outputs),
    }
    if extra:
        payload.update(extra)
    return write_json(out_dir / f"{command}_manifest.json", payload)
