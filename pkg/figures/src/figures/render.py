"""Panel builders: pure plotting of the solver CLI's CSV/JSON outputs.

No physics is computed here; every number on an axes object comes straight
from an input file.  Data lines carry the label "<csv name>:<column>" so
consumers (and the tests) can extract exactly what was plotted; decorative
markers use leading-underscore labels and stay out of legends.

Panels
------
spectra-weak / spectra-strong (1a, 1b)
    stacked normalized emission spectra, one row per pump
phase-diagram (1c)
    P_St / P_c / P_E versus squared coupling, with the LED boundary
coherence-map (1d)
    |C0| over (2*kappa, gamma_perp) with the iso-splitting contours
linewidth-sweep (2a) / photon-sweep (2b)
    width and photon number versus pump on log axes
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from .errors import MissingInput
from .io import read_csv, read_json

PANELS = ("1a", "1b", "1c", "1d", "2a", "2b")

# fixed salt: SVG element ids derive from content, so re-renders are
# byte-stable for identical inputs and library versions
matplotlib.rcParams["svg.hashsalt"] = "figures"


@dataclass(frozen=True)
class FigureSpec:
    panel: str
    inputs: dict = field(default_factory=dict)   # role -> Path
    output: Path | None = None
    xlabel: str = ""
    ylabel: str = ""
    xscale: str = "linear"
    yscale: str = "linear"


def _spectrum_metas(in_dir: Path) -> list[dict]:
    metas = []
    for meta_path in sorted(in_dir.glob("spectrum_P*.json")):
        meta = read_json(meta_path)
        meta["_csv"] = in_dir / meta["csv"]
        metas.append(meta)
    if not metas:
        raise MissingInput(f"no spectrum_P*.json in {in_dir}")
    return sorted(metas, key=lambda m: m["pump"])


def build_spec(panel: str, in_dir: str | Path, output: str | Path | None = None) -> FigureSpec:
    in_dir = Path(in_dir)
    if panel in ("1a", "1b"):
        if not sorted(in_dir.glob("spectrum_P*.json")):
            raise MissingInput(f"no spectrum_P*.json in {in_dir}")
        return FigureSpec(
            panel=panel, inputs={"dir": in_dir}, output=_out(output),
            xlabel="omega - omega_0 (gamma_par)", ylabel="normalized emission spectrum",
        )
    if panel == "1c":
        return FigureSpec(
            panel=panel,
            inputs={"csv": in_dir / "phase_diagram.csv",
                    "manifest": in_dir / "phase_diagram_manifest.json"},
            output=_out(output),
            xlabel="g2 (gamma_par^2)", ylabel="pump P", yscale="log",
        )
    if panel == "1d":
        inputs = {"csv": in_dir / "coherence_map.csv",
                  "zero": in_dir / "contour_zero.csv",
                  "manifest": in_dir / "coherence_map_manifest.json"}
        ref = in_dir / "contour_ref.csv"
        if ref.exists():
            inputs["ref"] = ref
        return FigureSpec(panel=panel, inputs=inputs, output=_out(output),
                          xlabel="2*kappa (gamma_par)", ylabel="gamma_perp (gamma_par)")
    if panel in ("2a", "2b"):
        sweeps = sorted(in_dir.glob("linewidth_N*.csv"),
                        key=lambda p: -int(p.stem.split("N")[-1]))
        if not sweeps:
            raise MissingInput(f"no linewidth_N*.csv in {in_dir}")
        ylabel = "linewidth (gamma_par)" if panel == "2a" else "photon number"
        return FigureSpec(panel=panel, inputs={"sweeps": sweeps}, output=_out(output),
                          xlabel="pump P", ylabel=ylabel, xscale="log", yscale="log")
    raise ValueError(f"unknown panel {panel!r}; expected one of {PANELS}")


def _out(output):
    return Path(output) if output is not None else None


def render(spec: FigureSpec) -> Figure:
    builder = {
        "1a": _render_spectra, "1b": _render_spectra,
        "1c": _render_phase_diagram,
        "1d": _render_coherence_map,
        "2a": _render_sweep, "2b": _render_sweep,
    }[spec.panel]
    fig = builder(spec)
    if spec.output is not None:
        save(fig, spec.output)
    return fig


def save(fig: Figure, output: str | Path) -> Path:
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    # suppress timestamps so a re-render is byte-stable
    metadata = {}
    if output.suffix == ".svg":
        metadata = {"Date": None}
    elif output.suffix == ".pdf":
        metadata = {"CreationDate": None}
    fig.savefig(output, metadata=metadata or None)
    return output


def _render_spectra(spec: FigureSpec) -> Figure:
    metas = _spectrum_metas(spec.inputs["dir"])
    fig = Figure(figsize=(5.0, 1.6 * len(metas)))
    axes = fig.subplots(len(metas), 1, sharex=True)
    axes = np.atleast_1d(axes)
    for ax, meta in zip(axes, metas):
        table = read_csv(meta["_csv"], ("omega", "n_omega"))
        name = Path(meta["_csv"]).name
        ax.plot(table["omega"], table["n_omega"], color="C0", label=f"{name}:n_omega")
        for peak in meta.get("peak_positions", []):
            ax.axvline(peak, color="0.6", lw=0.6, ls=":", label="_peak_marker")
        ax.set_ylabel(f"P = {meta['pump']:g}", fontsize=8)
        ax.set_yticks([0, 1] if meta.get("normalized") else ax.get_yticks())
    axes[-1].set_xlabel(spec.xlabel)
    axes[0].set_title(spec.ylabel, fontsize=9)
    return fig


def _render_phase_diagram(spec: FigureSpec) -> Figure:
    table = read_csv(spec.inputs["csv"], ("g2", "p_st", "p_c", "p_e"))
    manifest = read_json(spec.inputs["manifest"])
    fig = Figure(figsize=(5.0, 3.6))
    ax = fig.subplots()
    name = Path(spec.inputs["csv"]).name
    ax.plot(table["g2"], table["p_st"], "r--", label=f"{name}:p_st")
    ax.plot(table["g2"], table["p_c"], "b-", label=f"{name}:p_c")
    ax.plot(table["g2"], table["p_e"], "k--", label=f"{name}:p_e")
    ax.axvline(manifest["g2_vertical"], color="0.4", lw=0.8, label="_led_boundary")
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    ax.set_yscale(spec.yscale)
    ax.legend(["P_St", "P_c", "P_E"], fontsize=8)
    return fig


def _render_coherence_map(spec: FigureSpec) -> Figure:
    table = read_csv(spec.inputs["csv"], ("two_kappa", "gamma_perp", "abs_c0", "omega_max"))
    two_kappa = np.unique(table["two_kappa"])
    gamma_perp = np.unique(table["gamma_perp"])
    grid = table["abs_c0"].reshape(gamma_perp.size, two_kappa.size)
    fig = Figure(figsize=(5.0, 4.0))
    ax = fig.subplots()
    mesh = ax.pcolormesh(two_kappa, gamma_perp, grid, shading="nearest",
                         label=f"{Path(spec.inputs['csv']).name}:abs_c0")
    fig.colorbar(mesh, ax=ax, label="|C0|")
    zero = read_csv(spec.inputs["zero"], ("two_kappa", "gamma_perp"))
    ax.plot(zero["two_kappa"], zero["gamma_perp"], "w-", lw=1.2,
            label=f"{Path(spec.inputs['zero']).name}:gamma_perp")
    if "ref" in spec.inputs:
        ref = read_csv(spec.inputs["ref"], ("two_kappa", "gamma_perp"))
        ax.plot(ref["two_kappa"], ref["gamma_perp"], "w--", lw=1.2,
                label=f"{Path(spec.inputs['ref']).name}:gamma_perp")
    manifest = read_json(spec.inputs["manifest"])
    point = manifest.get("reference_point")
    if point:
        ax.plot([point[0]], [point[1]], "wo", ms=5, mec="k", label="_reference_point")
    ax.set_xlim(two_kappa.min(), two_kappa.max())
    ax.set_ylim(gamma_perp.min(), gamma_perp.max())
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    return fig


def _render_sweep(spec: FigureSpec) -> Figure:
    column = "fwhm" if spec.panel == "2a" else "photons"
    fig = Figure(figsize=(5.0, 3.6))
    ax = fig.subplots()
    styles = [("b", "-"), ("r", "--"), ("g", "-."), ("m", ":")]
    for path, (color, ls) in zip(spec.inputs["sweeps"], styles):
        table = read_csv(path, ("pump", "inversion", "photons", "r", "fwhm",
                                "fwhm_asymptotic", "split_flag"))
        ax.plot(table["pump"], table[column], color=color, ls=ls,
                label=f"{path.name}:{column}")
    ax.set_xscale(spec.xscale)
    ax.set_yscale(spec.yscale)
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    ax.legend(fontsize=8)
    return fig
