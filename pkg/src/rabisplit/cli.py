"""Command-line front end: every computation, CSV/JSON emission, manifests.

Exit codes: 0 success, 2 validation error, 3 domain error (e.g. above
threshold), 4 internal error.  With --json-errors a machine-readable error
object is printed to stderr before exiting.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import regimes, serialize, spectrum, steadystate
from .linewidth import default_pump_grid, pump_sweep
from .errors import DomainError, RabisplitError, ValidationError
from .oracle import estimate_photon_number, simulate_spectrum
from .params import SystemParams, from_mapping, load_config, validate

EXIT_VALIDATION = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4

STEADY_COLUMNS = ["pump", "inversion", "n_excited", "n_ground", "photons",
                  "sigma", "d_corr", "coherence"]
LINEWIDTH_COLUMNS = ["pump", "inversion", "photons", "r", "fwhm",
                     "fwhm_asymptotic", "split_flag"]


def parse_range(text: str) -> np.ndarray:
    """lo:hi:n for a linear grid, lo:hi:nlog for a log-spaced one."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValidationError(f"expected lo:hi:n or lo:hi:nlog, got {text!r}")
    lo, hi, count = parts
    log = count.endswith("log")
    if log:
        count = count[:-3]
    try:
        lo_f, hi_f, n = float(lo), float(hi), int(count)
    except ValueError:
        raise ValidationError(f"bad range {text!r}") from None
    if n < 1:
        raise ValidationError(f"range needs at least one point: {text!r}")
    if log:
        if lo_f <= 0:
            raise ValidationError("log range requires lo > 0")
        return np.geomspace(lo_f, hi_f, n)
    return np.linspace(lo_f, hi_f, n)


def add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=str, help="key=value parameter file")
    parser.add_argument("--g2", type=float, help="squared coupling strength (gamma_par^2)")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--kappa", type=float, help="field amplitude decay rate (gamma_par)")
    group.add_argument("--two-kappa", type=float, help="cavity linewidth 2*kappa (gamma_par)")
    parser.add_argument("--gamma-perp", type=float, help="polarization decay rate (gamma_par)")
    parser.add_argument("--n0", type=int, help="emitter count")
    parser.add_argument("--photon-energy", type=float, help="photon energy for output power")
    parser.add_argument("--out-dir", type=str, default=".", help="output directory")
    parser.add_argument("--json-errors", action="store_true",
                        help="print machine-readable errors to stderr")


def resolve_params(args: argparse.Namespace) -> SystemParams:
    if args.config:
        base = load_config(args.config)
        values = {
            "g2": base.g2, "kappa": base.kappa, "gamma_perp": base.gamma_perp,
            "n_emitters": base.n_emitters, "photon_energy": base.photon_energy,
        }
    else:
        values = {"photon_energy": None}
    if args.g2 is not None:
        values["g2"] = args.g2
    if args.kappa is not None:
        values["kappa"] = args.kappa
    if args.two_kappa is not None:  # exclusive with --kappa, enforced by argparse
        values["kappa"] = 0.5 * args.two_kappa
    if args.gamma_perp is not None:
        values["gamma_perp"] = args.gamma_perp
    if args.n0 is not None:
        values["n_emitters"] = args.n0
    if args.photon_energy is not None:
        values["photon_energy"] = args.photon_energy
    missing = [k for k in ("g2", "kappa", "gamma_perp", "n_emitters") if k not in values]
    if missing:
        raise ValidationError(f"missing parameters: {missing} (flags or --config)")
    return validate(SystemParams(
        g2=values["g2"], kappa=values["kappa"], gamma_perp=values["gamma_perp"],
        n_emitters=values["n_emitters"], photon_energy=values.get("photon_energy"),
    ))


def params_dict(params: SystemParams) -> dict:
    return {
        "g2": params.g2, "kappa": params.kappa, "two_kappa": params.two_kappa,
        "gamma_perp": params.gamma_perp, "gamma_par": params.gamma_par,
        "n_emitters": params.n_emitters, "photon_energy": params.photon_energy,
    }


def pump_values(args: argparse.Namespace) -> np.ndarray:
    if getattr(args, "pump_range", None):
        return parse_range(args.pump_range)
    if getattr(args, "pump", None) is not None:
        return np.array([args.pump], dtype=float)
    raise ValidationError("one of --pump / --pump-range is required")


def cmd_steady(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    pumps = pump_values(args)
    rows = []
    warned = False
    for p in pumps:
        state = steadystate.solve_steady_state(params, float(p))
        if state.photons > params.n_emitters and not warned:
            print(f"warning: <n> = {state.photons:.4g} exceeds the emitter "
                  "number; the few-photon assumption is violated", file=sys.stderr)
            warned = True
        rows.append([getattr(state, col) for col in STEADY_COLUMNS])
    csv_path = serialize.write_csv(out_dir / "steady.csv", STEADY_COLUMNS, rows)
    serialize.write_manifest(out_dir, "steady", params_dict(params), [csv_path],
                             extra={"pump": [float(p) for p in pumps]})
    print(csv_path)
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    outputs = []
    meta_all = []
    for p in pump_values(args):
        state = steadystate.solve_steady_state(params, float(p))
        if args.grid_halfwidth is not None:
            half = args.grid_halfwidth
        else:
            half = spectrum.default_grid(params, state.inversion)[-1]
        grid = np.linspace(-half, half, args.grid_points)
        analysis = spectrum.evaluate(params, state, grid)
        values = analysis.n_omega
        if args.normalized:
            values = values / values.max()
        tag = f"{float(p):g}".replace(".", "p").replace("-", "m")
        csv_path = serialize.write_csv(
            out_dir / f"spectrum_P{tag}.csv", ["omega", "n_omega"],
            zip(analysis.omega.tolist(), values.tolist()),
        )
        meta = {
            "pump": float(p),
            "inversion": state.inversion,
            "roots": list(analysis.roots),
            "peak_positions": list(analysis.peak_positions),
            "splitting": analysis.splitting,
            "total_photons": analysis.total_photons,
            "normalized": bool(args.normalized),
            "grid_halfwidth": float(analysis.omega[-1]),
            "grid_points": int(analysis.omega.size),
            "csv": csv_path.name,
        }
        meta_path = serialize.write_json(out_dir / f"spectrum_P{tag}.json", meta)
        outputs += [csv_path, meta_path]
        meta_all.append(meta)
    serialize.write_manifest(out_dir, "spectrum", params_dict(params), outputs,
                             extra={"spectra": meta_all})
    for path in outputs:
        print(path)
    return 0


def cmd_phase_diagram(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    g2_grid = parse_range(args.g2_range)
    diagram = regimes.phase_diagram(params, g2_grid)

    def blank_nan(x):
        return None if np.isnan(x) else float(x)

    rows = [
        [g, blank_nan(st), blank_nan(c), blank_nan(e)]
        for g, st, c, e in zip(diagram.g2, diagram.p_st, diagram.p_c, diagram.p_e)
    ]
    csv_path = serialize.write_csv(out_dir / "phase_diagram.csv",
                                   ["g2", "p_st", "p_c", "p_e"], rows)
    serialize.write_manifest(
        out_dir, "phase_diagram", params_dict(params), [csv_path],
        extra={"g2_vertical": diagram.g2_vertical, "g2_range": args.g2_range},
    )
    print(csv_path)
    return 0


def cmd_coherence_map(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tk_grid = parse_range(args.two_kappa_range)
    gp_grid = parse_range(args.gamma_perp_range)
    ref = (params.two_kappa, params.gamma_perp)
    cmap = regimes.coherence_map(params.g2, params.n_emitters, tk_grid, gp_grid,
                                 reference_point=ref)
    rows = []
    for i, gp in enumerate(cmap.gamma_perp):
        for j, tk in enumerate(cmap.two_kappa):
            rows.append([tk, gp, cmap.abs_c0[i, j], cmap.omega_max[i, j]])
    outputs = [serialize.write_csv(out_dir / "coherence_map.csv",
                                   ["two_kappa", "gamma_perp", "abs_c0", "omega_max"], rows)]
    outputs.append(serialize.write_csv(out_dir / "contour_zero.csv",
                                       ["two_kappa", "gamma_perp"], cmap.contour_zero.tolist()))
    if cmap.contour_ref is not None:
        outputs.append(serialize.write_csv(out_dir / "contour_ref.csv",
                                           ["two_kappa", "gamma_perp"], cmap.contour_ref.tolist()))
    serialize.write_manifest(
        out_dir, "coherence_map", params_dict(params), outputs,
        extra={
            "omega_ref": cmap.omega_ref,
            "reference_point": list(ref),
            "two_kappa_range": args.two_kappa_range,
            "gamma_perp_range": args.gamma_perp_range,
        },
    )
    for path in outputs:
        print(path)
    return 0


def cmd_linewidth_sweep(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.pump_range:
        grid = parse_range(args.pump_range)
    else:
        grid = default_pump_grid()
    points = pump_sweep(params, grid)
    rows = [
        [pt.pump, pt.inversion, pt.photons, pt.r, pt.fwhm, pt.fwhm_asymptotic, pt.split]
        for pt in points
    ]
    csv_path = serialize.write_csv(out_dir / f"linewidth_N{params.n_emitters}.csv",
                                   LINEWIDTH_COLUMNS, rows)
    serialize.write_manifest(out_dir, f"linewidth_N{params.n_emitters}",
                             params_dict(params), [csv_path])
    print(csv_path)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    state = steadystate.solve_steady_state(params, args.pump)
    estimate = simulate_spectrum(
        params, state, dt=args.dt, t_total=args.t_total,
        n_traj=args.n_traj, seed=args.seed,
        segment_time=args.segment_time, omega_max=args.omega_max,
        window=args.window,
    )
    n_est, n_err = estimate_photon_number(estimate)
    csv_path = serialize.write_csv(
        out_dir / "oracle_spectrum.csv", ["omega", "psd", "stderr"],
        zip(estimate.omega.tolist(), estimate.psd.tolist(), estimate.stderr.tolist()),
    )
    meta_path = serialize.write_json(out_dir / "oracle_spectrum.json", {
        "seed": estimate.seed, "dt": estimate.dt, "t_total": estimate.t_total,
        "n_traj": estimate.n_traj, "burn_in": estimate.burn_in,
        "window": estimate.window, "n_segments": estimate.n_segments,
        "segment_time": estimate.segment_time,
        "photon_estimate": n_est, "photon_stderr": n_err,
        "photon_closed_form": state.photons, "pump": args.pump,
    })
    serialize.write_manifest(out_dir, "oracle", params_dict(params),
                             [csv_path, meta_path], seed=args.seed)
    print(csv_path)
    print(meta_path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabisplit",
        description="Steady-state spectra, collective Rabi splitting, regimes "
                    "and linewidths of many pumped two-level emitters in a cavity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("steady", help="steady state at one pump or a pump range")
    add_param_flags(p)
    p.add_argument("--pump", type=float)
    p.add_argument("--pump-range", type=str, help="lo:hi:n or lo:hi:nlog")
    p.set_defaults(func=cmd_steady)

    p = sub.add_parser("spectrum", help="emission spectrum at one or more pumps")
    add_param_flags(p)
    p.add_argument("--pump", type=float)
    p.add_argument("--pump-range", type=str)
    p.add_argument("--grid-halfwidth", type=float, default=None)
    p.add_argument("--grid-points", type=int, default=spectrum.GRID_POINTS)
    p.add_argument("--normalized", action="store_true",
                   help="divide each spectrum by its maximum")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("phase-diagram", help="P_St/P_c/P_E curves vs g2")
    add_param_flags(p)
    p.add_argument("--g2-range", type=str, default="1:200:200",
                   help="lo:hi:n or lo:hi:nlog grid of g2 values")
    p.set_defaults(func=cmd_phase_diagram)

    p = sub.add_parser("coherence-map", help="|C0| map over (2*kappa, gamma_perp)")
    add_param_flags(p)
    p.add_argument("--two-kappa-range", type=str, default="2:400:200")
    p.add_argument("--gamma-perp-range", type=str, default="2:400:200")
    p.set_defaults(func=cmd_coherence_map)

    p = sub.add_parser("linewidth-sweep", help="linewidth and photon number vs pump")
    add_param_flags(p)
    p.add_argument("--pump-range", type=str, default=None,
                   help="default: 0 plus 120 log points up to P=2.7")
    p.set_defaults(func=cmd_linewidth_sweep)

    p = sub.add_parser("oracle", help="stochastic Langevin spectrum estimate")
    add_param_flags(p)
    p.add_argument("--pump", type=float, required=True)
    p.add_argument("--dt", type=float, default=1e-4)
    p.add_argument("--t-total", type=float, default=8.0)
    p.add_argument("--n-traj", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--segment-time", type=float, default=None)
    p.add_argument("--omega-max", type=float, default=None)
    p.add_argument("--window", choices=("boxcar", "hann"), default="boxcar")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        return _fail(args, exc, "validation", EXIT_VALIDATION)
    except DomainError as exc:
        return _fail(args, exc, "domain", EXIT_DOMAIN)
    except RabisplitError as exc:
        return _fail(args, exc, "internal", EXIT_INTERNAL)


def _fail(args, exc, kind: str, code: int) -> int:
    if getattr(args, "json_errors", False):
        print(json.dumps({"error": kind, "type": type(exc).__name__,
                          "message": str(exc), "exit_code": code}), file=sys.stderr)
    else:
        print(f"error ({kind}): {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
