import subprocess
import sys

import matplotlib
import pytest

matplotlib.use("Agg")


def run_solver(args, out_dir):
    """Generate inputs through the solver's public CLI (its external
    interface); the figures package never imports the solver."""
    cmd = [sys.executable, "-m", "rabisplit.cli", *args, "--out-dir", str(out_dir)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return out_dir


FIG1A = ["--g2", "10", "--kappa", "80", "--gamma-perp", "19", "--n0", "150"]
FIG1B = ["--g2", "100", "--kappa", "80", "--gamma-perp", "19", "--n0", "150"]
FIG2 = ["--g2", "4", "--two-kappa", "200", "--gamma-perp", "10"]


@pytest.fixture(scope="session")
def cli_outputs(tmp_path_factory):
    """Freshly generated CLI outputs for every panel."""
    root = tmp_path_factory.mktemp("cli_outputs")
    dirs = {}
    dirs["1a"] = run_solver(
        ["spectrum", *FIG1A, "--pump-range", "0.2:1.2:4", "--normalized"],
        root / "spectra_weak")
    dirs["1b"] = run_solver(
        ["spectrum", *FIG1B, "--pump-range", "0.2:1.2:4", "--normalized"],
        root / "spectra_strong")
    dirs["1c"] = run_solver(
        ["phase-diagram", *FIG1B, "--g2-range", "1:200:40"],
        root / "phase")
    dirs["1d"] = run_solver(
        ["coherence-map", *FIG1B, "--two-kappa-range", "20:400:30",
         "--gamma-perp-range", "10:200:25"],
        root / "cmap")
    sweeps = root / "sweeps"
    run_solver(["linewidth-sweep", *FIG2, "--n0", "500"], sweeps)
    run_solver(["linewidth-sweep", *FIG2, "--n0", "100"], sweeps)
    dirs["2a"] = sweeps
    dirs["2b"] = sweeps
    return dirs
