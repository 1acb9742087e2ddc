#!/usr/bin/env python3
"""Operating regions and the coupling-strength phase diagram.

For the reference rates (kappa = 80, gamma_perp = 19, N0 = 150) the pump /
coupling plane divides into four regions: LED behaviour when the threshold
inversion exceeds the emitter number, a weak-coupling laser band, the
split-spectrum (collective strong coupling) wedge at low pump, and lasing
once stimulated emission dominates.  The eigenmode-splitting pump P_E always
sits above the spectral-splitting pump P_c: two eigenmodes are necessary but
not sufficient for a two-peaked spectrum.
"""
import numpy as np

from rabisplit import SystemParams, classify, phase_diagram, report, validate

params = validate(SystemParams(g2=100.0, kappa=80.0, gamma_perp=19.0, n_emitters=150))

r = report(params, 0.2)
print("strong-coupling device at P = 0.2:")
print(f"  N_th = {r.n_th}, N_c = {r.n_c}, N_E = {r.n_e_split}")
print(f"  P_c = {r.p_c:.4f}, P_E = {r.p_e:.4f}, P_St = {r.p_st:.4f}")
print(f"  split conditions (spectral, eigenmode): "
      f"{r.cond_spectral_split}, {r.cond_eigenmode_split}")
print(f"  region: {r.region}\n")

weak = validate(SystemParams(g2=10.0, kappa=80.0, gamma_perp=19.0, n_emitters=150))
rw = report(weak, 0.5)
print("weak-coupling device at P = 0.5 (eigenmodes split, spectrum never does):")
print(f"  split conditions: {rw.cond_spectral_split}, {rw.cond_eigenmode_split}")
print(f"  P_c absent: {rw.p_c is None}, P_E = {rw.p_e:.4f}, region: {rw.region}\n")

diagram = phase_diagram(params, np.geomspace(1.0, 200.0, 25))
print(f"phase diagram (LED boundary at g2 = {diagram.g2_vertical:.4f}):")
print(f"{'g2':>8} {'P_St':>9} {'P_c':>9} {'P_E':>9}   region at P=0.5")
for g2, p_st, p_c, p_e in zip(diagram.g2, diagram.p_st, diagram.p_c, diagram.p_e):
    dev = validate(SystemParams(g2=float(g2), kappa=80.0, gamma_perp=19.0, n_emitters=150))
    cells = [f"{v:9.4f}" if not np.isnan(v) else f"{'-':>9}" for v in (p_st, p_c, p_e)]
    print(f"{g2:8.3f} {' '.join(cells)}   {classify(dev, 0.5)}")
