"""Curvature landscapes: ASCII snapshots plus CSV export.

The scan clips curvature to [-5, 10] (the interesting window) and records a
mask of clipped cells. Negative-curvature wells mark highly entangled regions;
circuits whose landscape has extensive negative regions reach entangled
targets easily.

Run:  python demos/04_curvature_landscapes.py [out_dir]
"""
import sys

import numpy as np

from pqcgeo import ansatz, harness

GLYPHS = ".:-=+*#%@"  # '.' = positive hill (+10), '@' = deeply negative curvature


def ascii_panel(kind, scan, fixed, title, n=33):
    values, mask, _ = harness.scan_landscape(kind, scan, fixed_theta=fixed, resolution=n)
    # map [-5, 10] to glyphs with '@' at the most negative (entangled wells)
    levels = np.clip(((10.0 - values) / 15.0 * (len(GLYPHS) - 1)).astype(int),
                     0, len(GLYPHS) - 1)
    print(f"\n{title}  (rows: theta_{scan[0] + 1}, cols: theta_{scan[1] + 1}, "
          f"{int(mask.sum())} clipped cells)")
    for row in levels[::2]:
        print("   " + "".join(GLYPHS[v] for v in row))


ascii_panel(ansatz.HEA, (0, 1), None, "hea: wells around sin(2 t1) cos(2 t2) = +-1")
ascii_panel(ansatz.LDCA, (2, 4), None, "ldca: repeating hills surrounded by negative regions")
fixed = np.zeros(5)
fixed[4] = np.pi / 2
ascii_panel(ansatz.QGAN, (0, 1), fixed, "qgan at t5 = pi/2: isolated wells emerge")
ascii_panel(ansatz.QGAN, (0, 1), None, "qgan at t5 = 0: no entanglement anywhere (flat +10)")

if len(sys.argv) > 1:
    prefix = f"{sys.argv[1]}/ldca_t3_t5"
    harness.scan_landscape(ansatz.LDCA, (2, 4), out_prefix=prefix)
    print(f"\nwrote 201x201 grid to {prefix}.csv (+ _mask.csv, _meta.json)")
