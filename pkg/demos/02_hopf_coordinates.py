"""Hopf coordinates: where circuit states live on the base 4-sphere.

Every two-qubit pure state projects to a point x = (x0..x4) on S^4; its
entanglement is the radius sqrt(x2^2 + x3^2), and the leftover fiber degrees
of freedom are a pair of quaternions whose squared norms always sum to one.

Run:  python demos/02_hopf_coordinates.py
"""
import numpy as np

from pqcgeo import ansatz, geometry

rng = np.random.default_rng(1)

print("circuit family | coordinates pinned to zero | example x at a random draw")
print("-" * 78)
for kind, pinned in ((ansatz.HEA, "x2, x4"), (ansatz.LDCA, "x1, x4"),
                     (ansatz.QGAN, "x3"), (ansatz.SHEA, "none")):
    theta = ansatz.random_parameters(kind, rng)
    x = geometry.base_coordinates(ansatz.prepare_state(kind, theta))
    print(f"{kind:>8s}       | {pinned:<26s} | " + " ".join(f"{v:+.3f}" for v in x))

print("\nfull report for one ldca state:")
state = ansatz.prepare_state(ansatz.LDCA, [0.3, 1.2, 0.5, 0.9, 0.4])
base = geometry.hopf_base(state)
fiber = geometry.hopf_fiber(state)
print(f"  x            = {np.round(base.x, 6)}")
print(f"  sum x^2      = {float(base.x @ base.x):.12f}")
print(f"  theta_A      = {base.theta_a:.6f}")
print(f"  phi_A        = {base.phi_a}")
print(f"  chi          = {base.chi}")
print(f"  xi           = {base.xi:.6f}")
print(f"  singular     = {base.singular}")
print(f"  q+           = {np.round(fiber.q_plus, 6)}")
print(f"  q-           = {np.round(fiber.q_minus, 6)}")
print(f"  |q+|^2+|q-|^2 = "
      f"{geometry.quat_norm2(fiber.q_plus) + geometry.quat_norm2(fiber.q_minus):.12f}")
print(f"  concurrence  = {geometry.concurrence(state):.6f} "
      f"(= sqrt(x2^2 + x3^2) = {np.hypot(base.x[2], base.x[3]):.6f})")
