"""Quantum geometric tensors, their block/diagonal approximations, and
regularized inversion.

The dense Fubini-Study metric of the hea and ldca families is singular for
every parameter value (redundant parameterization), so natural-gradient steps
must go through a pseudo-inverse or a ridge. qgan and shea are generically
non-singular but can come close to degeneracy.

Run:  python demos/05_metric_tensors_and_approximations.py
"""
import numpy as np

from pqcgeo import ansatz, qgt

rng = np.random.default_rng(3)

for kind in ansatz.ANSATZE:
    theta = ansatz.random_parameters(kind, rng)
    dense = qgt.fs_metric(kind, theta, mode="dense")
    lam = np.linalg.eigvalsh(dense)
    print(f"{kind:>8s}: m = {len(theta)}, eigenvalues "
          + " ".join(f"{v:8.1e}" for v in lam))

print("\nldca dense metric at a random point (gauge parameters give zero rows):")
theta = ansatz.random_parameters(ansatz.LDCA, rng)
print(np.round(qgt.fs_metric(ansatz.LDCA, theta), 6))

print("\nblock mask for qgan (per-layer blocks):")
print(qgt.block_mask(ansatz.QGAN, "block").astype(int))

g = np.diag([4.0, 0.0])
print("\ninverting diag(4, 0):")
print("  pseudo-inverse      ->", np.diag(qgt.invert_metric(g, qgt.PseudoInverse())))
print("  tikhonov eps=1e-3   ->", np.diag(qgt.invert_metric(g, qgt.Tikhonov(1e-3))))
