"""Bound states in the spectral gap for a few boundary pairs.

Walks through the closed-form eigenvalue computation, the independent
singular-value scan, and an eigenfunction profile.
"""
import numpy as np

from dirac1d import (
    BoundaryPair,
    classify,
    eigenfunction,
    eigenvalue_oracle_scan,
    eigenvalues_closed_form,
    random_admissible,
)

pairs = {
    "free (C=1, D=0)": BoundaryPair(np.eye(2), np.zeros((2, 2))),
    "C=0, D=1": BoundaryPair(np.zeros((2, 2)), np.eye(2)),
    "C=diag(-1/2, 1/2), D=1": BoundaryPair(np.diag([-0.5, 0.5]), np.eye(2)),
    "C=diag(-1, 1), D=diag(1, 0)": BoundaryPair(np.diag([-1.0, 1.0]), np.diag([1.0, 0.0])),
    "Haar random (seed 5)": random_admissible(5),
}

for name, pair in pairs.items():
    rep = eigenvalues_closed_form(pair)
    print(f"{name}: class {classify(pair).tag}, {rep.total_count} bound state(s)")
    for e in rep.eigenvalues:
        print(f"  lambda = {e.lam:+.12f}  multiplicity {e.multiplicity}  (t = {e.t_root:.6f})")
    scan = eigenvalue_oracle_scan(pair)
    print(f"  scan oracle: {['%+.12f' % x for x in scan]}")

print()
print("eigenfunction of the rank-one pair at lambda = -3m/5, sampled on [0.2, 3]:")
pair = pairs["C=diag(-1, 1), D=diag(1, 0)"]
e = eigenvalues_closed_form(pair).eigenvalues[0]
for x in np.linspace(0.2, 3.0, 8):
    val = eigenfunction(pair, e, 0, float(x))
    print(f"  x = {x:4.2f}  |f| = {np.linalg.norm(val):.6f}")
