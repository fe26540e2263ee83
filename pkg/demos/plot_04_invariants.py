"""
Euler characteristic, signature and Betti numbers
=================================================

Even genus uses the signature formula for hyperelliptic fibrations.  Odd
genus goes through a parity and definiteness argument where some steps are
geometric premises.
"""

from twistkit import is_positive_definite, matrix_A
from twistkit.invariants import invariant_report

for g in (2, 4, 6, 8):
    r = invariant_report(g)
    print(f"g = {g}: chi = {r.chi:3d}, sigma = {r.sigma}, b1 = {r.b1}, "
          f"b2+ = {r.b2plus}, b2- = {r.b2minus}")

###############################################################################
# The seven (-2)-spheres span a negative definite lattice.  Equivalently A is
# positive definite, which the exact leading minors show.
print(is_positive_definite(matrix_A()))

r = invariant_report(3)
for kind, what in r.steps:
    print(f"  [{kind:8s}] {what}")
print("result:", r.to_json())
