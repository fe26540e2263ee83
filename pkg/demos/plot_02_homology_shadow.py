"""
Dehn twists acting on first homology
====================================

Every twist word maps to a product of symplectic transvections.  The relation
word W should act as the identity, while the hyperelliptic involution acts
as -I.
"""

import numpy as np

from twistkit import homology as hom

g = 4
W = hom.relation_word(g)
print(f"W has {len(W.curves())} twists in genus {g}")

M = hom.evaluate_twistword(W)
print("W acts trivially:", (M == hom.identity(g)).all())

# Each partial product is still symplectic, but most of them are far from I.
partial = hom.identity(g)
for k, label in enumerate(W.curves()[: g + 2]):
    partial = partial.dot(hom.transvection(hom.curve_class(label, g), 1))
    moved = int(np.count_nonzero(partial - hom.identity(g)))
    print(f"after t_{label:3s}: {moved:2d} nonzero entries of M - I")

###############################################################################
# The classes of the B-curves come out of the braid conjugation and are not
# typed in by hand.
for k in range(g + 1):
    print(f"[B{k}] = {hom.b_class(g, k)}")

###############################################################################
# In odd genus the chain relation produces two boundary curves.  On homology
# both have the class of the middle a-curve.
for g in (3, 5, 7):
    alpha, beta = hom.chain_boundary_classes(g)
    print(f"g = {g}: boundary classes {alpha}, {beta}")
