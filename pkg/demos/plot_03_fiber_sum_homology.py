"""
First homology of the fiber sums X_n
====================================

H_1 of a Lefschetz fibration is H_1 of the fiber modulo the vanishing
cycles.  A Smith normal form of the class matrix reads off the group.
"""

from twistkit import abelianization, paper_presentation, tietze_eliminate, vanishing_cycle_classes
from twistkit.snf import smith_normal_form
import numpy as np

g, n = 4, 3
classes = vanishing_cycle_classes(g, n)
rows = np.array([c.vector for c in classes], dtype=object)
D, U, V = smith_normal_form(rows)
print(f"{rows.shape[0]} vanishing cycles, diagonal {[D[i, i] for i in range(2 * g)]}")
print("H_1(X_n) =", abelianization(classes, g))

###############################################################################
# Even genus gives Z + Z_n for every n.
for g in (2, 4, 6):
    print(g, [str(abelianization(vanishing_cycle_classes(g, n), g)) for n in range(1, 6)])

###############################################################################
# Odd genus, with the conjugating curves taken as written, loses the free
# summand.  The failure is kept visible on purpose.
for g in (3, 5):
    print(g, [str(abelianization(vanishing_cycle_classes(g, n), g)) for n in range(1, 6)])

###############################################################################
# The even-genus presentation can also be simplified at the word level.  The
# commutator words are opaque symbols, so this is a cross-check and not a
# proof.
p = paper_presentation(4, 3)
q = tietze_eliminate(p)
print(len(p.generators), "generators before,", len(q.generators), "after")
print(q)
print("abelianized:", q.abelianization())
