"""
A braid identity checked by the Artin action
============================================

Two braid words are equal exactly when they induce the same automorphism of
the free group.  This script builds both sides of the main braid relation for
small genus and compares them that way.
"""

import time

from twistkit import braid_equal, evaluate, theorem3_sides, to_permutation

# For genus 0 the two sides are the same word on two strands.
lhs, rhs = theorem3_sides(0)
print("g = 0:", lhs, "|", rhs)

# For larger genus the words differ letter by letter, so equality needs the
# oracle.  The permutation projection is a cheap necessary condition.
for g in range(1, 6):
    lhs, rhs = theorem3_sides(g)
    t0 = time.perf_counter()
    same = braid_equal(lhs, rhs)
    print(f"g = {g}: {len(lhs.word):3d} vs {len(rhs.word):3d} letters, "
          f"permutation {to_permutation(lhs)}, equal = {same} "
          f"({time.perf_counter() - t0:.3f}s)")

###############################################################################
# The automorphism itself is small.  For genus 1 it moves the four free
# generators as follows.
print(evaluate(theorem3_sides(1)[0]))
