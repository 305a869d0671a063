"""
Chains and extremal rays
========================

Complete-intersection diagrams span extremal rays: ``p * beta(a)`` only
splits as ``p`` copies of ``beta(a)``.  The coordinatewise order on
determining vectors does not explain every decomposition.
"""

from betticone import BettiDiagram, candidates, chain_filter, decompose, extremality_check, vector_leq

for vec, p in [((0, 2, 2), 2), ((1, 2, 2, 3), 1), ((0, 1, 3, 4), 3)]:
    print(vec, p, extremality_check(vec, p))

gamma = BettiDiagram.from_table([
    [2, 1, "-", "-"],
    ["-", "-", "-", "-"],
    ["-", 2, "-", "-"],
    ["-", 2, 1, "-"],
    ["-", 1, 2, "-"],
    ["-", "-", 2, "-"],
    ["-", "-", "-", "-"],
    ["-", "-", 1, 2],
])
print("candidates:", candidates(gamma).r)
[dec] = decompose(gamma)
print(dec)

a, b = dec.vectors
print("comparable:", vector_leq(a, b) or vector_leq(b, a))
print([[str(v) for v in chain] for chain in chain_filter(dec.vectors)])
