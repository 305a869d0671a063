"""
The denominator bound
=====================

If ``gamma`` is a nonnegative rational combination of a family of diagrams,
then ``d * d' * gamma`` is a nonnegative integral combination, where ``d``
clears the denominators of ``gamma`` and ``d'`` is the lcm of the nonzero
maximal minors of ``(v_1 ... v_s | I)``.
"""

from fractions import Fraction

from betticone import SupportBasis, ci_diagram, clear_denominators, denominator_bound

family = [ci_diagram(v) for v in [(0, 2, 2, 2), (1, 2, 2, 3), (0, 2, 2, 4), (1, 1, 2, 2)]]
gamma = family[0] / 4 + family[1] / 4 + family[2] * Fraction(3, 4) + family[3] * Fraction(3, 4)

d, _ = clear_denominators(gamma)
full = SupportBasis.full(gamma.pdim, gamma.reg)
print("d =", d, " N =", len(full), " d' =", denominator_bound(family, full))

# the union of supports gives the same bound: zero rows only add zero minors
reduced = SupportBasis.reduced(family)
print("reduced N =", len(reduced), " d' =", denominator_bound(family, reduced))

# direct enumeration of the 24 x 28 maximal minors agrees (takes a few seconds)
print("brute force d' =", denominator_bound(family, full, method="brute"))
