"""
Betti diagrams of complete intersections
========================================

A complete intersection is pinned down by its twist and generator degrees.
Its Betti diagram counts index subsets of the degrees by size and sum.
"""

from betticone import DeterminingVector, ci_diagram, format_text, koszul_factor, odot

# the twist comes first, then the degrees
a = DeterminingVector.parse("(1,2,2,3)")
print(a, "codim", a.codim, "regularity", a.regularity)

# rows start at 0, so the twist-1 module has an empty top row
beta = ci_diagram(a)
print(format_text(beta))

# column sums are binomial coefficients
print([int(beta.total_betti(i)) for i in range(a.codim + 1)])

# split off one generator; the split-off factor carries no twist
rest, single = koszul_factor(a, 3)
print(rest, single, odot(ci_diagram(rest), ci_diagram(single)) == beta)

# linear forms give a single row of binomials
print(format_text(ci_diagram((0, 1, 1, 1, 1))))
