"""
Decomposing a diagram into complete intersections
=================================================

``decompose`` returns every integral decomposition of ``D * gamma`` at the
working scale, or ``None`` once non-membership has been certified at the
denominator bound.
"""

from fractions import Fraction

from betticone import BettiDiagram, ci_diagram, decompose, decompose_report, parse_text

# a 2x2 diagram with a unique decomposition
gamma = BettiDiagram.from_table([[2, 1], [2, 3]])
for dec in decompose(gamma):
    print(dec)

# the literal enumeration visits all 15 compositions of m = 4 into 3 parts
report = decompose_report(gamma, prune=False, d_prime="exact")
print("tuples examined:", report.tuples_examined, "D =", report.D)

# rational input: denominators are cleared first
half = BettiDiagram.from_table([[1, Fraction(1, 2)], [1, Fraction(3, 2)]])
print(decompose(half)[0], "with D =", decompose(half)[0].D)

# a module that is not a complete intersection, read from the text format
cokernel = parse_text("""
rows 4 cols 3 toprow 0
2 - -
- 3 -
- 1 1
- - 1
""")
print(decompose(cokernel)[0])

# two different decompositions of the same diagram
gamma = ci_diagram((0, 2, 2, 2)) + ci_diagram((1, 2, 2, 3))
for dec in decompose(gamma):
    print(dec)

# no complete intersection has this shape
print(decompose(BettiDiagram({(0, 0): 1, (5, 5): 1})))
