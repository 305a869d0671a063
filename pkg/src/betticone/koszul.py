"""Determining vectors and Betti diagrams of complete intersections.

A complete intersection ``R(-a0) / (f_1, ..., f_c)`` is resolved by a twisted
Koszul complex, so its Betti diagram depends only on the twist ``a0`` and the
degrees ``a_1 <= ... <= a_c``.  Column ``i`` in internal degree ``s`` counts
the ``i``-element index subsets of the degrees summing to ``s - a0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .diagram import BettiDiagram

__all__ = [
    "DeterminingVector",
    "as_vector",
    "ci_diagram",
    "subset_sum_counts",
    "koszul_factor",
    "vector_leq",
]

_VECTOR_RE = re.compile(r"^\s*\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*,?\s*\)?\s*$")


@dataclass(frozen=True, order=True)
class DeterminingVector:
    """Twist plus nondecreasing generator degrees.

    Unsorted degrees are accepted and sorted.  Ordering is lexicographic on
    ``(twist, degrees)``, which is also the candidate order used by the
    decomposition search.
    """

    twist: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(sorted(int(a) for a in self.degrees))
        if not degrees:
            raise ValueError("a determining vector needs codimension c >= 1")
        if degrees[0] < 1:
            raise ValueError(f"generator degrees must be positive, got {degrees}")
        object.__setattr__(self, "twist", int(self.twist))
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def of(cls, values: Sequence[int]) -> DeterminingVector:
        """From ``(a0, a1, ..., ac)``."""
        values = list(values)
        if len(values) < 2:
            raise ValueError(f"codim 0 vector {tuple(values)} rejected: need (a0, a1, ..., ac) with c >= 1")
        return cls(values[0], tuple(values[1:]))

    @classmethod
    def parse(cls, text: str) -> DeterminingVector:
        """Parse the literal form ``"(1,2,2,3)"``."""
        m = _VECTOR_RE.match(text)
        if not m:
            raise ValueError(f"not a determining vector literal: {text!r}")
        return cls.of(int(tok) for tok in m.group(1).split(","))

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def regularity(self) -> int:
        return self.twist + sum(self.degrees) - self.codim

    def as_tuple(self) -> tuple[int, ...]:
        return (self.twist, *self.degrees)

    def shifted(self, t: int) -> DeterminingVector:
        return DeterminingVector(self.twist + t, self.degrees)

    def __iter__(self):
        return iter(self.as_tuple())

    def __len__(self) -> int:
        return 1 + self.codim

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.as_tuple())) + ")"


def as_vector(a) -> DeterminingVector:
    if isinstance(a, DeterminingVector):
        return a
    if isinstance(a, str):
        return DeterminingVector.parse(a)
    return DeterminingVector.of(a)


def subset_sum_counts(degrees: Iterable[int]) -> list[dict[int, int]]:
    """``counts[i][s]`` = number of ``i``-element index subsets summing to ``s``.

    Coefficients of ``prod_k (1 + t x^{a_k})``; repeated degrees are distinct
    positions and so contribute multiplicity.
    """
    counts: list[dict[int, int]] = [{0: 1}]
    for a in degrees:
        counts.append({})
        for i in range(len(counts) - 1, 0, -1):
            row = counts[i]
            for s, n in counts[i - 1].items():
                row[s + a] = row.get(s + a, 0) + n
    return counts


@lru_cache(maxsize=4096)
def _ci_diagram(a: DeterminingVector) -> BettiDiagram:
    data = {}
    for i, sums in enumerate(subset_sum_counts(a.degrees)):
        for s, n in sums.items():
            data[(i, a.twist + s)] = n
    return BettiDiagram.from_degrees(data)


def ci_diagram(a) -> BettiDiagram:
    """Betti diagram of the complete intersection with determining vector ``a``.

    >>> ci_diagram((0, 2, 2)).entry(1, 1)
    Fraction(2, 1)
    """
    return _ci_diagram(as_vector(a))


def koszul_factor(a, i: int) -> tuple[DeterminingVector, DeterminingVector]:
    """Split off the ``i``-th degree (1-based), keeping the twist on the first factor.

    ``ci_diagram(a) == ci_diagram(rest).odot(ci_diagram(single))`` where
    ``single`` carries twist 0.
    """
    a = as_vector(a)
    if a.codim < 2:
        raise ValueError(f"{a} has codimension {a.codim}; no proper Koszul factor")
    if not 1 <= i <= a.codim:
        raise IndexError(f"degree index {i} outside 1..{a.codim}")
    rest = a.degrees[: i - 1] + a.degrees[i:]
    return DeterminingVector(a.twist, rest), DeterminingVector(0, (a.degrees[i - 1],))


def vector_leq(a, b) -> bool:
    """Coordinatewise order; vectors of different codimension are incomparable."""
    a, b = as_vector(a), as_vector(b)
    if a.codim != b.codim:
        return False
    return all(x <= y for x, y in zip(a.as_tuple(), b.as_tuple()))
