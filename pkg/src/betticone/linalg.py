"""Exact linear algebra for the denominator bound.

Everything here is over ``Fraction``/``int``; determinants use fraction-free
(Bareiss) elimination so intermediate values stay integral.

The bound ``d'`` for a family of diagrams is the lcm of the nonzero maximal
minors of ``A = (v_1 ... v_s | I_N)``.  Expanding such a minor along its
identity columns leaves a ``k x k`` minor of ``V = (v_1 ... v_s)``, so the same
number is the lcm of *all* nonzero minors of ``V``.  :func:`minors_lcm` walks
that smaller space; :func:`maximal_minor_lcm` enumerates ``A`` directly and
serves as the cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Sequence

from .diagram import BettiDiagram

__all__ = [
    "RationalMatrix",
    "SupportBasis",
    "CramerSolution",
    "vectorize",
    "det",
    "rank",
    "maximal_minor_lcm",
    "minors_lcm",
    "cramer_solve",
    "denominator_bound",
]


class RationalMatrix:
    """Dense immutable matrix of ``Fraction`` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Iterable[Iterable[object]], cols: int | None = None):
        entries = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix rows")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], nrows: int | None = None) -> RationalMatrix:
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        if any(len(c) != nrows for c in columns):
            raise ValueError("columns of unequal height")
        return cls(([c[r] for c in columns] for r in range(nrows)), cols=len(columns))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(([int(r == c) for c in range(n)] for r in range(n)), cols=n)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(x) for x in r] for r in self.entries]})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.entries for x in r)

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(r[c] for r in self.entries)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(c) for c in range(self.cols)]

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> RationalMatrix:
        rows = range(self.rows) if rows is None else rows
        cols = range(self.cols) if cols is None else cols
        return RationalMatrix(([self.entries[r][c] for c in cols] for r in rows), cols=len(cols))

    def with_column(self, c: int, v: Sequence[object]) -> RationalMatrix:
        return RationalMatrix(
            ([v[r] if k == c else x for k, x in enumerate(row)] for r, row in enumerate(self.entries)),
            cols=self.cols,
        )

    def hstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return RationalMatrix((a + b for a, b in zip(self.entries, other.entries)), cols=self.cols + other.cols)

    def __matmul__(self, v: Sequence[object]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum((x * Fraction(y) for x, y in zip(row, v)), Fraction(0)) for row in self.entries)


@dataclass(frozen=True)
class SupportBasis:
    """Ordered coordinate cells ``(column, degree)`` for vectorizing diagrams.

    Cells use internal degree, matching ``beta_{i,j}`` indexing: the basis
    ``[(0,0), (0,1), (1,1), (1,2)]`` reads ``[b00, b01, b11, b12]``.
    """

    cells: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cells = tuple((int(i), int(d)) for i, d in self.cells)
        if len(set(cells)) != len(cells):
            raise ValueError("duplicate cells in support basis")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def reduced(cls, diagrams: Iterable[BettiDiagram]) -> SupportBasis:
        """Union of the supports, column-major."""
        cells: set[tuple[int, int]] = set()
        for d in diagrams:
            cells |= d.support()
        return cls(tuple(sorted(cells)))

    @classmethod
    def full(cls, pdim: int, reg: int, toprow: int = 0) -> SupportBasis:
        """Every cell of the rectangle: columns ``0..pdim``, rows ``toprow..reg``."""
        return cls(tuple((i, i + row) for i in range(pdim + 1) for row in range(toprow, reg + 1)))

    @classmethod
    def enclosing(cls, diagrams: Iterable[BettiDiagram]) -> SupportBasis:
        """Smallest full rectangle (top row 0) holding every diagram."""
        diagrams = [d for d in diagrams if d]
        return cls.full(
            max(d.pdim for d in diagrams),
            max(d.reg for d in diagrams),
            min(0, *(d.top_row for d in diagrams)),
        )

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)


def vectorize(d: BettiDiagram, basis: SupportBasis) -> tuple[Fraction, ...]:
    missing = d.support() - set(basis.cells)
    if missing:
        raise ValueError(f"support not covered by basis: {sorted(missing)}")
    return tuple(d.degree_entry(i, deg) for i, deg in basis.cells)


def _integer_rows(M: RationalMatrix) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns rows and the product of the scales."""
    rows, scale = [], 1
    for r in M.entries:
        s = lcm(1, *(x.denominator for x in r))
        rows.append([int(x * s) for x in r])
        scale *= s
    return rows, scale


def _bareiss(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix; consumes ``rows``."""
    n = len(rows)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - f * rk[j]) // prev
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det(M: RationalMatrix) -> Fraction:
    if not M.is_square:
        raise ValueError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    rows, scale = _integer_rows(M)
    return Fraction(_bareiss(rows), scale)


def rank(M: RationalMatrix) -> int:
    rows = [list(r) for r in M.entries]
    r = 0
    for c in range(M.cols):
        piv = next((k for k in range(r, M.rows) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for k in range(r + 1, M.rows):
            if rows[k][c] != 0:
                f = rows[k][c] / rows[r][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
        if r == M.rows:
            break
    return r


def maximal_minor_lcm(A: RationalMatrix) -> int:
    """lcm of ``|minor|`` over all nonzero ``N x N`` minors, ``N = A.rows``.

    Enumerates all ``C(cols, N)`` column subsets, so only usable on small
    matrices; :func:`minors_lcm` is the scalable route for ``(V | I)``.
    """
    if not A.is_integral():
        raise ValueError("maximal_minor_lcm needs an integer matrix")
    n = A.rows
    if A.cols < n or rank(A) < n:
        raise ValueError("basis columns cannot span: rank below row count")
    cols = [[int(x) for x in A.column(c)] for c in range(A.cols)]
    out = 1
    for subset in combinations(range(A.cols), n):
        d = _bareiss([[cols[c][r] for c in subset] for r in range(n)])
        if d:
            out = lcm(out, abs(d))
    return out


def _independent_column_sets(cols: list[list[int]], nrows: int):
    """Yield column index tuples whose columns are linearly independent.

    Depth-first in lexicographic order, carrying a reduced echelon basis so
    dependent prefixes are cut with all their supersets.
    """
    ncols = len(cols)

    def reduce(vec, basis):
        vec = [Fraction(x) for x in vec]
        for piv, b in basis:
            if vec[piv]:
                f = vec[piv] / b[piv]
                vec = [x - f * y for x, y in zip(vec, b)]
        return vec

    def walk(start, chosen, basis):
        for c in range(start, ncols):
            v = reduce(cols[c], basis)
            piv = next((r for r in range(nrows) if v[r]), None)
            if piv is None:
                continue
            nxt = chosen + (c,)
            yield nxt
            yield from walk(c + 1, nxt, basis + [(piv, v)])

    yield from walk(0, (), [])


def minors_lcm(V: RationalMatrix) -> int:
    """lcm of ``|minor|`` over all nonzero square minors of ``V``, of every size.

    Equals :func:`maximal_minor_lcm` of ``(V | I)`` (and is 1 for an empty
    ``V``).  Column sets are restricted to independent ones and row sets to
    rows where the chosen columns are not all zero.
    """
    if not V.is_integral():
        raise ValueError("minors_lcm needs an integer matrix")
    cols = [[int(x) for x in V.column(c)] for c in range(V.cols)]
    out = 1
    for S in _independent_column_sets(cols, V.rows):
        k = len(S)
        live = [r for r in range(V.rows) if any(cols[c][r] for c in S)]
        for R in combinations(live, k):
            d = _bareiss([[cols[c][r] for c in S] for r in R])
            if d:
                out = lcm(out, abs(d))
    return out


def count_minor_work(V: RationalMatrix) -> int:
    """Upper bound on the number of determinants :func:`minors_lcm` may take."""
    n, s = V.rows, V.cols
    return sum(comb(n, k) * comb(s, k) for k in range(1, min(n, s) + 1))


@dataclass(frozen=True)
class CramerSolution:
    """Solution of ``B x = v`` with its Cramer witnesses ``x_k = numerators[k] / det``."""

    values: tuple[Fraction, ...]
    det: Fraction
    numerators: tuple[Fraction, ...]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def cramer_solve(B: RationalMatrix, v: Sequence[object]) -> CramerSolution:
    if not B.is_square:
        raise ValueError("Cramer's rule needs a square matrix")
    if len(v) != B.rows:
        raise ValueError("right-hand side has the wrong length")
    d = det(B)
    if d == 0:
        raise ValueError("singular matrix")
    nums = tuple(det(B.with_column(k, v)) for k in range(B.cols))
    return CramerSolution(tuple(x / d for x in nums), d, nums)


def family_matrix(diagrams: Sequence[BettiDiagram], basis: SupportBasis) -> RationalMatrix:
    """``V`` with one column per vectorized diagram."""
    return RationalMatrix.from_columns([vectorize(d, basis) for d in diagrams], nrows=len(basis))


def denominator_bound(
    diagrams: Sequence[BettiDiagram],
    basis: SupportBasis | None = None,
    method: str = "minors",
) -> int:
    """``d'`` for a family: scaling a nonnegative rational combination by it
    makes a nonnegative integral combination exist.

    ``basis`` defaults to the union of the diagrams' supports.  ``method`` is
    ``"minors"`` (all minors of ``V``) or ``"brute"`` (maximal minors of
    ``(V | I)`` enumerated directly).
    """
    diagrams = list(diagrams)
    if any(not d for d in diagrams):
        raise ValueError("denominator bound needs nonzero diagrams")
    if basis is None:
        basis = SupportBasis.reduced(diagrams)
    V = family_matrix(diagrams, basis)
    if method == "minors":
        return minors_lcm(V)
    if method == "brute":
        return maximal_minor_lcm(V.hstack(RationalMatrix.identity(len(basis))))
    raise ValueError(f"unknown method {method!r}")
