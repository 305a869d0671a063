"""Graded Betti diagrams with exact rational entries.

A diagram is a finitely supported table indexed by homological degree
(column ``i``) and row ``j``; the entry in column ``i``, row ``j`` is the
graded Betti number in internal degree ``i + j``.  Internally entries are
keyed by ``(column, degree)`` so that the diagram product is a plain 2-D
convolution; every public accessor speaks ``(column, row)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Iterator, Mapping

__all__ = [
    "BettiDiagram",
    "IDENTITY",
    "entry",
    "add",
    "scale",
    "odot",
    "pdim",
    "reg",
    "twist",
    "clear_denominators",
    "total_betti",
]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Betti entries must be exact rationals, got {type(value).__name__}")


class BettiDiagram:
    """Immutable, finitely supported table of rationals.

    ``BettiDiagram({(i, row): value, ...})`` builds a diagram from
    ``(column, row)`` keys.  Zero values are dropped, so two diagrams compare
    equal exactly when they have the same nonzero entries.
    """

    __slots__ = ("_data", "_hash")

    def __init__(self, entries: Mapping[tuple[int, int], object] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data: dict[tuple[int, int], Fraction] = {}
        for (i, row), value in items:
            i, row = int(i), int(row)
            if i < 0:
                raise ValueError(f"column index must be nonnegative, got {i}")
            key = (i, i + row)
            data[key] = data.get(key, Fraction(0)) + _as_fraction(value)
        self._data = {k: v for k, v in data.items() if v != 0}
        self._hash = None

    @classmethod
    def _from_degree_data(cls, data: dict[tuple[int, int], Fraction]) -> BettiDiagram:
        out = object.__new__(cls)
        out._data = {k: v for k, v in data.items() if v != 0}
        out._hash = None
        return out

    @classmethod
    def from_degrees(cls, entries: Mapping[tuple[int, int], object]) -> BettiDiagram:
        """Build from ``(column, degree)`` keys, i.e. ``beta_{i,j}`` indexing."""
        data: dict[tuple[int, int], Fraction] = {}
        for (i, deg), value in entries.items():
            if i < 0:
                raise ValueError(f"column index must be nonnegative, got {i}")
            data[(int(i), int(deg))] = data.get((int(i), int(deg)), Fraction(0)) + _as_fraction(value)
        return cls._from_degree_data(data)

    @classmethod
    def from_table(cls, table: Iterable[Iterable[object]], toprow: int = 0) -> BettiDiagram:
        """Build from a list of display rows; ``None`` or ``"-"`` mean zero."""
        entries = {}
        for r, line in enumerate(table):
            for i, value in enumerate(line):
                if value is None or value == "-":
                    continue
                entries[(i, toprow + r)] = value
        return cls(entries)

    # -- access -----------------------------------------------------------

    def entry(self, i: int, row: int) -> Fraction:
        return self._data.get((i, i + row), Fraction(0))

    def degree_entry(self, i: int, deg: int) -> Fraction:
        return self._data.get((i, deg), Fraction(0))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.entry(*key)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Nonzero entries as ``((column, row), value)``, sorted."""
        for (i, deg), v in sorted(self._data.items()):
            yield (i, deg - i), v

    def degree_items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Nonzero entries as ``((column, degree), value)``, sorted."""
        return iter(sorted(self._data.items()))

    def support(self) -> frozenset[tuple[int, int]]:
        """Cells holding nonzero entries, in ``(column, degree)`` coordinates."""
        return frozenset(self._data)

    def column(self, i: int) -> dict[int, Fraction]:
        """Nonzero entries of column ``i`` keyed by row."""
        return {deg - i: v for (c, deg), v in self._data.items() if c == i}

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{key}: {v}" for key, v in self.items())
        return f"BettiDiagram({{{body}}})"

    # -- shape ------------------------------------------------------------

    @property
    def pdim(self) -> int:
        if not self._data:
            raise ValueError("pdim is undefined on zero diagram")
        return max(i for i, _ in self._data)

    @property
    def reg(self) -> int:
        if not self._data:
            raise ValueError("reg is undefined on zero diagram")
        return max(deg - i for i, deg in self._data)

    @property
    def top_row(self) -> int:
        if not self._data:
            raise ValueError("top_row is undefined on zero diagram")
        return min(deg - i for i, deg in self._data)

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._data.values())

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._data.values())

    def total_betti(self, i: int) -> Fraction:
        return sum((v for (c, _), v in self._data.items() if c == i), Fraction(0))

    def to_table(self, toprow: int | None = None) -> tuple[int, list[list[Fraction]]]:
        """Dense rows ``toprow .. reg`` over columns ``0 .. pdim``.

        ``toprow`` defaults to ``min(0, top_row)`` so the top-left entry is
        ``beta_{0,0}`` whenever the diagram lives in rows ``>= 0``.
        """
        if not self._data:
            return (0 if toprow is None else toprow), []
        if toprow is None:
            toprow = min(0, self.top_row)
        elif toprow > self.top_row:
            raise ValueError(f"toprow {toprow} would hide entries in row {self.top_row}")
        cols = self.pdim + 1
        table = [[self.entry(i, row) for i in range(cols)] for row in range(toprow, self.reg + 1)]
        return toprow, table

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: BettiDiagram) -> BettiDiagram:
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        data = dict(self._data)
        for k, v in other._data.items():
            data[k] = data.get(k, Fraction(0)) + v
        return BettiDiagram._from_degree_data(data)

    def __neg__(self) -> BettiDiagram:
        return BettiDiagram._from_degree_data({k: -v for k, v in self._data.items()})

    def __sub__(self, other: BettiDiagram) -> BettiDiagram:
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self + (-other)

    def __mul__(self, q) -> BettiDiagram:
        if isinstance(q, BettiDiagram):
            return NotImplemented
        q = _as_fraction(q)
        return BettiDiagram._from_degree_data({k: q * v for k, v in self._data.items()})

    __rmul__ = __mul__

    def __truediv__(self, q) -> BettiDiagram:
        return self * (1 / _as_fraction(q))

    def odot(self, other: BettiDiagram) -> BettiDiagram:
        """Convolution product: columns add and internal degrees add."""
        data: dict[tuple[int, int], Fraction] = {}
        for (i1, d1), v1 in self._data.items():
            for (i2, d2), v2 in other._data.items():
                key = (i1 + i2, d1 + d2)
                data[key] = data.get(key, Fraction(0)) + v1 * v2
        return BettiDiagram._from_degree_data(data)

    __matmul__ = odot

    def twist(self, t: int) -> BettiDiagram:
        """Shift every entry down by ``t`` rows (internal degrees grow by ``t``)."""
        return BettiDiagram._from_degree_data({(i, deg + t): v for (i, deg), v in self._data.items()})


# Betti diagram of the ring itself; the unit for ``odot``.
IDENTITY = BettiDiagram({(0, 0): 1})


def entry(d: BettiDiagram, i: int, row: int) -> Fraction:
    return d.entry(i, row)


def add(x: BettiDiagram, y: BettiDiagram) -> BettiDiagram:
    return x + y


def scale(x: BettiDiagram, q) -> BettiDiagram:
    return x * q


def odot(x: BettiDiagram, y: BettiDiagram) -> BettiDiagram:
    return x.odot(y)


def pdim(d: BettiDiagram) -> int:
    return d.pdim


def reg(d: BettiDiagram) -> int:
    return d.reg


def twist(d: BettiDiagram, t: int) -> BettiDiagram:
    return d.twist(t)


def total_betti(d: BettiDiagram, i: int) -> Fraction:
    return d.total_betti(i)


def clear_denominators(d: BettiDiagram) -> tuple[int, BettiDiagram]:
    """Return ``(D0, D0 * d)`` with ``D0`` the lcm of the entry denominators."""
    d0 = lcm(1, *(v.denominator for _, v in d.degree_items()))
    return d0, d * d0
