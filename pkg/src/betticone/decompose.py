"""Decomposing diagrams into Betti diagrams of complete intersections.

The pipeline:

1. normalize ``gamma`` so its top row is 0 and clear denominators (``d``);
2. collect the twists in column 0 (``C0``) and the internal degrees in
   column 1 (``C1``) and list every determining vector compatible with them;
3. pick a scale ``D = d * d'`` where ``d'`` is the minors bound of the
   candidate family;
4. the budget ``m`` is the column-0 total of ``D * gamma`` (each complete
   intersection contributes exactly one 1 there);
5. find every ``(s_1, ..., s_r)`` with ``sum s_i = m`` and
   ``D * gamma = sum s_i beta(a_i)``.

Step 5 is a depth-first search over the candidates in lexicographic order.
With pruning on, a branch is cut when a partial sum exceeds ``D * gamma`` in
some cell, or when a cell still has positive residual after the last
candidate able to reach it was placed.  Both cuts are exact: the answer set is
the same as for the literal enumeration of all ``C(m + r - 1, r - 1)`` tuples.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .diagram import BettiDiagram, clear_denominators
from .koszul import DeterminingVector, as_vector, ci_diagram, vector_leq
from .linalg import SupportBasis, denominator_bound

__all__ = [
    "CandidateSet",
    "Decomposition",
    "DecompositionReport",
    "candidates",
    "decompose",
    "decompose_report",
    "verify",
    "extremality_check",
    "chain_filter",
]

log = logging.getLogger(__name__)

PROGRESS_EVERY = 200_000


@dataclass(frozen=True)
class CandidateSet:
    C0: frozenset[int]
    C1: frozenset[int]
    vectors: tuple[DeterminingVector, ...]

    @property
    def r(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __contains__(self, a) -> bool:
        return as_vector(a) in self.vectors


@dataclass(frozen=True)
class Decomposition:
    """``gamma = (1/D) * sum coeff * beta(vector)`` with positive integer coefficients."""

    terms: tuple[tuple[DeterminingVector, int], ...]
    D: int
    m: int
    complete: bool = True
    tuples_examined: int = 0

    @property
    def vectors(self) -> tuple[DeterminingVector, ...]:
        return tuple(a for a, _ in self.terms)

    def as_diagram(self) -> BettiDiagram:
        total = BettiDiagram()
        for a, s in self.terms:
            total = total + ci_diagram(a) * s
        return total / self.D

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "m": self.m,
            "terms": [{"vector": list(a.as_tuple()), "coeff": s} for a, s in self.terms],
            "complete": self.complete,
            "tuples_examined": self.tuples_examined,
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        body = " + ".join(f"{'' if s == 1 else s}β{a}" for a, s in self.terms)
        return body if self.D == 1 else f"1/{self.D} ({body})"


@dataclass
class DecompositionReport:
    """Everything a decomposition run learned, including the NULL case.

    ``member`` is True (found), False (certified non-member at the full
    bound) or None (inconclusive: the search ran only below the bound).
    """

    gamma: BettiDiagram
    decompositions: list[Decomposition]
    member: bool | None
    complete: bool
    shift: int = 0
    d: int = 1
    d_prime: int | None = None
    D: int = 1
    m: int = 0
    candidates: CandidateSet | None = None
    tuples_examined: int = 0
    scales_tried: list[int] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "complete": self.complete,
            "shift": self.shift,
            "d": self.d,
            "d_prime": self.d_prime,
            "D": self.D,
            "m": self.m,
            "r": 0 if self.candidates is None else self.candidates.r,
            "tuples_examined": self.tuples_examined,
            "decompositions": [dec.to_json() for dec in self.decompositions],
            "notes": list(self.notes),
        }


def candidates(gamma: BettiDiagram, w: int | None = None, h: int | None = None) -> CandidateSet:
    """Every determining vector ``(j, a_1..a_c)`` with ``j`` a column-0 row,
    each ``j + a_i`` a column-1 degree, ``1 <= c <= w`` and regularity at most ``h``.
    """
    if not gamma.is_nonnegative():
        raise ValueError("candidates need a nonnegative diagram")
    if not gamma:
        return CandidateSet(frozenset(), frozenset(), ())
    w = gamma.pdim if w is None else w
    h = gamma.reg if h is None else h
    C0 = frozenset(gamma.column(0))
    C1 = frozenset(row + 1 for row in gamma.column(1))
    found = []
    for j in sorted(C0):
        degrees = sorted(s - j for s in C1 if s - j >= 1)
        for c in range(1, w + 1):
            for degs in combinations_with_replacement(degrees, c):
                if j + sum(degs) <= h + c:
                    found.append(DeterminingVector(j, degs))
    return CandidateSet(C0, C1, tuple(sorted(set(found))))


def _cells_and_columns(target: BettiDiagram, diagrams: Sequence[BettiDiagram]):
    cells = sorted(target.support().union(*(d.support() for d in diagrams)))
    index = {cell: k for k, cell in enumerate(cells)}
    goal = [0] * len(cells)
    for cell, v in target.degree_items():
        goal[index[cell]] = int(v)
    cols = [[(index[cell], int(v)) for cell, v in d.degree_items()] for d in diagrams]
    return goal, cols


def _search_unpruned(goal, cols, m, max_solutions):
    """Literal enumeration of every composition of ``m`` into ``r`` parts."""
    r = len(cols)
    solutions, examined = [], 0
    if r == 0:
        return solutions, examined, False
    # stars and bars: bar positions among m + r - 1 slots
    for bars in combinations(range(m + r - 1), r - 1):
        s, prev = [], -1
        for b in bars:
            s.append(b - prev - 1)
            prev = b
        s.append(m + r - 2 - prev)
        examined += 1
        if examined % PROGRESS_EVERY == 0:
            log.info("examined %d tuples", examined)
        total = [0] * len(goal)
        for k, sk in enumerate(s):
            if sk:
                for idx, v in cols[k]:
                    total[idx] += sk * v
        if total == goal:
            solutions.append(tuple(s))
            if max_solutions is not None and len(solutions) >= max_solutions:
                return solutions, examined, True
    return solutions, examined, False


def _search_pruned(goal, cols, m, max_solutions):
    """Depth-first search with the dominance and last-cover cuts."""
    r = len(cols)
    n = len(goal)
    last_cover = [-1] * n
    for k, col in enumerate(cols):
        for idx, _ in col:
            last_cover[idx] = k
    if any(g and last_cover[i] < 0 for i, g in enumerate(goal)):
        return [], 0, False
    closes = [[] for _ in range(r)]
    for idx, k in enumerate(last_cover):
        if k >= 0:
            closes[k].append(idx)

    residual = list(goal)
    chosen = [0] * r
    solutions: list[tuple[int, ...]] = []
    state = {"examined": 0, "stop": False}

    def walk(k):
        if k == r:
            state["examined"] += 1
            if state["examined"] % PROGRESS_EVERY == 0:
                log.info("examined %d tuples", state["examined"])
            if not any(residual) and sum(chosen) == m:
                solutions.append(tuple(chosen))
                if max_solutions is not None and len(solutions) >= max_solutions:
                    state["stop"] = True
            return
        col = cols[k]
        top = min(residual[idx] // v for idx, v in col)
        for idx, v in col:
            residual[idx] -= top * v
        s = top
        while True:
            if all(residual[idx] == 0 for idx in closes[k]):
                chosen[k] = s
                walk(k + 1)
                if state["stop"]:
                    break
            if s == 0:
                break
            s -= 1
            for idx, v in col:
                residual[idx] += v
        # restore
        for idx, v in col:
            residual[idx] += s * v
        chosen[k] = 0

    walk(0)
    return solutions, state["examined"], state["stop"]


def search(target: BettiDiagram, vectors: Sequence[DeterminingVector], m: int,
           prune: bool = True, max_solutions: int | None = None):
    """All coefficient tuples ``s`` with ``sum s = m`` and ``sum s_i beta(a_i) == target``.

    Returns ``(solutions, tuples_examined, truncated)``.  ``target`` must be
    integral and nonnegative.
    """
    diagrams = [ci_diagram(a) for a in vectors]
    goal, cols = _cells_and_columns(target, diagrams)
    if prune:
        return _search_pruned(goal, cols, m, max_solutions)
    return _search_unpruned(goal, cols, m, max_solutions)


def _parse_d_prime(mode) -> tuple[str, int | None]:
    if isinstance(mode, int) and not isinstance(mode, bool):
        if mode < 1:
            raise ValueError("d' override must be a positive integer")
        return "override", mode
    if mode in ("escalate", "exact"):
        return mode, None
    if isinstance(mode, str) and mode.startswith("override="):
        return _parse_d_prime(int(mode.split("=", 1)[1]))
    raise ValueError(f"unknown d' mode {mode!r}")


def decompose_report(
    gamma: BettiDiagram,
    embedding: str = "reduced",
    d_prime="escalate",
    max_solutions: int | None = None,
    prune: bool = True,
    variables: int | None = None,
) -> DecompositionReport:
    """Run the full decomposition and return a :class:`DecompositionReport`.

    ``d_prime`` is ``"escalate"`` (search at ``D = d`` first, compute the
    minors bound only if that fails), ``"exact"`` (always search at the
    bound) or a positive integer ``k`` (search only at ``D = d * k``).
    ``embedding`` selects the coordinates used for the bound: ``"reduced"``
    (union of supports) or ``"full"`` (the whole ``pdim x reg`` rectangle).
    """
    if embedding not in ("reduced", "full"):
        raise ValueError(f"unknown embedding {embedding!r}")
    mode, override = _parse_d_prime(d_prime)
    if not gamma.is_nonnegative():
        raise ValueError("decompose needs a diagram with nonnegative entries")

    if not gamma:
        empty = Decomposition((), 1, 0, True, 0)
        return DecompositionReport(gamma, [empty], True, True, notes=["zero diagram: empty decomposition"])

    report = DecompositionReport(gamma, [], None, False)
    top = gamma.top_row
    report.shift = top
    if top:
        report.notes.append(f"twisted by {-top} so the top row is 0")
    g = gamma.twist(-top)
    d, G = clear_denominators(g)
    report.d = d
    w, h = G.pdim, G.reg
    if variables is not None and w > variables:
        raise ValueError(f"pdim {w} exceeds the number of variables {variables}")

    cands = candidates(G, w, h)
    report.candidates = cands
    if w == 0:
        report.notes.append("pdim 0: no candidate of codimension >= 1 exists")
    m1 = sum(G.column(0).values())

    def bound() -> int:
        diagrams = [ci_diagram(a) for a in cands]
        if embedding == "full":
            basis = SupportBasis.full(w, h)
        else:
            basis = SupportBasis.reduced(diagrams + [G])
        if not diagrams:
            return 1
        return denominator_bound(diagrams, basis)

    def run(scale: int):
        report.scales_tried.append(d * scale)
        target = G * scale
        m = int(m1 * scale)
        sols, examined, truncated = search(target, cands.vectors, m, prune, max_solutions)
        report.tuples_examined += examined
        log.info("D=%d m=%d r=%d: %d solutions, %d tuples", d * scale, m, cands.r, len(sols), examined)
        return sols, truncated, m

    if mode == "override":
        scale, at_bound = override, False
        sols, truncated, m = run(scale)
    elif mode == "exact":
        report.d_prime = bound()
        scale, at_bound = report.d_prime, True
        sols, truncated, m = run(scale)
    else:
        scale, at_bound = 1, False
        sols, truncated, m = run(1)
        if not sols:
            report.d_prime = bound()
            if report.d_prime == 1:
                at_bound = True
            else:
                scale, at_bound = report.d_prime, True
                sols, truncated, m = run(scale)

    report.D, report.m = d * scale, m
    report.complete = at_bound and not truncated
    if sols:
        report.member = True
    elif at_bound:
        report.member = False
    else:
        report.notes.append("no decomposition at this scale; below the denominator bound, so inconclusive")

    decs = []
    for s in sols:
        terms = tuple((a.shifted(top), k) for a, k in zip(cands.vectors, s) if k)
        decs.append(Decomposition(terms, report.D, m, report.complete, report.tuples_examined))
    decs.sort(key=lambda dec: dec.terms)
    for dec in decs:
        if not verify(gamma, dec):
            raise RuntimeError(f"search produced an invalid decomposition {dec}")
    report.decompositions = decs
    return report


def decompose(gamma: BettiDiagram, **options) -> list[Decomposition] | None:
    """All integral decompositions at the working scale, or ``None`` (non-member).

    ``None`` is only returned once the search has run at the denominator
    bound.  An inconclusive run (fixed ``d_prime`` override below the bound)
    returns an empty list.  See :func:`decompose_report` for the options.
    """
    report = decompose_report(gamma, **options)
    if report.member is False:
        return None
    return report.decompositions


def verify(gamma: BettiDiagram, dec: Decomposition) -> bool:
    if dec.D < 1 or any(s <= 0 for _, s in dec.terms):
        return False
    total = BettiDiagram()
    for a, s in dec.terms:
        total = total + ci_diagram(a) * s
    return total == gamma * dec.D


def extremality_check(a, p: int = 1) -> bool:
    """Decompose ``p * beta(a)`` into ``p`` integral summands; true iff the
    only way is ``p`` copies of ``beta(a)`` itself.
    """
    a = as_vector(a)
    if p < 1:
        raise ValueError("p must be a positive integer")
    decs = decompose(ci_diagram(a) * p, d_prime=1)
    if not decs:
        return False
    return all(dec.terms == ((a, p),) for dec in decs)


def chain_filter(vectors: Iterable) -> list[tuple[DeterminingVector, ...]]:
    """Maximal chains of the coordinatewise order on ``vectors``."""
    nodes = sorted({as_vector(a) for a in vectors})
    below = {a: [b for b in nodes if b != a and vector_leq(b, a)] for a in nodes}
    above = {a: [b for b in nodes if b != a and vector_leq(a, b)] for a in nodes}
    # covering relation: b covers a when nothing sits strictly between them
    covers = {
        a: [b for b in above[a] if not any(c in above[a] and vector_leq(c, b) for c in below[b])]
        for a in nodes
    }
    chains = []

    def walk(path):
        nxt = covers[path[-1]]
        if not nxt:
            chains.append(tuple(path))
            return
        for b in nxt:
            walk(path + [b])

    for a in nodes:
        if not below[a]:
            walk([a])
    return sorted(chains)
