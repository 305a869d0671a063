import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betticone import (
    BettiDiagram,
    Decomposition,
    DeterminingVector,
    SupportBasis,
    candidates,
    chain_filter,
    ci_diagram,
    clear_denominators,
    decompose,
    decompose_report,
    denominator_bound,
    extremality_check,
    twist,
    verify,
)
from betticone.decompose import search
from betticone.linalg import family_matrix, rank
from conftest import vectors
from oracles import brute_compositions

V = DeterminingVector.of


def terms_of(dec):
    return [(a.as_tuple(), s) for a, s in dec.terms]


class TestCandidates:
    def test_worked_example(self, square_gamma):
        cs = candidates(square_gamma)
        assert cs.C0 == {0, 1}
        assert cs.C1 == {1, 2}
        assert [a.as_tuple() for a in cs] == [(0, 1), (0, 2), (1, 1)]
        assert (1, 2) not in cs  # 1 + 2 = 3 is not a column-1 degree

    def test_filters_by_brute_force(self, cokernel_gamma):
        g = cokernel_gamma
        cs = candidates(g)
        assert {(0, 2, 2), (0, 2, 3)} <= {a.as_tuple() for a in cs}
        w, h = g.pdim, g.reg
        expected = set()
        for j in range(-2, 6):
            for c in range(1, 4):
                for degs in combinations_with_replacement(range(1, 8), c):
                    ok = (g.entry(0, j) != 0
                          and all(g.degree_entry(1, j + a) != 0 for a in degs)
                          and c <= w and j + sum(degs) <= h + c)
                    if ok:
                        expected.add((j, *degs))
        assert {a.as_tuple() for a in cs} == expected
        assert [a.as_tuple() for a in cs] == sorted(expected)

    def test_incomparable_candidate_count(self, incomparable_gamma):
        cs = candidates(incomparable_gamma)
        # 32 x 56 matrix: N = 4 * 8 cells, 56 - 32 = 24 candidates
        assert cs.r == 24
        assert {(0, 1, 4, 5), (0, 3, 3, 4)} <= {a.as_tuple() for a in cs}

    def test_free_diagram(self):
        assert candidates(BettiDiagram({(0, 0): 1})).r == 0

    def test_zero(self):
        assert candidates(BettiDiagram()).r == 0

    def test_negative(self):
        with pytest.raises(ValueError):
            candidates(BettiDiagram({(0, 0): -1}))


class TestDecompose:
    def test_worked_example(self, square_gamma):
        decs = decompose(square_gamma)
        assert len(decs) == 1
        assert terms_of(decs[0]) == [((0, 1), 1), ((0, 2), 1), ((1, 1), 2)]
        assert (decs[0].D, decs[0].m) == (1, 4)

    def test_fifteen_tuples_unpruned(self, square_gamma):
        report = decompose_report(square_gamma, prune=False, d_prime="exact")
        assert report.tuples_examined == 15 == comb(4 + 3 - 1, 3 - 1)
        assert report.d_prime == 1 and report.complete
        assert [terms_of(d) for d in report.decompositions] == [[((0, 1), 1), ((0, 2), 1), ((1, 1), 2)]]

    def test_rational_input(self, half_integer_gamma):
        report = decompose_report(half_integer_gamma, d_prime="exact")
        assert (report.d, report.d_prime, report.D) == (2, 1, 2)
        assert [terms_of(d) for d in report.decompositions] == [[((0, 1), 1), ((0, 2), 1), ((1, 1), 2)]]

    def test_cokernel_module(self, cokernel_gamma):
        decs = decompose(cokernel_gamma)
        assert [terms_of(d) for d in decs] == [[((0, 2, 2), 1), ((0, 2, 3), 1)]]
        assert str(decs[0]) == "β(0,2,2) + β(0,2,3)"
        assert verify(cokernel_gamma, decs[0])

    def test_double_decomposition(self):
        g = ci_diagram((0, 2, 2, 2)) + ci_diagram((1, 2, 2, 3))
        found = {tuple(terms_of(d)) for d in decompose(g)}
        assert (((0, 2, 2, 2), 1), ((1, 2, 2, 3), 1)) in found
        assert (((0, 2, 2, 4), 1), ((1, 1, 2, 2), 1)) in found

    def test_incomparable_pair(self, incomparable_gamma):
        decs = decompose(incomparable_gamma)
        assert [terms_of(d) for d in decs] == [[((0, 1, 4, 5), 1), ((0, 3, 3, 4), 1)]]

    def test_non_member(self):
        report = decompose_report(BettiDiagram({(0, 0): 1, (5, 5): 1}))
        assert report.member is False and report.complete
        assert report.d_prime == 1
        assert decompose(BettiDiagram({(0, 0): 1, (5, 5): 1})) is None

    def test_non_member_after_escalation(self):
        # column 0 says one summand, but no single candidate matches
        g = BettiDiagram({(0, 0): 1, (1, 1): 1, (1, 2): 1})
        report = decompose_report(g)
        assert report.candidates.r > 0
        assert report.member is False and report.d_prime is not None

    def test_zero_diagram(self):
        decs = decompose(BettiDiagram())
        assert len(decs) == 1 and decs[0].terms == () and decs[0].m == 0

    def test_free_diagram_is_null(self):
        report = decompose_report(BettiDiagram({(0, 2): 3}))
        assert report.member is False
        assert any("pdim 0" in n for n in report.notes)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            decompose(BettiDiagram({(0, 0): 1, (1, 1): -1}))

    def test_auto_twist(self, cokernel_gamma):
        report = decompose_report(twist(cokernel_gamma, 4))
        assert report.shift == 4
        assert [terms_of(d) for d in report.decompositions] == [[((4, 2, 2), 1), ((4, 2, 3), 1)]]

    def test_override_scales_from_d(self):
        g = (ci_diagram((0, 2)) + ci_diagram((0, 4))) / 2
        [dec] = decompose(g, d_prime=1)
        assert dec.D == 2 and terms_of(dec) == [((0, 2), 1), ((0, 4), 1)]

    def test_override_inconclusive(self):
        g = BettiDiagram({(0, 0): 1, (1, 1): 1, (1, 2): 1})
        report = decompose_report(g, d_prime=1)
        assert report.member is None and not report.complete
        assert decompose(g, d_prime=1) == []

    def test_max_solutions(self):
        g = ci_diagram((0, 2, 2, 2)) + ci_diagram((1, 2, 2, 3))
        report = decompose_report(g, max_solutions=1)
        assert len(report.decompositions) == 1

    def test_variables_bound(self, incomparable_gamma):
        with pytest.raises(ValueError):
            decompose(incomparable_gamma, variables=2)
        assert decompose(incomparable_gamma, variables=3)

    def test_unknown_options(self, square_gamma):
        with pytest.raises(ValueError):
            decompose(square_gamma, embedding="huge")
        with pytest.raises(ValueError):
            decompose(square_gamma, d_prime="sometimes")

    def test_full_embedding_same_answer(self, square_gamma):
        a = decompose_report(square_gamma, d_prime="exact", embedding="full")
        b = decompose_report(square_gamma, d_prime="exact", embedding="reduced")
        assert a.d_prime == b.d_prime
        assert a.decompositions == b.decompositions

    def test_json_record(self, square_gamma):
        rec = decompose(square_gamma)[0].to_json()
        assert rec["D"] == 1 and rec["m"] == 4
        assert rec["terms"] == [
            {"vector": [0, 1], "coeff": 1},
            {"vector": [0, 2], "coeff": 1},
            {"vector": [1, 1], "coeff": 2},
        ]
        assert set(rec) == {"D", "m", "terms", "complete", "tuples_examined"}


class TestVerify:
    def test_accepts(self, cokernel_gamma):
        dec = Decomposition(((V((0, 2, 2)), 1), (V((0, 2, 3)), 1)), D=1, m=2)
        assert verify(cokernel_gamma, dec)

    def test_perturbed(self, cokernel_gamma):
        dec = Decomposition(((V((0, 2, 2)), 2), (V((0, 2, 3)), 1)), D=1, m=3)
        assert not verify(cokernel_gamma, dec)

    def test_linearity(self, cokernel_gamma):
        dec = Decomposition(((V((0, 2, 2)), 1), (V((0, 2, 3)), 1)), D=3, m=2)
        assert verify(cokernel_gamma / 3, dec)

    def test_nonpositive_coefficient(self):
        dec = Decomposition(((V((0, 1)), 0),), D=1, m=0)
        assert not verify(BettiDiagram(), dec)


class TestExtremality:
    @pytest.mark.parametrize("vec,p", [((0, 2, 2), 2), ((1, 2, 2, 3), 1), ((0, 1), 3), ((0, 1, 2, 3), 3)])
    def test_examples(self, vec, p):
        assert extremality_check(vec, p)

    @given(vectors(max_codim=3, max_degree=4, twists=(0, 1)), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_random(self, vec, p):
        assert extremality_check(vec, p)

    def test_sum_of_two_is_not_extremal(self):
        # a sum of two distinct CI diagrams is not a single CI diagram, so the
        # search finds a split other than p copies of one vector
        g = ci_diagram((0, 1)) + ci_diagram((0, 2))
        decs = decompose(g)
        assert all(len(d.terms) == 2 for d in decs)


class TestChains:
    def test_incomparable(self):
        assert chain_filter([(0, 1, 4, 5), (0, 3, 3, 4)]) == [(V((0, 1, 4, 5)),), (V((0, 3, 3, 4)),)]

    def test_single_chain(self):
        assert chain_filter([(0, 1, 2), (0, 2, 2), (0, 1, 1)]) == [(V((0, 1, 1)), V((0, 1, 2)), V((0, 2, 2)))]

    def test_empty(self):
        assert chain_filter([]) == []

    def test_diamond(self):
        chains = chain_filter([(0, 1, 1), (0, 1, 2), (1, 1, 1), (1, 1, 2)])
        assert len(chains) == 2
        assert all(len(c) == 3 for c in chains)

    @given(st.lists(vectors(max_codim=2, max_degree=3, twists=(0, 1)), max_size=6))
    @settings(max_examples=40)
    def test_chain_members_independent(self, vecs):
        for chain in chain_filter(vecs):
            ds = [ci_diagram(a) for a in chain]
            M = family_matrix(ds, SupportBasis.reduced(ds))
            assert rank(M) == len(chain)


def random_member(rng, k=3, coeff=3, max_codim=3, max_deg=3):
    gamma = BettiDiagram()
    for _ in range(rng.randint(1, k)):
        c = rng.randint(1, max_codim)
        vec = (rng.randint(0, 1), *[rng.randint(1, max_deg) for _ in range(c)])
        gamma = gamma + ci_diagram(vec) * rng.randint(1, coeff)
    return gamma


def test_pruned_matches_unpruned_and_oracle():
    rng = random.Random(7)
    checked = 0
    for trial in range(200):
        gamma = random_member(rng) if trial % 3 else random_member(rng) + BettiDiagram({(1, rng.randint(0, 3)): 1})
        cs = candidates(gamma)
        m = sum(gamma.column(0).values())
        r = cs.r
        if r == 0 or comb(int(m) + r - 1, r - 1) > 10_000:
            continue
        pruned, _, _ = search(gamma, cs.vectors, int(m), prune=True)
        unpruned, examined, _ = search(gamma, cs.vectors, int(m), prune=False)
        assert examined == comb(int(m) + r - 1, r - 1)
        assert sorted(pruned) == sorted(unpruned)
        if comb(int(m) + r - 1, r - 1) <= 500:
            oracle = brute_compositions(gamma, [ci_diagram(a) for a in cs], int(m))
            assert sorted(oracle) == sorted(unpruned)
        checked += 1
    assert checked > 50


def test_soundness_of_emitted_decompositions():
    rng = random.Random(11)
    for _ in range(60):
        gamma = random_member(rng)
        for dec in decompose(gamma):
            assert verify(gamma, dec)
            assert all(s > 0 for _, s in dec.terms)
            assert sum(s for _, s in dec.terms) == dec.m


def test_column_zero_partition_holds():
    rng = random.Random(5)
    for _ in range(40):
        gamma = random_member(rng)
        for dec in decompose(gamma):
            by_twist = {}
            for a, s in dec.terms:
                by_twist[a.twist] = by_twist.get(a.twist, 0) + s
            assert by_twist == {row: v * dec.D for row, v in gamma.column(0).items()}


def test_normalization_invariance():
    rng = random.Random(9)
    for _ in range(30):
        gamma = random_member(rng)
        t = rng.randint(-3, 3)
        base = decompose(gamma)
        moved = decompose(twist(gamma, t))
        assert [[(a.shifted(t), s) for a, s in d.terms] for d in base] == [list(d.terms) for d in moved]


@given(vectors(max_codim=3, max_degree=3, twists=(0, 2)), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_ci_input_terms_satisfy_necessary_conditions(vec, p):
    a = V(vec)
    for dec in decompose(ci_diagram(a) * p, d_prime=1):
        for b, _ in dec.terms:
            assert b.twist == a.twist and b.codim == a.codim
            assert sum(b.degrees) == sum(a.degrees)


def test_denominator_bound_soundness():
    """Scaling a rational combination by d * d' makes an integral one reachable."""
    rng = random.Random(21)
    pool = [(0, 1), (0, 2), (1, 1), (0, 1, 2), (0, 2, 2), (1, 1, 3), (0, 2, 3)]
    for _ in range(25):
        fam = [V(v) for v in rng.sample(pool, rng.randint(1, 3))]
        diagrams = [ci_diagram(a) for a in fam]
        weights = [Fraction(rng.randint(0, 6), rng.randint(1, 6)) for _ in fam]
        if not any(weights):
            continue
        gamma = sum((d * q for d, q in zip(diagrams, weights)), BettiDiagram())
        d, G = clear_denominators(gamma)
        dp = denominator_bound(diagrams)
        D = d * dp
        target = gamma * D
        m = int(sum(target.column(0).values()))
        sols, _, _ = search(target, fam, m)
        assert sols, (fam, weights)
