"""Monomial valuation, parity classes, and the dominant-term hypothesis."""

import random

import pytest
from hypothesis import given

from pflab import (
    ParitySet,
    ValuationOfZero,
    dominant_term_hypothesis,
    parity,
    parity_span,
    val,
)
from pflab.valuation import gf2_rank
from conftest import CTX2, nonzero_elements


class TestVal:
    def test_generators(self, ctx2):
        a1, a2 = ctx2.gens
        assert val(a1) == (-1, 0)
        assert val(a2) == (0, -1)

    def test_polynomial_leading_term(self, ctx2):
        a1, a2 = ctx2.gens
        assert val(a1**3 + a2) == (-3, 0)
        assert val(ctx2.one + a1) == (-1, 0)

    def test_quotient(self, ctx2):
        a1, a2 = ctx2.gens
        assert val((a1**3 + a2) / a1) == (-2, 0)
        assert val(ctx2.one / a2) == (0, 1)

    def test_zero_rejected(self, ctx2):
        with pytest.raises(ValuationOfZero):
            val(ctx2.zero)
        with pytest.raises(ValuationOfZero):
            parity(ctx2.zero)

    def test_multiplicative(self, ctx2):
        rng = random.Random(7)
        from pflab.sampling import random_nonzero_element

        for _ in range(1000):
            f = random_nonzero_element(rng, ctx2)
            g = random_nonzero_element(rng, ctx2)
            fv, gv = val(f), val(g)
            assert val(f * g) == tuple(a + b for a, b in zip(fv, gv))

    @given(f=nonzero_elements(CTX2), g=nonzero_elements(CTX2))
    def test_multiplicative_property(self, f, g):
        assert val(f * g) == tuple(a + b for a, b in zip(val(f), val(g)))


class TestParity:
    def test_examples(self, ctx2):
        a1, a2 = ctx2.gens
        assert parity(a1) == (1, 0)
        assert parity(a1 * a1) == (0, 0)
        assert parity(a1 * a2) == (1, 1)
        assert parity((a1**3 + a2) / a1) == (0, 0)

    @given(c=nonzero_elements(CTX2), f=nonzero_elements(CTX2))
    def test_square_invariance(self, c, f):
        assert parity(c * c * f) == parity(f)


class TestDominantTermHypothesis:
    def test_generators_pass(self, ctx2):
        a1, a2 = ctx2.gens
        assert dominant_term_hypothesis([a1, a2])

    def test_dependent_parities_fail(self, ctx2):
        a1, _ = ctx2.gens
        assert not dominant_term_hypothesis([a1, a1**3])

    def test_even_parity_fails(self, ctx2):
        a1, a2 = ctx2.gens
        assert not dominant_term_hypothesis([a1**2, a2])

    def test_unit_plus_generator_passes(self, ctx2):
        a1, a2 = ctx2.gens
        # val(1 + a1) = (-1, 0): negative, parity (1, 0)
        assert dominant_term_hypothesis([ctx2.one + a1, a2])

    def test_nonnegative_value_fails(self, ctx2):
        a1, a2 = ctx2.gens
        assert not dominant_term_hypothesis([ctx2.one, a2])
        assert not dominant_term_hypothesis([ctx2.one / a1, a2])

    def test_zero_slot_fails(self, ctx2):
        assert not dominant_term_hypothesis([ctx2.zero, ctx2.gens[0]])


class TestGf2Rank:
    def test_basic(self):
        assert gf2_rank([(0, 1), (1, 0)]) == 2
        assert gf2_rank([(0, 1), (1, 0), (1, 1)]) == 2
        assert gf2_rank([]) == 0
        assert gf2_rank([(0, 0)]) == 0

    def test_order_independence(self):
        # low-weight vector first used to fool a min-reduction based rank
        vectors = [(0, 0, 1), (1, 1, 0), (1, 1, 1)]
        assert gf2_rank(vectors) == 2
        assert gf2_rank(list(reversed(vectors))) == 2


class TestParitySet:
    def test_full_and_of(self):
        full = ParitySet.full(2)
        assert len(full.classes) == 4
        sub = ParitySet.of(2, [(0, 0), (1, 1)])
        assert (0, 0) in sub and (1, 0) not in sub

    def test_intersection_and_complement(self):
        s1 = ParitySet.of(2, [(0, 0), (1, 0)])
        s2 = ParitySet.of(2, [(0, 0), (0, 1)])
        assert (s1 & s2).classes == frozenset({(0, 0)})
        assert s1.complement().classes == frozenset({(0, 1), (1, 1)})

    def test_zero_only(self):
        assert ParitySet.of(2, [(0, 0)]).is_zero_only
        assert not ParitySet.of(2, [(0, 0), (1, 0)]).is_zero_only

    def test_to_json_sorted(self):
        s = ParitySet.of(2, [(1, 1), (0, 0)])
        assert s.to_json() == [[0, 0], [1, 1]]

    def test_parity_span(self, ctx2):
        a1, a2 = ctx2.gens
        assert parity_span(2, [parity(a1), parity(a2)]) == ParitySet.full(2)
        assert parity_span(2, [parity(a1)]).classes == frozenset(
            {(0, 0), (1, 0)}
        )
