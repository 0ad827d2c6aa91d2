import pytest

from cyclicvdw import (
    InvalidArgumentError,
    build_avoiding,
    build_forbidden,
    exactness_test,
    find_contained_progression,
    forbidden_size_formula,
    make_progression,
    theorem_bounds,
    witness_class,
)
from cyclicvdw.construction import EXACT_BY_SINGLETON, EXACT_NONE, ForbiddenSet

import helpers

# The 38-element forbidden set for m=10, k=9, written out in full.
F_10_9 = (
    8, 17, 24, 25, 26, 33, 34, 35, 42, 43, 44, 51, 52, 53, 60, 61, 62,
    69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85,
    86, 87, 88, 89,
)


class TestBuildForbidden:
    def test_m3_k15(self):
        assert build_forbidden(3, 15).union == (14, 29, 42, 43, 44)

    def test_m10_k9(self):
        assert build_forbidden(10, 9).union == F_10_9

    def test_singleton_difference_set(self):
        # Divisors of 7 above 1 exceed 3, so the only block is {k-1, ..., mk-1}.
        forb = build_forbidden(3, 7)
        assert forb.diffs == (1,)
        assert forb.union == (6, 13, 20)

    def test_blocks_disjoint_and_sizes_add_up(self):
        for mk in range(3, 501):
            for k in range(3, mk + 1):
                if mk % k:
                    continue
                m = mk // k
                forb = build_forbidden(m, k)
                seen = set()
                for block in forb.blocks:
                    assert not (seen & set(block)), (m, k)
                    seen |= set(block)
                assert len(seen) == forbidden_size_formula(m, k), (m, k)

    def test_rejects_small_k(self):
        with pytest.raises(InvalidArgumentError):
            build_forbidden(3, 2)

    def test_round_trip(self):
        forb = build_forbidden(9, 9)
        assert ForbiddenSet.from_dict(forb.to_dict()) == forb


class TestSizeFormula:
    @pytest.mark.parametrize("m,k,expected", [(3, 4, 5), (9, 9, 29), (10, 9, 38)])
    def test_examples(self, m, k, expected):
        assert forbidden_size_formula(m, k) == expected


class TestBuildAvoiding:
    def test_m3_k15(self):
        b = build_avoiding(3, 15)
        assert len(b) == 40
        assert set(b) == set(range(45)) - {14, 29, 42, 43, 44}

    def test_m1(self):
        assert build_avoiding(1, 5) == (0, 1, 2, 3)

    def test_m3_k4_is_progression_free(self):
        b = build_avoiding(3, 4)
        assert len(b) == 7
        assert not helpers.contains_progression(b, 12, 4)

    def test_avoidance_small_sweep(self):
        for mk in range(3, 101):
            for k in range(3, mk + 1):
                if mk % k:
                    continue
                m = mk // k
                assert find_contained_progression(
                    build_avoiding(m, k), mk, k
                ) is None, (m, k)

    def test_forbidden_covers_every_progression(self):
        # Every k-term progression mod mk meets F.
        from cyclicvdw import enumerate_progressions
        for mk in range(3, 101):
            for k in range(3, mk + 1):
                if mk % k:
                    continue
                m = mk // k
                forb = set(build_forbidden(m, k).union)
                for p in enumerate_progressions(mk, k):
                    assert forb & set(p.elements), (m, k, p.elements)


class TestTheoremBounds:
    @pytest.mark.parametrize("m,k,lower,upper", [
        (3, 4, 7, 9),
        (9, 9, 52, 72),
        (3, 15, 40, 42),
    ])
    def test_examples(self, m, k, lower, upper):
        b = theorem_bounds(m, k)
        assert (b.lower, b.upper) == (lower, upper)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_prime_squares(self, p):
        b = theorem_bounds(p, p)
        assert (b.lower, b.upper) == ((p - 1) ** 2, p * (p - 1))
        assert b.exact is None

    def test_exact_filled_for_singleton(self):
        b = theorem_bounds(2, 5)
        assert b.exact == 8 and b.exactness_reason == EXACT_BY_SINGLETON

    def test_lower_never_exceeds_upper(self):
        for mk in range(3, 301):
            for k in range(3, mk + 1):
                if mk % k:
                    continue
                b = theorem_bounds(mk // k, k)
                assert b.lower <= b.upper


class TestExactness:
    def test_examples(self):
        assert exactness_test(2, 5).is_exact_at_upper
        assert not exactness_test(3, 4).is_exact_at_upper
        assert not exactness_test(9, 9).is_exact_at_upper

    def test_m_at_least_k_never_exact(self):
        for k in range(3, 12):
            for m in range(k, 2 * k):
                assert not exactness_test(m, k).is_exact_at_upper


class TestWitnessClass:
    def test_unit_difference_witness(self):
        a = make_progression(45, 0, 1, 15)
        w = witness_class(3, 15, a)
        assert (w.d, w.beta, w.alpha) == (1, 0, 1)
        assert w.lattice == (14, 29, 44)
        assert w.window == (14,)
        assert w.hit == 14

    def test_difference_three_witness(self):
        a = make_progression(45, 1, 3, 15)
        w = witness_class(3, 15, a)
        assert (w.d, w.beta, w.alpha) == (3, 1, 2)
        assert w.window == (13, 28, 43)
        assert w.hit == 43
        assert w.hit in build_forbidden(3, 15).union

    def test_unit_difference_window_is_singleton(self):
        for t in range(0, 12, 5):
            a = make_progression(12, t, 1, 4)
            w = witness_class(3, 4, a)
            assert len(w.window) == 1
            assert w.window[0] in {3, 7, 11}

    def test_rejects_progressions_outside_difference_set(self):
        # Canonical difference 6 with gcd class 2, but no generating
        # difference of this set divides k.
        a = make_progression(20, 0, 6, 4)
        with pytest.raises(InvalidArgumentError):
            witness_class(5, 4, a)

    def test_window_lemma_over_small_grid(self):
        from cyclicvdw import enumerate_progressions
        from cyclicvdw.construction import closed_diffs
        for mk in range(3, 101):
            for k in range(3, mk + 1):
                if mk % k:
                    continue
                m = mk // k
                dset = closed_diffs(m, k)
                forb = set(build_forbidden(m, k).union)
                for p in enumerate_progressions(mk, k):
                    elems = set(p.elements)
                    if not any(
                        {(t + i * d) % mk for i in range(k)} == elems
                        for d in dset for t in p.elements
                    ):
                        continue
                    w = witness_class(m, k, p)
                    assert len(w.window) == w.d
                    assert set(w.window) <= set(p.elements)
                    assert w.hit in forb
                    # Window occupies d cyclically consecutive lattice slots.
                    idx = sorted((x + w.alpha) // k - 1 for x in w.window)
                    runs = {(idx[0] - i) % m for i, _ in enumerate(idx)}
                    spans = [
                        sorted(((start + i) % m for i in range(w.d)))
                        for start in runs
                    ]
                    assert idx in spans


class TestBoundSanity:
    def test_search_value_sits_between_bounds(self):
        from cyclicvdw import SearchBudget, independence_number
        budget = SearchBudget(max_nodes=2_000_000, max_seconds=2.0)
        for mk in range(3, 37):
            for k in range(3, mk + 1):
                if mk % k:
                    continue
                m = mk // k
                b = theorem_bounds(m, k)
                res = independence_number(mk, k, budget=budget)
                if res.status != "exact":
                    continue
                assert b.lower <= res.value <= b.upper, (m, k)
