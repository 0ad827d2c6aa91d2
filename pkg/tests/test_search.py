import pytest

from cyclicvdw import (
    InternalInconsistencyError,
    InvalidArgumentError,
    SearchBudget,
    build_hypergraph,
    chromatic_number,
    independence_number,
    is_r_colorable,
    theorem_bounds,
)
from cyclicvdw.search import (
    COLORABLE,
    INDETERMINATE,
    REFUTED,
    STATUS_EXACT,
    STATUS_LOWER_BOUND_ONLY,
    verify_coloring,
)

import helpers


class TestBuildHypergraph:
    def test_edge_sets_match_brute_force(self):
        for n in range(3, 21):
            for k in (3, 4, 5):
                if k > n:
                    continue
                hg = build_hypergraph(n, k)
                assert {frozenset(e) for e in hg.edges} == \
                    helpers.brute_progression_sets(n, k)

    def test_incidence_is_consistent(self):
        hg = build_hypergraph(12, 4)
        for v, idxs in hg.incidence.items():
            for i in idxs:
                assert v in hg.edges[i]
        for i, e in enumerate(hg.edges):
            for v in e:
                assert i in hg.incidence[v]

    def test_rejects_small_k(self):
        with pytest.raises(InvalidArgumentError):
            build_hypergraph(9, 2)


class TestIndependenceNumber:
    @pytest.mark.parametrize("n,k,expected", [(12, 4, 7), (9, 3, 4)])
    def test_frozen_values(self, n, k, expected):
        res = independence_number(n, k)
        assert res.value == expected
        assert res.status == STATUS_EXACT

    def test_full_ring(self):
        # The only k-term progression mod k is Z_k itself.
        for n in range(3, 10):
            res = independence_number(n, n)
            assert res.value == n - 1
            assert res.status == STATUS_EXACT

    def test_k_above_modulus(self):
        res = independence_number(5, 7)
        assert res.value == 5 and res.witness == (0, 1, 2, 3, 4)
        assert res.status == STATUS_EXACT

    @pytest.mark.parametrize("n", range(3, 17))
    def test_matches_exhaustive_oracle(self, n):
        for k in (3, 4, 5):
            if k > n:
                continue
            res = independence_number(n, k)
            assert res.status == STATUS_EXACT
            assert res.value == helpers.naive_independence_number(n, k), (n, k)

    def test_two_oracles_agree(self):
        for n in range(3, 13):
            assert helpers.naive_independence_number(n, 3) == \
                helpers.tiny_independence_number(n, 3)

    def test_witness_is_sound(self):
        for n in range(3, 25):
            for k in (3, 4):
                res = independence_number(n, k)
                assert len(res.witness) == res.value
                assert not helpers.contains_progression(res.witness, n, k), (n, k)

    def test_budget_exhaustion_reports_lower_bound(self):
        res = independence_number(21, 3, SearchBudget(max_nodes=5))
        assert res.status == STATUS_LOWER_BOUND_ONLY
        assert res.value >= 1
        assert not helpers.contains_progression(res.witness, 21, 3)

    def test_deterministic(self):
        a = independence_number(15, 3)
        b = independence_number(15, 3)
        assert (a.value, a.witness, a.status, a.nodes_explored) == \
            (b.value, b.witness, b.status, b.nodes_explored)

    def test_rejects_bad_arguments(self):
        with pytest.raises(InvalidArgumentError):
            independence_number(12, 2)
        with pytest.raises(InvalidArgumentError):
            independence_number(0, 3)
        with pytest.raises(InvalidArgumentError):
            SearchBudget(max_nodes=0)

    def test_strictly_below_upper_bound_when_d_not_singleton(self):
        # |D(mk,k)| > 1 forces b(mk,k) < mk - m.
        budget = SearchBudget(max_nodes=2_000_000, max_seconds=2.0)
        for mk in range(3, 37):
            for k in range(3, mk + 1):
                if mk % k:
                    continue
                m = mk // k
                b = theorem_bounds(m, k)
                if b.exact is not None:
                    continue
                res = independence_number(mk, k, budget=budget)
                if res.status != STATUS_EXACT:
                    continue
                assert res.value < b.upper, (m, k)

    def test_round_trip(self):
        res = independence_number(12, 4)
        assert type(res).from_dict(res.to_dict()) == res


class TestColorability:
    def test_two_colors_refuted_for_nine_three(self):
        assert is_r_colorable(9, 3, 2).status == REFUTED

    def test_two_colors_suffice_for_twelve_four(self):
        out = is_r_colorable(12, 4, 2)
        assert out.status == COLORABLE
        verify_coloring(12, 4, out.coloring)

    def test_budget_kill_is_indeterminate(self):
        out = is_r_colorable(30, 3, 2, SearchBudget(max_nodes=10))
        assert out.status == INDETERMINATE
        assert out.coloring is None

    def test_trivial_when_no_edges(self):
        out = is_r_colorable(4, 5, 1)
        assert out.status == COLORABLE
        assert out.coloring == (0, 0, 0, 0)

    def test_verify_coloring_rejects_monochromatic_progression(self):
        with pytest.raises(InternalInconsistencyError):
            verify_coloring(9, 3, tuple([0] * 9))


class TestChromaticNumber:
    @pytest.mark.parametrize("n,k,expected", [
        (9, 3, 3),
        (12, 4, 2),
        (15, 3, 4),
    ])
    def test_frozen_values(self, n, k, expected):
        res = chromatic_number(n, k)
        assert res.value == expected
        assert res.status == STATUS_EXACT

    def test_coloring_is_proper_and_uses_value_colors(self):
        res = chromatic_number(12, 3)
        assert len(set(res.coloring)) == res.value
        verify_coloring(12, 3, res.coloring)

    def test_matches_refutation_boundary(self):
        res = chromatic_number(9, 3)
        assert is_r_colorable(9, 3, res.value - 1).status == REFUTED
        assert is_r_colorable(9, 3, res.value).status == COLORABLE

    def test_round_trip(self):
        res = chromatic_number(9, 3)
        assert type(res).from_dict(res.to_dict()) == res
