from itertools import permutations

import pytest
from hypothesis import given
from pydantic import ValidationError

from braid_deformations.digraph import (
    digraph_count,
    digraph_from_index,
    enumerate_digraphs,
    find_a1_a2_ordering,
    find_forbidden_triple,
    induced_subgraph,
    satisfies_a1_a2_under,
)
from braid_deformations.errors import InputError
from braid_deformations.objects import (
    Digraph,
    DigraphFactory,
    ForbiddenPattern,
    VertexOrdering,
)

from tests.settings import STANDARD_SETTINGS
from tests.strategies import digraphs, digraphs_with_permutation

PATH = DigraphFactory.from_pattern("path")


class TestDigraphModel:
    def test_loop_is_rejected(self):
        with pytest.raises(ValidationError):
            Digraph.new(3, [(1, 1)])

    def test_arc_out_of_range_is_rejected(self):
        with pytest.raises(ValidationError):
            Digraph.new(3, [(0, 3)])

    def test_opposite_arcs_coexist(self):
        g = Digraph.new(2, [(0, 1), (1, 0)])
        assert g.epsilon(0, 1) == g.epsilon(1, 0) == 1

    def test_json_edges_are_sorted(self):
        g = Digraph.new(3, [(2, 0), (0, 1)])
        assert g.model_dump_json() == '{"n":3,"edges":[[0,1],[2,0]]}'

    def test_relabel(self):
        assert PATH.relabel([2, 0, 1]).edges == frozenset({(2, 0), (0, 1)})

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(InputError):
            PATH.relabel([0, 0, 1])


class TestVertexOrdering:
    def test_sequence_inverts_positions(self):
        ordering = VertexOrdering(perm=(2, 0, 1))
        assert ordering.sequence == (1, 2, 0)
        assert VertexOrdering.from_sequence((1, 2, 0)) == ordering

    def test_not_a_bijection(self):
        with pytest.raises(ValidationError):
            VertexOrdering(perm=(0, 0, 1))

    def test_from_sequence_rejects_repeats(self):
        with pytest.raises(InputError):
            VertexOrdering.from_sequence([0, 0])


class TestA1A2:
    def test_complete_digraph_satisfies_identity(self):
        g = DigraphFactory.complete(4)
        assert satisfies_a1_a2_under(g, VertexOrdering.identity(4))

    def test_path_fails_identity(self):
        assert not satisfies_a1_a2_under(PATH, VertexOrdering.identity(3))

    @pytest.mark.parametrize("kind", ["path", "cycle", "cycle_plus_chord"])
    def test_forbidden_patterns_have_no_ordering(self, kind):
        assert find_a1_a2_ordering(DigraphFactory.from_pattern(kind)) is None

    def test_empty_digraph_gets_identity(self):
        assert find_a1_a2_ordering(DigraphFactory.empty(4)) == VertexOrdering.identity(4)

    def test_lexicographically_smallest_perm(self):
        ordering = find_a1_a2_ordering(Digraph.new(3, [(0, 1)]))
        assert ordering is not None
        assert ordering.perm == (0, 2, 1)

    def test_smallest_perm_wins_over_smallest_sequence(self):
        ordering = find_a1_a2_ordering(Digraph.new(4, [(1, 0), (1, 2)]))
        assert ordering is not None
        assert ordering.perm == (0, 2, 3, 1)
        assert ordering.sequence == (0, 3, 1, 2)

    @given(g=digraphs(max_n=4))
    @STANDARD_SETTINGS
    def test_found_ordering_is_the_minimum(self, g):
        valid = [
            perm for perm in permutations(range(g.n)) if satisfies_a1_a2_under(g, VertexOrdering(perm=perm))
        ]
        ordering = find_a1_a2_ordering(g)
        assert (ordering is None) == (not valid)
        if ordering is not None:
            assert ordering.perm == min(valid)

    def test_three_vertices_pattern_iff_no_ordering(self):
        for g in enumerate_digraphs(3):
            assert (find_forbidden_triple(g) is not None) == (find_a1_a2_ordering(g) is None), g

    def test_ordering_size_mismatch(self):
        with pytest.raises(InputError):
            satisfies_a1_a2_under(PATH, VertexOrdering.identity(4))

    @given(g=digraphs())
    @STANDARD_SETTINGS
    def test_found_ordering_satisfies_conditions(self, g):
        ordering = find_a1_a2_ordering(g)
        if ordering is not None:
            assert satisfies_a1_a2_under(g, ordering)

    @given(case=digraphs_with_permutation())
    @STANDARD_SETTINGS
    def test_conditions_are_relabeling_invariant(self, case):
        g, mapping = case
        ordering = VertexOrdering.from_sequence(list(reversed(range(g.n))))
        assert satisfies_a1_a2_under(g, ordering) == satisfies_a1_a2_under(
            g.relabel(mapping), ordering.relabel(mapping)
        )
        assert (find_a1_a2_ordering(g) is None) == (find_a1_a2_ordering(g.relabel(mapping)) is None)


class TestForbiddenTriple:
    @pytest.mark.parametrize("kind", ["path", "cycle", "cycle_plus_chord"])
    def test_patterns_detect_themselves(self, kind):
        assert find_forbidden_triple(DigraphFactory.from_pattern(kind)) == ForbiddenPattern(
            kind=kind, witness=(0, 1, 2)
        )

    def test_embedded_path_witness(self):
        g = Digraph.new(4, [(3, 1), (1, 0)])
        pattern = find_forbidden_triple(g)
        assert pattern == ForbiddenPattern(kind="path", witness=(3, 1, 0))
        assert pattern.edges() == frozenset({(3, 1), (1, 0)})

    @pytest.mark.parametrize("g", [DigraphFactory.empty(4), DigraphFactory.complete(4)])
    def test_free_families_have_none(self, g):
        assert find_forbidden_triple(g) is None

    def test_extra_arc_breaks_the_pattern(self):
        # path plus the transitive arc is no longer an exact template
        assert find_forbidden_triple(Digraph.new(3, [(0, 1), (1, 2), (0, 2)])) is None

    @given(g=digraphs(min_n=3))
    @STANDARD_SETTINGS
    def test_witness_induces_the_template(self, g):
        pattern = find_forbidden_triple(g)
        if pattern is not None:
            induced = frozenset(
                (i, j) for i, j in g.edges if i in pattern.witness and j in pattern.witness
            )
            assert induced == pattern.edges()


class TestInducedSubgraph:
    def test_relabels_in_given_order(self):
        g = Digraph.new(3, [(0, 2), (1, 2)])
        assert induced_subgraph(g, [2, 0]) == Digraph.new(2, [(1, 0)])

    @pytest.mark.parametrize("vertices", [[], [0, 0], [0, 3]])
    def test_invalid_vertices(self, vertices):
        with pytest.raises(InputError):
            induced_subgraph(PATH, vertices)


class TestEnumeration:
    def test_counts(self):
        assert digraph_count(3) == 64
        assert digraph_count(4) == 4096

    @pytest.mark.parametrize("n", [0, 6])
    def test_cap(self, n):
        with pytest.raises(InputError):
            digraph_count(n)
        with pytest.raises(InputError):
            enumerate_digraphs(n)

    def test_all_distinct_and_ordered(self):
        graphs = list(enumerate_digraphs(3))
        assert len(graphs) == 64
        assert len(set(graphs)) == 64
        assert graphs[0] == DigraphFactory.empty(3)
        assert graphs[-1] == DigraphFactory.complete(3)

    def test_index_bits_follow_arc_order(self):
        assert digraph_from_index(2, 1) == Digraph.new(2, [(0, 1)])
        assert digraph_from_index(2, 2) == Digraph.new(2, [(1, 0)])

    def test_index_out_of_range(self):
        with pytest.raises(InputError):
            digraph_from_index(2, 4)

    def test_slices_match_indices(self):
        assert list(enumerate_digraphs(3, 10, 20)) == [digraph_from_index(3, i) for i in range(10, 20)]

    def test_invalid_slice(self):
        with pytest.raises(InputError):
            enumerate_digraphs(3, 20, 10)
