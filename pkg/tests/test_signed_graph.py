from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from braid_deformations.digraph import find_a1_a2_ordering, find_forbidden_triple
from braid_deformations.errors import InputError
from braid_deformations.objects import (
    Digraph,
    DigraphFactory,
    MultiplicityMap,
    SignedGraph,
    SignedGraphFactory,
    VertexOrdering,
)
from braid_deformations.signed_graph import (
    enumerate_liftings,
    enumerate_signed_graphs,
    find_elimination_ordering,
    is_signed_eliminable_under,
    sign_map,
    ziegler_multiplicity,
)

from tests.settings import STANDARD_SETTINGS
from tests.strategies import (
    digraphs,
    digraphs_with_permutation,
    signed_graphs,
    signed_graphs_with_permutation,
)

PATH = DigraphFactory.from_pattern("path")


class TestSignedGraphModel:
    def test_pairs_are_normalized(self):
        sg = SignedGraph.new(3, plus=[(2, 0)])
        assert sg.plus == frozenset({(0, 2)})
        assert sg.sign(2, 0) == sg.sign(0, 2) == 1

    def test_pair_cannot_carry_both_signs(self):
        with pytest.raises(ValidationError):
            SignedGraph.new(3, plus=[(0, 1)], minus=[(1, 0)])

    def test_neutral_pairs(self):
        sg = SignedGraph.new(3, plus=[(0, 1)], minus=[(1, 2)])
        assert sg.neutral_pairs() == [(0, 2)]
        assert sg.sign(0, 2) == 0


class TestSignMap:
    def test_path(self):
        assert sign_map(PATH) == SignedGraph.new(3, minus=[(0, 2)])

    def test_complete_is_all_plus(self):
        assert sign_map(DigraphFactory.complete(4)) == SignedGraphFactory.all_plus(4)

    def test_empty_is_all_minus(self):
        assert sign_map(DigraphFactory.empty(4)) == SignedGraphFactory.all_minus(4)

    @given(case=digraphs_with_permutation())
    @STANDARD_SETTINGS
    def test_relabeling_commutes_with_sign_map(self, case):
        g, mapping = case
        assert sign_map(g.relabel(mapping)) == sign_map(g).relabel(mapping)

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(InputError):
            SignedGraph.new(3).relabel([0, 0, 1])


class TestSignedElimination:
    def test_all_neutral_is_eliminable(self):
        assert is_signed_eliminable_under(SignedGraph.new(4), VertexOrdering.identity(4))

    def test_equal_signs_at_apex_force_the_base_pair(self):
        sg = SignedGraph.new(3, plus=[(0, 2), (1, 2)])
        assert not is_signed_eliminable_under(sg, VertexOrdering.identity(3))
        ordering = find_elimination_ordering(sg)
        assert ordering is not None
        assert ordering.sequence == (0, 2, 1)

    def test_mixed_signs_force_the_third_pair(self):
        sg = SignedGraph.new(3, plus=[(0, 1)], minus=[(0, 2)])
        assert not is_signed_eliminable_under(sg, VertexOrdering.identity(3))

    def test_ordering_size_mismatch(self):
        with pytest.raises(InputError):
            is_signed_eliminable_under(SignedGraph.new(3), VertexOrdering.identity(2))

    @given(sg=signed_graphs())
    @STANDARD_SETTINGS
    def test_found_ordering_is_valid(self, sg):
        ordering = find_elimination_ordering(sg)
        if ordering is not None:
            assert is_signed_eliminable_under(sg, ordering)

    @given(sg=signed_graphs(min_n=2, max_n=4), data=st.data())
    @STANDARD_SETTINGS
    def test_swapping_the_base_pair_changes_nothing(self, sg, data):
        sequence = data.draw(st.permutations(list(range(sg.n))))
        swapped = [sequence[1], sequence[0], *sequence[2:]]
        assert is_signed_eliminable_under(sg, VertexOrdering.from_sequence(sequence)) == is_signed_eliminable_under(
            sg, VertexOrdering.from_sequence(swapped)
        )

    @given(case=signed_graphs_with_permutation(max_n=4), data=st.data())
    @STANDARD_SETTINGS
    def test_elimination_is_relabeling_invariant(self, case, data):
        sg, mapping = case
        ordering = VertexOrdering.from_sequence(data.draw(st.permutations(list(range(sg.n)))))
        assert is_signed_eliminable_under(sg, ordering) == is_signed_eliminable_under(
            sg.relabel(mapping), ordering.relabel(mapping)
        )

    @given(sg=signed_graphs(max_n=4))
    @STANDARD_SETTINGS
    def test_found_ordering_is_the_minimum(self, sg):
        valid = [
            perm for perm in permutations(range(sg.n)) if is_signed_eliminable_under(sg, VertexOrdering(perm=perm))
        ]
        ordering = find_elimination_ordering(sg)
        assert (ordering is None) == (not valid)
        if ordering is not None:
            assert ordering.perm == min(valid)

    @given(g=digraphs(max_n=5))
    @STANDARD_SETTINGS
    def test_a1_a2_iff_eliminable_without_forbidden_triple(self, g):
        eliminable = find_elimination_ordering(sign_map(g)) is not None
        no_pattern = find_forbidden_triple(g) is None
        assert (find_a1_a2_ordering(g) is not None) == (eliminable and no_pattern)


class TestLiftings:
    def test_count_is_power_of_two(self):
        sg = sign_map(PATH)
        liftings = list(enumerate_liftings(sg))
        assert len(liftings) == 4
        assert len(set(liftings)) == 4
        assert PATH in liftings

    @given(sg=signed_graphs(max_n=4))
    @STANDARD_SETTINGS
    def test_liftings_map_back(self, sg):
        liftings = list(enumerate_liftings(sg))
        assert len(liftings) == 2 ** len(sg.neutral_pairs())
        assert all(sign_map(g) == sg for g in liftings)

    def test_signed_graph_counts(self):
        assert len(list(enumerate_signed_graphs(3))) == 27
        assert len(set(enumerate_signed_graphs(4))) == 729

    def test_signed_graph_cap(self):
        with pytest.raises(InputError):
            enumerate_signed_graphs(5)


class TestZieglerMultiplicity:
    def test_path_level_zero(self):
        m = ziegler_multiplicity(PATH, 0)
        assert m.mult == {(0, 1): 2, (1, 2): 2, (0, 2): 1}
        assert m.total == 5

    def test_path_level_one(self):
        m = ziegler_multiplicity(PATH, 1)
        assert m.mult == {(0, 1): 4, (1, 2): 4, (0, 2): 3}

    def test_sign_is_recovered(self):
        g = Digraph.new(3, [(0, 1), (1, 0), (1, 2)])
        m = ziegler_multiplicity(g, 2)
        assert [m.sign_of(0, 1), m.sign_of(1, 2), m.sign_of(0, 2)] == [1, 0, -1]

    def test_negative_level(self):
        with pytest.raises(InputError):
            ziegler_multiplicity(PATH, -1)

    def test_range_is_validated(self):
        with pytest.raises(ValidationError):
            MultiplicityMap(n=2, k=0, mult={(0, 1): 4})

    def test_every_pair_is_required(self):
        with pytest.raises(ValidationError):
            MultiplicityMap(n=3, k=0, mult={(0, 1): 2})

    def test_json_form_is_a_list_of_triples(self):
        m = ziegler_multiplicity(PATH, 0)
        assert m.model_dump_json() == '{"n":3,"k":0,"mult":[[0,1,2],[0,2,1],[1,2,2]]}'
        assert MultiplicityMap.model_validate_json(m.model_dump_json()) == m
