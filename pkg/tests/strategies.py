"""Hypothesis strategies for digraphs, signed graphs and vertex permutations."""

from hypothesis import strategies as st

from braid_deformations.objects import Digraph, SignedGraph


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 5) -> Digraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j]
    keep = draw(st.lists(st.booleans(), min_size=len(arcs), max_size=len(arcs)))
    return Digraph.new(n, (arc for arc, kept in zip(arcs, keep) if kept))


@st.composite
def signed_graphs(draw, min_n: int = 1, max_n: int = 5) -> SignedGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    signs = draw(st.lists(st.sampled_from([1, -1, 0]), min_size=len(pairs), max_size=len(pairs)))
    return SignedGraph.new(
        n,
        plus=[p for p, s in zip(pairs, signs) if s == 1],
        minus=[p for p, s in zip(pairs, signs) if s == -1],
    )


@st.composite
def digraphs_with_permutation(draw, min_n: int = 1, max_n: int = 5) -> tuple[Digraph, list[int]]:
    g = draw(digraphs(min_n=min_n, max_n=max_n))
    mapping = draw(st.permutations(list(range(g.n))))
    return g, mapping


@st.composite
def signed_graphs_with_permutation(draw, min_n: int = 1, max_n: int = 5) -> tuple[SignedGraph, list[int]]:
    sg = draw(signed_graphs(min_n=min_n, max_n=max_n))
    mapping = draw(st.permutations(list(range(sg.n))))
    return sg, mapping
