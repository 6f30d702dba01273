"""
Directed graphs indexing the deformations, vertex numberings, and the three
forbidden 3-vertex patterns.

Vertices are labelled 0..n-1. An arc (i, j) sets epsilon(i, j) = 1.
"""

from typing import Literal, Iterable, Sequence

from pydantic import Field, field_serializer, field_validator, model_validator

from braid_deformations.errors import InputError
from .base import ImmutableModel, Arc, check_permutation


class Digraph(ImmutableModel):
    """Loop-free directed graph on vertices 0..n-1; (i, j) and (j, i) may coexist."""

    n: int = Field(..., ge=1, description="Number of vertices.")
    edges: frozenset[Arc] = Field(
        default_factory=frozenset, description="Set of arcs (i, j) with i != j."
    )

    @model_validator(mode="after")
    def ensure_loop_free_arcs_in_range(self):
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"Loop ({i}, {j}) is not allowed")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"Arc ({i}, {j}) is out of range for n={self.n}")
        return self

    @field_serializer("edges")
    def serialize_edges(self, edges: frozenset[Arc]) -> list[Arc]:
        return sorted(edges)

    @classmethod
    def new(cls, n: int, edges: Iterable[Arc] = ()):
        return cls(n=n, edges=frozenset((int(i), int(j)) for i, j in edges))

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def epsilon(self, i: int, j: int) -> int:
        return 1 if (i, j) in self.edges else 0

    def relabel(self, mapping: Sequence[int]) -> "Digraph":
        """Rename vertex v to mapping[v]."""
        check_permutation(mapping, self.n)
        return Digraph.new(self.n, ((mapping[i], mapping[j]) for i, j in self.edges))


class VertexOrdering(ImmutableModel):
    """A numbering of the vertices: `perm[v]` is the position of vertex v (smaller = numbered first)."""

    perm: tuple[int, ...]

    @field_validator("perm")
    @classmethod
    def ensure_bijection(cls, v: tuple[int, ...]):
        if sorted(v) != list(range(len(v))):
            raise ValueError(f"Ordering {v} is not a bijection onto 0..{len(v) - 1}")
        return v

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def sequence(self) -> tuple[int, ...]:
        """Vertices listed by increasing position."""
        order = [0] * len(self.perm)
        for vertex, position in enumerate(self.perm):
            order[position] = vertex
        return tuple(order)

    def position(self, vertex: int) -> int:
        return self.perm[vertex]

    def relabel(self, mapping: Sequence[int]) -> "VertexOrdering":
        """The same numbering after renaming vertex v to mapping[v]."""
        check_permutation(mapping, self.n)
        perm = [0] * self.n
        for vertex, position in enumerate(self.perm):
            perm[mapping[vertex]] = position
        return VertexOrdering(perm=tuple(perm))

    @classmethod
    def identity(cls, n: int):
        return cls(perm=tuple(range(n)))

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]):
        """Build the ordering that numbers `sequence[0]` first, `sequence[1]` second, ..."""
        perm = [-1] * len(sequence)
        for position, vertex in enumerate(sequence):
            if not 0 <= vertex < len(sequence) or perm[vertex] != -1:
                raise InputError(f"{list(sequence)} is not a permutation of the vertices")
            perm[vertex] = position
        return cls(perm=tuple(perm))


PatternKindLiteral = Literal["path", "cycle", "cycle_plus_chord"]

PATTERN_TEMPLATES: dict[PatternKindLiteral, frozenset[Arc]] = {
    "path": frozenset({(0, 1), (1, 2)}),
    "cycle": frozenset({(0, 1), (1, 2), (2, 0)}),
    "cycle_plus_chord": frozenset({(0, 1), (1, 2), (2, 0), (0, 2)}),
}
"""Exact induced arc sets of the forbidden patterns, written on the witness (i, j, k) = (0, 1, 2)."""


class ForbiddenPattern(ImmutableModel):
    """An induced 3-vertex subgraph whose arc set equals one of the forbidden templates."""

    kind: PatternKindLiteral
    witness: tuple[int, int, int] = Field(
        ..., description="Labels (i, j, k) substituted for template vertices 0, 1, 2."
    )

    @field_validator("witness")
    @classmethod
    def ensure_distinct_witness(cls, v: tuple[int, int, int]):
        if len(set(v)) != 3:
            raise ValueError(f"Witness {v} must consist of three distinct vertices")
        return v

    def edges(self) -> frozenset[Arc]:
        w = self.witness
        return frozenset((w[a], w[b]) for a, b in PATTERN_TEMPLATES[self.kind])


class DigraphFactory:
    @classmethod
    def empty(cls, n: int) -> Digraph:
        """Digraph without arcs: its deformation is the braid arrangement (at k=0)."""
        return Digraph.new(n)

    @classmethod
    def complete(cls, n: int) -> Digraph:
        """Complete bidirected digraph: its deformation is the Catalan arrangement (at k=0)."""
        return Digraph.new(n, ((i, j) for i in range(n) for j in range(n) if i != j))

    @classmethod
    def from_pattern(cls, kind: PatternKindLiteral) -> Digraph:
        """The forbidden pattern itself, on vertices (0, 1, 2)."""
        return Digraph.new(3, PATTERN_TEMPLATES[kind])


__all__ = [
    "Digraph",
    "VertexOrdering",
    "PatternKindLiteral",
    "PATTERN_TEMPLATES",
    "ForbiddenPattern",
    "DigraphFactory",
]
