"""
Signed graphs (positive / negative unordered edges) and the multiplicity of the
restriction onto the infinite hyperplane.
"""

from typing import Any, Iterable, Literal, Sequence

from pydantic import Field, field_serializer, field_validator, model_validator

from .base import ImmutableModel, Pair, check_permutation, normalize_pair


SignLiteral = Literal[1, -1, 0]
"""+1 for a positive edge, -1 for a negative edge, 0 for a neutral (absent) pair."""


def _normalize_pairs(v: Any) -> Any:
    if isinstance(v, (list, tuple, set, frozenset)):
        pairs = []
        for item in v:
            i, j = item
            pairs.append(normalize_pair(int(i), int(j)))
        return frozenset(pairs)
    return v


class SignedGraph(ImmutableModel):
    """Vertex set 0..n-1 with disjoint sets of positive and negative unordered edges."""

    n: int = Field(..., ge=1, description="Number of vertices.")
    plus: frozenset[Pair] = Field(default_factory=frozenset, description="Positive edges E+.")
    minus: frozenset[Pair] = Field(default_factory=frozenset, description="Negative edges E-.")

    @field_validator("plus", "minus", mode="before")
    @classmethod
    def normalize_unordered_pairs(cls, v: Any):
        return _normalize_pairs(v)

    @model_validator(mode="after")
    def ensure_simple_disjoint_edges(self):
        for i, j in self.plus | self.minus:
            if i == j:
                raise ValueError(f"Pair {{{i}, {j}}} is a loop")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"Pair {{{i}, {j}}} is out of range for n={self.n}")
        common = self.plus & self.minus
        if common:
            raise ValueError(f"Pairs {sorted(common)} are both positive and negative")
        return self

    @field_serializer("plus", "minus")
    def serialize_pairs(self, pairs: frozenset[Pair]) -> list[Pair]:
        return sorted(pairs)

    @classmethod
    def new(cls, n: int, plus: Iterable[Pair] = (), minus: Iterable[Pair] = ()):
        return cls(n=n, plus=frozenset(plus), minus=frozenset(minus))

    def sign(self, i: int, j: int) -> SignLiteral:
        pair = normalize_pair(i, j)
        if pair in self.plus:
            return 1
        if pair in self.minus:
            return -1
        return 0

    def neutral_pairs(self) -> list[Pair]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (i, j) not in self.plus and (i, j) not in self.minus
        ]

    def relabel(self, mapping: Sequence[int]) -> "SignedGraph":
        """Rename vertex v to mapping[v]."""
        check_permutation(mapping, self.n)
        return SignedGraph.new(
            self.n,
            plus=((mapping[i], mapping[j]) for i, j in self.plus),
            minus=((mapping[i], mapping[j]) for i, j in self.minus),
        )


class SignedGraphFactory:
    @classmethod
    def all_plus(cls, n: int) -> SignedGraph:
        return SignedGraph.new(n, plus=((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def all_minus(cls, n: int) -> SignedGraph:
        return SignedGraph.new(n, minus=((i, j) for i in range(n) for j in range(i + 1, n)))


class MultiplicityMap(ImmutableModel):
    """Multiplicity on the braid arrangement: pair {i, j} carries the number of parallel translates of x_i = x_j."""

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=0, description="Level of the deformation.")
    mult: dict[Pair, int]

    @field_validator("mult", mode="before")
    @classmethod
    def accept_triples(cls, v: Any):
        # the JSON form is a list of [i, j, m] triples
        if isinstance(v, list):
            return {normalize_pair(int(i), int(j)): int(m) for i, j, m in v}
        return v

    @model_validator(mode="after")
    def ensure_multiplicities_in_range(self):
        low, high = 2 * self.k + 1, 2 * self.k + 3
        expected = {(i, j) for i in range(self.n) for j in range(i + 1, self.n)}
        if set(self.mult) != expected:
            raise ValueError("Multiplicity must be defined on every pair {i, j} exactly once")
        for pair, m in self.mult.items():
            if not low <= m <= high:
                raise ValueError(f"Multiplicity {m} of {pair} is outside [{low}, {high}]")
        return self

    @field_serializer("mult")
    def serialize_mult(self, mult: dict[Pair, int]) -> list[tuple[int, int, int]]:
        return [(i, j, m) for (i, j), m in sorted(mult.items())]

    def __hash__(self) -> int:
        return hash((self.n, self.k, tuple(sorted(self.mult.items()))))

    @property
    def total(self) -> int:
        return sum(self.mult.values())

    def sign_of(self, i: int, j: int) -> SignLiteral:
        """Recover the edge sign: multiplicity 2k+2+sign."""
        return self.mult[normalize_pair(i, j)] - (2 * self.k + 2)  # type: ignore[return-value]


__all__ = [
    "SignLiteral",
    "SignedGraph",
    "SignedGraphFactory",
    "MultiplicityMap",
]
