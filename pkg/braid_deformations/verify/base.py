"""
Result models of the verification harnesses.

Every harness returns one `VerificationSummary` variant, discriminated by `type`.
A summary with an empty `violations` list is a successful run.
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import Field, model_validator

from braid_deformations.objects import ImmutableModel, PatternKindLiteral


SummaryTypeLiteral = Literal[
    "prop_char",
    "lemma",
    "factorization",
    "localization",
    "coning",
    "lifting_cases",
]


class Violation(ImmutableModel):
    """A counterexample found by a harness."""

    subject: str = Field(..., description="The offending input, e.g. a digraph in text format.")
    detail: str
    index: Optional[int] = Field(None, description="Position in the enumeration order, when there is one.")


class _BaseSummary(ImmutableModel):
    type: SummaryTypeLiteral
    checked: int = Field(..., ge=0, description="Number of instances examined.")
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class PropositionCharSummary(_BaseSummary):
    """(A1)/(A2) ordering exists iff S(G) is signed eliminable and G has no forbidden triple."""

    type: Literal["prop_char"] = "prop_char"
    n: int
    satisfies_a1_a2: int = 0
    forbidden_triple: int = 0
    not_signed_eliminable: int = 0
    forbidden_and_not_eliminable: int = 0


class LemmaVector(ImmutableModel):
    kind: PatternKindLiteral
    k: int
    expected: str
    computed: str


class LemmaVectorsSummary(_BaseSummary):
    """Characteristic polynomials of the forbidden patterns against their closed forms."""

    type: Literal["lemma"] = "lemma"
    k_max: int
    vectors: tuple[LemmaVector, ...] = ()


class ExponentPattern(ImmutableModel):
    roots: tuple[int, ...]
    count: int = Field(..., ge=1)


class FactorizationSummary(_BaseSummary):
    """Coned characteristic polynomials of (A1)/(A2) digraphs split over the nonnegative integers."""

    type: Literal["factorization"] = "factorization"
    n: int
    k: int
    a1_a2_digraphs: int = Field(0, ge=0, description="Digraphs satisfying (A1)/(A2), whose polynomials were split.")
    exponent_patterns: tuple[ExponentPattern, ...] = ()


class LocalizationSummary(_BaseSummary):
    """Localizations at triple flats against the coned induced 3-vertex deformations."""

    type: Literal["localization"] = "localization"
    n: int
    k: int
    exhaustive: bool
    triples: int = Field(0, ge=0, description="Number of (digraph, triple) pairs compared.")


class ConingSummary(_BaseSummary):
    type: Literal["coning"] = "coning"
    n: int
    k: int


class LiftingCase(ImmutableModel):
    """Liftings of the 3-vertex signed graphs of one (|E+|, |E-|) shape, up to swapping vertices 0 and 1."""

    case: int = Field(..., ge=1, le=10)
    plus: int
    minus: int
    liftings: int
    failing: int
    expected_liftings: int
    expected_failing: int

    @property
    def matches(self) -> bool:
        return (self.liftings, self.failing) == (self.expected_liftings, self.expected_failing)


class LiftingCasesSummary(_BaseSummary):
    type: Literal["lifting_cases"] = "lifting_cases"
    cases: tuple[LiftingCase, ...] = ()

    @model_validator(mode="after")
    def ensure_unique_cases(self):
        numbers = [c.case for c in self.cases]
        if len(set(numbers)) != len(numbers):
            raise ValueError(f"Duplicate case numbers in {numbers}")
        return self


VerificationSummary = Annotated[
    Union[
        PropositionCharSummary,
        LemmaVectorsSummary,
        FactorizationSummary,
        LocalizationSummary,
        ConingSummary,
        LiftingCasesSummary,
    ],
    Field(discriminator="type"),
]


__all__ = [
    "SummaryTypeLiteral",
    "Violation",
    "PropositionCharSummary",
    "LemmaVector",
    "LemmaVectorsSummary",
    "ExponentPattern",
    "FactorizationSummary",
    "LocalizationSummary",
    "ConingSummary",
    "LiftingCase",
    "LiftingCasesSummary",
    "VerificationSummary",
]
