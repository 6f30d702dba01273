"""
Single-digraph analysis: every criterion of the freeness characterization in one report.
"""

import logging
from typing import Literal, Optional

from pydantic import Field, model_validator

from braid_deformations.arrangement import build_deformation, cone
from braid_deformations.charpoly import characteristic_polynomial, integer_root_split
from braid_deformations.digraph import find_a1_a2_ordering, find_forbidden_triple
from braid_deformations.errors import ResourceLimitError, VerificationError
from braid_deformations.formats import format_signed_graph_text
from braid_deformations.objects import (
    Digraph,
    ForbiddenPattern,
    ImmutableModel,
    IntPolynomial,
    MultiplicityMap,
    SignedGraph,
    VertexOrdering,
)
from braid_deformations.signed_graph import (
    find_elimination_ordering,
    sign_map,
    ziegler_multiplicity,
)

LOGGER = logging.getLogger(__name__)

MAX_ANALYZE_VERTICES = 5
MAX_ANALYZE_LEVEL = 3

VerdictLiteral = Literal["free_predicted", "not_free"]


class AnalysisReport(ImmutableModel):
    digraph: Digraph
    k: int = Field(..., ge=0)
    signed_graph: SignedGraph
    forbidden_pattern: Optional[ForbiddenPattern] = None
    a1_a2_ordering: Optional[VertexOrdering] = None
    elimination_ordering: Optional[VertexOrdering] = None
    charpoly: IntPolynomial = Field(..., description="chi(A_G, t).")
    coned_charpoly: IntPolynomial = Field(..., description="chi(cA_G, t).")
    coned_roots: Optional[tuple[int, ...]] = Field(
        None, description="Integer roots of chi(cA_G, t) when it splits completely."
    )
    multiplicity: MultiplicityMap
    hyperplane_count: int = Field(..., ge=0)
    verdict: VerdictLiteral

    @model_validator(mode="after")
    def ensure_verdict_matches_ordering(self):
        expected = "free_predicted" if self.a1_a2_ordering is not None else "not_free"
        if self.verdict != expected:
            raise ValueError(f"Verdict {self.verdict} contradicts the (A1)/(A2) ordering search")
        return self


def analyze(g: Digraph, k: int) -> AnalysisReport:
    """Run every criterion on `g` at level `k`.

    Args:
        g (Digraph): The digraph, with 2 <= n <= 5.
        k (int): The level of the deformation, 0 <= k <= 3.

    Returns:
        AnalysisReport: The aggregated report. Its verdict follows the (A1)/(A2)
        ordering search alone.

    Raises:
        ResourceLimitError: when n or k exceed the analysis budget.
        VerificationError: when a free-predicted digraph has a coned
            characteristic polynomial without a full integer split.
    """
    if g.n > MAX_ANALYZE_VERTICES or k > MAX_ANALYZE_LEVEL:
        raise ResourceLimitError(
            f"analyze supports n <= {MAX_ANALYZE_VERTICES} and k <= {MAX_ANALYZE_LEVEL}, got n={g.n}, k={k}"
        )
    arrangement = build_deformation(g, k)
    coned_charpoly = characteristic_polynomial(cone(arrangement))
    signed_graph = sign_map(g)
    ordering = find_a1_a2_ordering(g)
    roots = integer_root_split(coned_charpoly)

    report = AnalysisReport(
        digraph=g,
        k=k,
        signed_graph=signed_graph,
        forbidden_pattern=find_forbidden_triple(g),
        a1_a2_ordering=ordering,
        elimination_ordering=find_elimination_ordering(signed_graph),
        charpoly=characteristic_polynomial(arrangement),
        coned_charpoly=coned_charpoly,
        coned_roots=roots,
        multiplicity=ziegler_multiplicity(g, k),
        hyperplane_count=len(arrangement),
        verdict="free_predicted" if ordering is not None else "not_free",
    )
    if report.verdict == "free_predicted" and (roots is None or min(roots) < 0):
        raise VerificationError(
            f"chi(cA_G) = {coned_charpoly} does not split over the nonnegative integers "
            f"although the digraph satisfies (A1) and (A2)"
        )
    LOGGER.debug("Analyzed digraph on %d vertices at k=%d: %s", g.n, k, report.verdict)
    return report


def _ordering_text(ordering: Optional[VertexOrdering]) -> str:
    return "none" if ordering is None else " ".join(str(v) for v in ordering.sequence)


def format_report(report: AnalysisReport) -> str:
    g = report.digraph
    arcs = ", ".join(f"{i}->{j}" for i, j in sorted(g.edges)) or "none"
    pattern = report.forbidden_pattern
    lines = [
        f"digraph: n={g.n} arcs: {arcs}",
        f"level: k={report.k}",
        "signed graph:",
        *(f"  {line}" for line in format_signed_graph_text(report.signed_graph).splitlines()),
        f"forbidden pattern: {'none' if pattern is None else f'{pattern.kind} at {pattern.witness}'}",
        f"(A1)/(A2) ordering: {_ordering_text(report.a1_a2_ordering)}",
        f"elimination ordering: {_ordering_text(report.elimination_ordering)}",
        f"hyperplanes: {report.hyperplane_count}",
        "multiplicity: " + " ".join(f"{i}{j}:{m}" for (i, j), m in sorted(report.multiplicity.mult.items())),
        f"chi(A_G, t) = {report.charpoly}",
        f"chi(cA_G, t) = {report.coned_charpoly}",
        f"roots of chi(cA_G): {'none' if report.coned_roots is None else ' '.join(map(str, report.coned_roots))}",
        f"verdict: {report.verdict}",
    ]
    return "\n".join(lines)


__all__ = [
    "MAX_ANALYZE_VERTICES",
    "MAX_ANALYZE_LEVEL",
    "VerdictLiteral",
    "AnalysisReport",
    "analyze",
    "format_report",
]
