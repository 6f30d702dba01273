"""
Exhaustive verification harnesses.

Each harness walks digraphs by their index in the enumeration order, collects
counters and violations per chunk of indices, and merges the chunks by
summation and concatenation. Chunks run inline for a single worker and in a
process pool otherwise, so every chunk worker is a module-level function of
picklable arguments.
"""

import logging
import random
from collections import Counter
from functools import partial
from itertools import combinations
from multiprocessing import Pool
from typing import Callable, Literal, NamedTuple, Optional, Sequence

from tqdm import tqdm

from braid_deformations.arrangement import (
    build_deformation,
    cone,
    localize_triple,
    project_arrangement,
)
from braid_deformations.charpoly import characteristic_polynomial, integer_root_split
from braid_deformations.digraph import (
    digraph_count,
    digraph_from_index,
    find_a1_a2_ordering,
    find_forbidden_triple,
    induced_subgraph,
    satisfies_a1_a2_under,
)
from braid_deformations.errors import InputError, ResourceLimitError
from braid_deformations.formats import format_digraph_text
from braid_deformations.objects import (
    Digraph,
    DigraphFactory,
    IntPolynomial,
    PATTERN_TEMPLATES,
    VertexOrdering,
)
from braid_deformations.signed_graph import (
    enumerate_liftings,
    enumerate_signed_graphs,
    find_elimination_ordering,
    is_signed_eliminable_under,
    sign_map,
)
from .base import (
    ConingSummary,
    ExponentPattern,
    FactorizationSummary,
    LemmaVector,
    LemmaVectorsSummary,
    LiftingCase,
    LiftingCasesSummary,
    LocalizationSummary,
    PropositionCharSummary,
    Violation,
)
from .config import HarnessConfig

LOGGER = logging.getLogger(__name__)

DigraphFilterLiteral = Literal["a1a2", "forbidden", "eliminable"]

LONG_RUN_VERTICES = 5
MAX_LEMMA_LEVEL = 3
MAX_FACTORIZATION_VERTICES = 4
MAX_FACTORIZATION_LEVEL = 2
MAX_LOCALIZATION_VERTICES = 5
MAX_EXHAUSTIVE_LOCALIZATION_VERTICES = 4
DEFAULT_LOCALIZATION_SAMPLE = 256

LEMMA_CLOSED_FORMS: dict[str, Callable[[int], tuple[int, int]]] = {
    "path": lambda k: (6 * k + 5, 9 * k * k + 15 * k + 7),
    "cycle": lambda k: (6 * k + 6, 9 * k * k + 18 * k + 11),
    "cycle_plus_chord": lambda k: (6 * k + 7, 9 * k * k + 21 * k + 13),
}
"""chi(A_G, t) = t (t^2 - b t + c) for each forbidden pattern; values are (b, c) at level k."""

LIFTING_CASE_TABLE: dict[tuple[int, int], tuple[int, int, int]] = {
    (0, 0): (1, 4, 1),
    (1, 0): (2, 7, 3),
    (0, 1): (3, 7, 3),
    (2, 0): (4, 2, 0),
    (0, 2): (5, 2, 0),
    (1, 1): (6, 2, 0),
    (3, 0): (7, 1, 0),
    (0, 3): (8, 1, 0),
    (2, 1): (9, 1, 0),
    (1, 2): (10, 1, 0),
}
"""(|E+|, |E-|) -> (case number, liftings up to swapping 0 and 1, liftings failing (A1)/(A2))."""

Task = tuple[int, int, Sequence[int]]
"""(n, k, digraph indices) handed to a chunk worker."""


class ChunkResult(NamedTuple):
    checked: int
    counts: Counter[str]
    violations: list[Violation]
    # integer roots of chi(cA_G); only the factorization harness fills it
    patterns: Counter[tuple[int, ...]]


def matches_filter(g: Digraph, kind: DigraphFilterLiteral) -> bool:
    if kind == "a1a2":
        return find_a1_a2_ordering(g) is not None
    if kind == "forbidden":
        return find_forbidden_triple(g) is not None
    return find_elimination_ordering(sign_map(g)) is not None


def _index_tasks(n: int, k: int, indices: Sequence[int], chunk_size: int) -> list[Task]:
    return [(n, k, indices[s : s + chunk_size]) for s in range(0, len(indices), chunk_size)]


def _run(worker: Callable[[Task], ChunkResult], tasks: list[Task], config: HarnessConfig, desc: str) -> ChunkResult:
    bar = partial(tqdm, total=len(tasks), desc=desc, unit="chunk", disable=not config.progress)
    if config.workers == 1 or len(tasks) <= 1:
        results = list(bar(map(worker, tasks)))
    else:
        with Pool(min(config.workers, len(tasks))) as pool:
            results = list(bar(pool.imap(worker, tasks)))
    counts: Counter[str] = Counter()
    patterns: Counter[tuple[int, ...]] = Counter()
    for r in results:
        counts.update(r.counts)
        patterns.update(r.patterns)
    violations = sorted(
        (v for r in results for v in r.violations),
        key=lambda v: (-1 if v.index is None else v.index, v.subject, v.detail),
    )
    return ChunkResult(sum(r.checked for r in results), counts, violations, patterns)


def _config(config: Optional[HarnessConfig]) -> HarnessConfig:
    return config if config is not None else HarnessConfig.from_env()


def _check_range(name: str, value: int, low: int, high: int) -> None:
    if value < low:
        raise InputError(f"{name} must be at least {low}, got {value}")
    if value > high:
        raise ResourceLimitError(f"{name} is limited to {high}, got {value}")


# ---------------------------------------------------------------------------
# (A1)/(A2) against signed eliminability and forbidden triples


def _prop_char_chunk(task: Task) -> ChunkResult:
    n, _, indices = task
    counts: Counter[str] = Counter()
    violations = []
    for index in indices:
        g = digraph_from_index(n, index)
        has_ordering = find_a1_a2_ordering(g) is not None
        pattern = find_forbidden_triple(g)
        eliminable = find_elimination_ordering(sign_map(g)) is not None
        counts["satisfies_a1_a2"] += has_ordering
        counts["forbidden_triple"] += pattern is not None
        counts["not_signed_eliminable"] += not eliminable
        counts["forbidden_and_not_eliminable"] += pattern is not None and not eliminable
        if has_ordering != (eliminable and pattern is None):
            violations.append(
                Violation(
                    subject=format_digraph_text(g),
                    index=index,
                    detail=f"a1_a2={has_ordering} signed_eliminable={eliminable} forbidden={pattern}",
                )
            )
    return ChunkResult(len(indices), counts, violations, Counter())


def verify_proposition_char(
    n: int, allow_long: bool = False, config: Optional[HarnessConfig] = None
) -> PropositionCharSummary:
    """Check over all digraphs on n vertices that an (A1)/(A2) ordering exists
    exactly when S(G) is signed eliminable and G has no forbidden triple.

    Args:
        n (int): Number of vertices, 1 <= n <= 5.
        allow_long (bool): Required for n = 5 (2^20 digraphs); forces progress output.
        config (HarnessConfig, optional): Worker settings. Defaults to `HarnessConfig.from_env()`.
    """
    _check_range("n", n, 1, LONG_RUN_VERTICES)
    config = _config(config)
    if n == LONG_RUN_VERTICES:
        if not allow_long:
            raise ResourceLimitError(f"n={n} enumerates 2^{n * (n - 1)} digraphs; pass allow_long to run it")
        config = config.model_copy(update={"progress": True})
    total = digraph_count(n)
    LOGGER.info("Checking the (A1)/(A2) characterization on %d digraphs with n=%d", total, n)
    result = _run(_prop_char_chunk, _index_tasks(n, 0, range(total), config.chunk_size), config, f"prop-char n={n}")
    LOGGER.info("Checked %d digraphs, %d violations", result.checked, len(result.violations))
    return PropositionCharSummary(
        n=n,
        checked=result.checked,
        violations=tuple(result.violations),
        satisfies_a1_a2=result.counts["satisfies_a1_a2"],
        forbidden_triple=result.counts["forbidden_triple"],
        not_signed_eliminable=result.counts["not_signed_eliminable"],
        forbidden_and_not_eliminable=result.counts["forbidden_and_not_eliminable"],
    )


# ---------------------------------------------------------------------------
# closed forms of the forbidden patterns


def lemma_polynomial(kind: str, k: int) -> IntPolynomial:
    b, c = LEMMA_CLOSED_FORMS[kind](k)
    return IntPolynomial.new([0, c, -b, 1])


def verify_lemma_vectors(k_max: int) -> LemmaVectorsSummary:
    _check_range("k_max", k_max, 0, MAX_LEMMA_LEVEL)
    vectors = []
    violations = []
    for kind in PATTERN_TEMPLATES:
        for k in range(k_max + 1):
            expected = lemma_polynomial(kind, k)
            computed = characteristic_polynomial(build_deformation(DigraphFactory.from_pattern(kind), k))
            vectors.append(LemmaVector(kind=kind, k=k, expected=str(expected), computed=str(computed)))
            subject = f"pattern={kind} k={k}"
            if computed != expected:
                violations.append(Violation(subject=subject, detail=f"expected {expected}, computed {computed}"))
                continue
            quadratic, _ = computed.divide_linear(0)
            roots = integer_root_split(quadratic)
            if roots is not None:
                violations.append(Violation(subject=subject, detail=f"{quadratic} has integer roots {roots}"))
    LOGGER.info("Checked %d pattern polynomials, %d violations", len(vectors), len(violations))
    return LemmaVectorsSummary(
        k_max=k_max, checked=len(vectors), vectors=tuple(vectors), violations=tuple(violations)
    )


# ---------------------------------------------------------------------------
# splitting of coned characteristic polynomials


def _factorization_chunk(task: Task) -> ChunkResult:
    n, k, indices = task
    counts: Counter[str] = Counter()
    patterns: Counter[tuple[int, ...]] = Counter()
    violations = []
    for index in indices:
        g = digraph_from_index(n, index)
        if find_a1_a2_ordering(g) is None:
            continue
        counts["a1_a2"] += 1
        chi = characteristic_polynomial(cone(build_deformation(g, k)))
        roots = integer_root_split(chi)
        if roots is None or min(roots) < 0:
            violations.append(
                Violation(subject=format_digraph_text(g), index=index, detail=f"chi(cA_G) = {chi} does not split")
            )
        else:
            patterns[roots] += 1
    return ChunkResult(len(indices), counts, violations, patterns)


def verify_factorization(n: int, k: int, config: Optional[HarnessConfig] = None) -> FactorizationSummary:
    """Every (A1)/(A2) digraph on n vertices has chi(cA_G) split over the nonnegative integers."""
    _check_range("n", n, 2, MAX_FACTORIZATION_VERTICES)
    _check_range("k", k, 0, MAX_FACTORIZATION_LEVEL)
    config = _config(config)
    total = digraph_count(n)
    LOGGER.info("Checking factorizations on %d digraphs with n=%d, k=%d", total, n, k)
    result = _run(
        _factorization_chunk, _index_tasks(n, k, range(total), config.chunk_size), config, f"factorization n={n} k={k}"
    )
    patterns = tuple(
        ExponentPattern(roots=roots, count=count)
        for roots, count in sorted(result.patterns.items())
    )
    LOGGER.info("Found %d exponent patterns, %d violations", len(patterns), len(result.violations))
    return FactorizationSummary(
        n=n,
        k=k,
        checked=result.checked,
        a1_a2_digraphs=result.counts["a1_a2"],
        exponent_patterns=patterns,
        violations=tuple(result.violations),
    )


# ---------------------------------------------------------------------------
# localization at triple flats


def _localization_chunk(task: Task) -> ChunkResult:
    n, k, indices = task
    counts: Counter[str] = Counter()
    violations = []
    for index in indices:
        g = digraph_from_index(n, index)
        ca = cone(build_deformation(g, k))
        for triple in combinations(range(n), 3):
            counts["triples"] += 1
            local = localize_triple(ca, *triple)
            induced = cone(build_deformation(induced_subgraph(g, triple), k))
            lhs = characteristic_polynomial(local)
            rhs = characteristic_polynomial(induced).shift(n - 3)
            if lhs != rhs:
                violations.append(
                    Violation(
                        subject=format_digraph_text(g),
                        index=index,
                        detail=f"triple {triple}: chi of localization {lhs} != {rhs}",
                    )
                )
            if project_arrangement(local, [*triple, n]) != induced:
                violations.append(
                    Violation(
                        subject=format_digraph_text(g),
                        index=index,
                        detail=f"triple {triple}: projected localization differs from the coned induced deformation",
                    )
                )
    return ChunkResult(len(indices), counts, violations, Counter())


def verify_localization(
    n: int,
    k: int,
    exhaustive: bool = False,
    sample: int = DEFAULT_LOCALIZATION_SAMPLE,
    seed: int = 0,
    config: Optional[HarnessConfig] = None,
) -> LocalizationSummary:
    """Compare each localization at {x_i = x_j = x_k} ∩ H_inf with the coned induced deformation.

    Exhaustive runs (n <= 4) take every digraph; otherwise `sample` digraph
    indices are drawn with `random.Random(seed)`.
    """
    _check_range("n", n, 3, MAX_LOCALIZATION_VERTICES)
    _check_range("k", k, 0, MAX_LEMMA_LEVEL)
    if exhaustive and n > MAX_EXHAUSTIVE_LOCALIZATION_VERTICES:
        raise ResourceLimitError(f"Exhaustive localization is limited to n <= {MAX_EXHAUSTIVE_LOCALIZATION_VERTICES}")
    if sample < 1:
        raise InputError(f"sample must be positive, got {sample}")
    config = _config(config)
    total = digraph_count(n)
    if exhaustive:
        indices: Sequence[int] = range(total)
    else:
        indices = sorted(random.Random(seed).sample(range(total), min(sample, total)))
    LOGGER.info("Checking localizations on %d of %d digraphs with n=%d, k=%d", len(indices), total, n, k)
    result = _run(
        _localization_chunk, _index_tasks(n, k, indices, config.chunk_size), config, f"localization n={n} k={k}"
    )
    LOGGER.info("Compared %d triples, %d violations", result.counts["triples"], len(result.violations))
    return LocalizationSummary(
        n=n,
        k=k,
        exhaustive=exhaustive,
        checked=result.checked,
        triples=result.counts["triples"],
        violations=tuple(result.violations),
    )


# ---------------------------------------------------------------------------
# coning identity


def _coning_chunk(task: Task) -> ChunkResult:
    n, k, indices = task
    violations = []
    t_minus_one = IntPolynomial.new([-1, 1])
    for index in indices:
        g = digraph_from_index(n, index)
        a = build_deformation(g, k)
        coned = characteristic_polynomial(cone(a))
        expected = characteristic_polynomial(a) * t_minus_one
        if coned != expected:
            violations.append(
                Violation(subject=format_digraph_text(g), index=index, detail=f"chi(cA) = {coned}, (t-1) chi(A) = {expected}")
            )
    return ChunkResult(len(indices), Counter(), violations, Counter())


def verify_coning_identity(n: int, k: int, config: Optional[HarnessConfig] = None) -> ConingSummary:
    """chi(cA_G) = (t - 1) chi(A_G) for all digraphs on n vertices, both sides counted independently."""
    _check_range("n", n, 2, MAX_FACTORIZATION_VERTICES)
    _check_range("k", k, 0, MAX_FACTORIZATION_LEVEL)
    config = _config(config)
    total = digraph_count(n)
    LOGGER.info("Checking the coning identity on %d digraphs with n=%d, k=%d", total, n, k)
    result = _run(_coning_chunk, _index_tasks(n, k, range(total), config.chunk_size), config, f"coning n={n} k={k}")
    return ConingSummary(n=n, k=k, checked=result.checked, violations=tuple(result.violations))


# ---------------------------------------------------------------------------
# liftings of eliminable signed graphs on three vertices

_SWAP = (1, 0, 2)


def _orbit_key(g: Digraph) -> tuple:
    return min(tuple(sorted(g.edges)), tuple(sorted(g.relabel(_SWAP).edges)))


def classify_lifting_cases() -> LiftingCasesSummary:
    """Count liftings of the signed graphs on {0, 1, 2} that are eliminable with apex 2.

    Liftings are grouped per (|E+|, |E-|) shape and identified up to swapping
    vertices 0 and 1; a lifting fails when (A1)/(A2) does not hold under the
    identity numbering.
    """
    identity = VertexOrdering.identity(3)
    liftings: dict[tuple[int, int], set] = {shape: set() for shape in LIFTING_CASE_TABLE}
    failing: dict[tuple[int, int], set] = {shape: set() for shape in LIFTING_CASE_TABLE}
    checked = 0
    for sg in enumerate_signed_graphs(3):
        if not is_signed_eliminable_under(sg, identity):
            continue
        shape = (len(sg.plus), len(sg.minus))
        for g in enumerate_liftings(sg):
            checked += 1
            key = _orbit_key(g)
            liftings[shape].add(key)
            if not satisfies_a1_a2_under(g, identity):
                failing[shape].add(key)

    cases = []
    violations = []
    for shape, (case, expected_liftings, expected_failing) in sorted(
        LIFTING_CASE_TABLE.items(), key=lambda item: item[1][0]
    ):
        row = LiftingCase(
            case=case,
            plus=shape[0],
            minus=shape[1],
            liftings=len(liftings[shape]),
            failing=len(failing[shape]),
            expected_liftings=expected_liftings,
            expected_failing=expected_failing,
        )
        cases.append(row)
        if not row.matches:
            violations.append(
                Violation(
                    subject=f"case {case}",
                    detail=f"{row.failing} of {row.liftings} liftings fail, expected {expected_failing} of {expected_liftings}",
                )
            )
    return LiftingCasesSummary(checked=checked, cases=tuple(cases), violations=tuple(violations))


__all__ = [
    "DigraphFilterLiteral",
    "LEMMA_CLOSED_FORMS",
    "LIFTING_CASE_TABLE",
    "matches_filter",
    "lemma_polynomial",
    "verify_proposition_char",
    "verify_lemma_vectors",
    "verify_factorization",
    "verify_localization",
    "verify_coning_identity",
    "classify_lifting_cases",
]
