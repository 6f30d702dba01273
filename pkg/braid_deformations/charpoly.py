"""
Characteristic polynomials of integer arrangements by the finite-field method.

For a prime q of good reduction, chi(A, q) is the number of points of F_q^dim
lying on no hyperplane of A. Counting at dim + 1 admissible primes determines
the monic polynomial; one more prime verifies it.

Before counting, directions along which every hyperplane is translation
invariant (the rational kernel of the normal matrix) are split off: each such
direction contributes a factor t. The reduced count is then vectorized over
the last coordinate, where every hyperplane forbids at most one value.
"""

import logging
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Iterator, NamedTuple, Optional

import numpy as np
import sympy

from .errors import BadReductionError, InputError, ResourceLimitError
from .objects import Arrangement, IntPolynomial, PrimeEvaluation

LOGGER = logging.getLogger(__name__)

MAX_POINTS_PER_EVALUATION = 10**8
MAX_ESCALATIONS = 3
BLOCK_ROWS = 1 << 14
CACHE_SIZE = 4096

_T = sympy.Symbol("t")


class ReducedArrangement(NamedTuple):
    normals: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    translations: int  # translation-invariant directions split off
    max_pivot: int

    @property
    def dim(self) -> int:
        return len(self.normals[0]) if self.normals else 0


def reduction_bound(a: Arrangement) -> int:
    """Primes above max(dim, 2 * max|entry| + 1) are admissible."""
    largest = max((abs(x) for h in a.hyperplanes for x in (*h.normal, h.offset)), default=0)
    return max(a.dim, 2 * largest + 1)


def admissible_primes(bound: int, count: int) -> list[int]:
    """The `count` smallest primes strictly above `bound`."""
    primes = []
    q = bound
    while len(primes) < count:
        q = sympy.nextprime(q)
        primes.append(int(q))
    return primes


def _integer_kernel_vector(columns: list[list[int]]) -> Optional[list[int]]:
    # `columns` are the columns of the normal matrix
    matrix = sympy.Matrix(columns).T
    kernel = matrix.nullspace()
    if not kernel:
        return None
    v = kernel[0]
    scale = lcm(*(int(x.q) for x in v))
    return [int(x * scale) for x in v]


@lru_cache(maxsize=CACHE_SIZE)
def reduce_arrangement(a: Arrangement) -> ReducedArrangement:
    """Split off translation-invariant directions.

    If v is an integer kernel vector of the normal matrix and v_p is its
    smallest nonzero entry, every line x + F_q v meets x_p = 0 exactly once for
    q > |v_p|, so the count is q times the count with coordinate p deleted.
    """
    hyperplanes = a.sorted_hyperplanes()
    columns = [[h.normal[c] for h in hyperplanes] for c in range(a.dim)]
    translations, max_pivot = 0, 0
    while columns:
        v = _integer_kernel_vector(columns)
        if v is None:
            break
        p = min((c for c in range(len(v)) if v[c] != 0), key=lambda c: abs(v[c]))
        max_pivot = max(max_pivot, abs(v[p]))
        del columns[p]
        translations += 1
    normals = tuple(zip(*columns)) if columns else ()
    return ReducedArrangement(
        normals=normals,
        offsets=tuple(h.offset for h in hyperplanes),
        translations=translations,
        max_pivot=max_pivot,
    )


def _prefix_blocks(width: int, q: int) -> Iterator[np.ndarray]:
    """All of F_q^width in lexicographic order, as blocks of at most BLOCK_ROWS rows."""
    inner = 0
    while inner < width and q ** (inner + 1) <= BLOCK_ROWS:
        inner += 1
    grid = np.array(list(product(range(q), repeat=inner)), dtype=np.int64).reshape(q**inner, inner)
    for outer in np.ndindex(*((q,) * (width - inner))):
        head = np.broadcast_to(np.array(outer, dtype=np.int64), (len(grid), len(outer)))
        yield np.hstack([head, grid])


def _count_reduced(reduced: ReducedArrangement, q: int) -> int:
    normals = np.array(reduced.normals, dtype=np.int64) % q
    offsets = np.array(reduced.offsets, dtype=np.int64) % q
    last = normals[:, -1]
    head = normals[:, :-1]
    free = last == 0
    solvable = ~free
    inverse = np.array([pow(int(c), -1, q) for c in last[solvable]], dtype=np.int64)

    total = 0
    for block in _prefix_blocks(reduced.dim - 1, q):
        partial = (block @ head.T) % q
        # hyperplanes not involving the last coordinate exclude the whole row
        blocked = (partial[:, free] == offsets[free]).any(axis=1)
        if inverse.size:
            forbidden = np.sort(((offsets[solvable] - partial[:, solvable]) * inverse) % q, axis=1)
            distinct = 1 + np.count_nonzero(np.diff(forbidden, axis=1), axis=1)
        else:
            distinct = np.zeros(len(block), dtype=np.int64)
        total += int(np.where(blocked, 0, q - distinct).sum())
    return total


def _effective_bound(a: Arrangement, reduced: ReducedArrangement) -> int:
    return max(reduction_bound(a), reduced.max_pivot)


def count_complement_points(a: Arrangement, q: int) -> PrimeEvaluation:
    if not sympy.isprime(q):
        raise InputError(f"{q} is not prime")
    if not a.hyperplanes:
        return PrimeEvaluation(q=q, dim=a.dim, count=q**a.dim)
    reduced = reduce_arrangement(a)
    bound = _effective_bound(a, reduced)
    if q <= bound:
        raise InputError(f"Prime {q} is not above the reduction bound {bound}")
    if q**reduced.dim > MAX_POINTS_PER_EVALUATION:
        raise ResourceLimitError(
            f"{q}^{reduced.dim} points exceed the budget of {MAX_POINTS_PER_EVALUATION} per evaluation"
        )
    count = q**reduced.translations * _count_reduced(reduced, q)
    return PrimeEvaluation(q=q, dim=a.dim, count=count)


def _fit(points: list[tuple[int, int]], degree: int) -> Optional[IntPolynomial]:
    poly = sympy.Poly(sympy.interpolate(points, _T), _T)
    coeffs = poly.all_coeffs()
    if poly.degree() != degree or coeffs[0] != 1 or not all(c.is_integer for c in coeffs):
        return None
    return IntPolynomial.from_sympy(poly)


@lru_cache(maxsize=CACHE_SIZE)
def characteristic_polynomial(a: Arrangement) -> IntPolynomial:
    if not a.hyperplanes:
        return IntPolynomial.monomial(a.dim)
    reduced = reduce_arrangement(a)
    bound = _effective_bound(a, reduced)
    for attempt in range(MAX_ESCALATIONS + 1):
        primes = admissible_primes(bound, reduced.dim + 2)
        LOGGER.debug(
            "Counting %d hyperplanes in dim %d (reduced %d) at primes %s",
            len(a), a.dim, reduced.dim, primes,
        )
        points = [(q, count_complement_points(a, q).count // q**reduced.translations) for q in primes]
        fitted = _fit(points[:-1], reduced.dim)
        check_q, check_count = points[-1]
        if fitted is not None and fitted(check_q) == check_count:
            return fitted.shift(reduced.translations)
        LOGGER.warning(
            "Bad reduction suspected at primes %s (attempt %d); raising bound from %d to %d",
            primes, attempt + 1, bound, 2 * bound,
        )
        bound *= 2
    raise BadReductionError(
        f"bad reduction suspected: counts did not fit a monic integer polynomial after {MAX_ESCALATIONS} escalations"
    )


def integer_root_split(p: IntPolynomial) -> Optional[tuple[int, ...]]:
    """Sorted integer roots with multiplicity if p = prod (t - r_i), else None."""
    if not p.is_monic:
        raise InputError(f"Polynomial {p} is not monic")
    zeros = next(d for d, c in enumerate(p.coeffs) if c != 0)
    roots = [0] * zeros
    rest = IntPolynomial.new(p.coeffs[zeros:])
    if rest.degree > 0:
        constant = abs(rest.coeffs[0])
        for d in sympy.divisors(constant):
            for candidate in (int(d), -int(d)):
                while rest.degree > 0:
                    quotient, remainder = rest.divide_linear(candidate)
                    if remainder != 0:
                        break
                    roots.append(candidate)
                    rest = quotient
    if rest.degree > 0:
        return None
    return tuple(sorted(roots))


__all__ = [
    "MAX_POINTS_PER_EVALUATION",
    "MAX_ESCALATIONS",
    "ReducedArrangement",
    "reduction_bound",
    "admissible_primes",
    "reduce_arrangement",
    "count_complement_points",
    "characteristic_polynomial",
    "integer_root_split",
]
