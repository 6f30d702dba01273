"""
Deformations of the braid arrangement defined by a digraph, coning, and
localization at flats given by generating equations.

For a digraph G on n vertices and a level k >= 0 the deformation A_G has, for
every pair i < j, the hyperplanes

    x_i - x_j = c,   c = -k - epsilon(i, j), ..., k + epsilon(j, i).
"""

from functools import lru_cache
from typing import Sequence

import sympy

from .errors import InputError
from .objects import Arrangement, Digraph, Hyperplane


def build_deformation(g: Digraph, k: int) -> Arrangement:
    if g.n < 2:
        raise InputError(f"A deformation needs at least 2 vertices, got n={g.n}")
    if k < 0:
        raise InputError(f"Level k must be nonnegative, got {k}")
    hyperplanes = [
        Hyperplane.difference(g.n, i, j, c)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        for c in range(-k - g.epsilon(i, j), k + g.epsilon(j, i) + 1)
    ]
    return Arrangement.new(g.n, hyperplanes)


def cone(a: Arrangement) -> Arrangement:
    """Homogenize with a new last coordinate z and add the marker z = 0."""
    marker = Hyperplane.coordinate(a.dim + 1, a.dim)
    return Arrangement.new(
        a.dim + 1,
        [h.homogenize() for h in a.hyperplanes] + [marker],
        marker=marker,
    )


Echelon = tuple[tuple[int, tuple], ...]


@lru_cache(maxsize=4096)
def _echelon(flat: tuple[Hyperplane, ...]) -> Echelon:
    """Pivot rows of the reduced row echelon form of the augmented flat equations."""
    augmented = sympy.Matrix([[*h.normal, h.offset] for h in flat])
    reduced, pivots = augmented.rref()
    if flat[0].dim in pivots:
        raise InputError("Flat equations are inconsistent")
    return tuple((pivot, tuple(reduced.row(r))) for r, pivot in enumerate(pivots))


def _reduce_against(row: list, echelon: Echelon) -> list:
    for pivot, basis_row in echelon:
        factor = row[pivot]
        if factor != 0:
            row = [x - factor * y for x, y in zip(row, basis_row)]
    return row


def general_localize(a: Arrangement, flat: Sequence[Hyperplane]) -> Arrangement:
    """Subarrangement of the hyperplanes containing the flat cut out by `flat`.

    A hyperplane contains the flat exactly when its augmented row
    (normal | offset) is a rational combination of the rows of `flat`.
    """
    for h in flat:
        if h.dim != a.dim:
            raise InputError(f"Flat equation {h} lives in dimension {h.dim}, not {a.dim}")
    if not flat:
        return Arrangement.new(a.dim)

    echelon = _echelon(tuple(flat))
    members = [
        h for h in a.hyperplanes if not any(_reduce_against([*h.normal, h.offset], echelon))
    ]
    marker = a.marker if a.marker is not None and a.marker in members else None
    return Arrangement.new(a.dim, members, marker=marker)


def localize_triple(ca: Arrangement, i: int, j: int, k: int) -> Arrangement:
    """Localization of a coned deformation at {x_i = x_j = x_k, z = 0}."""
    if ca.marker is None:
        raise InputError("localize_triple needs a coned arrangement with a marker")
    vertices = ca.dim - 1
    for v in (i, j, k):
        if not 0 <= v < vertices:
            raise InputError(f"Coordinate {v} is out of range for {vertices} vertices")
    if len({i, j, k}) != 3:
        raise InputError(f"Coordinates {(i, j, k)} are not distinct")
    flat = [
        Hyperplane.difference(ca.dim, i, j),
        Hyperplane.difference(ca.dim, j, k),
        ca.marker,
    ]
    return general_localize(ca, flat)


def project_arrangement(a: Arrangement, coordinates: Sequence[int]) -> Arrangement:
    """Keep only `coordinates`, in that order; every hyperplane must be supported on them."""
    if len(set(coordinates)) != len(coordinates):
        raise InputError(f"Duplicate coordinates in {list(coordinates)}")
    for c in coordinates:
        if not 0 <= c < a.dim:
            raise InputError(f"Coordinate {c} is out of range for dim={a.dim}")
    kept = set(coordinates)

    def project(h: Hyperplane) -> Hyperplane:
        if not h.support <= kept:
            raise InputError(f"Hyperplane {h} is not supported on coordinates {list(coordinates)}")
        return Hyperplane.new([h.normal[c] for c in coordinates], h.offset)

    marker = project(a.marker) if a.marker is not None else None
    return Arrangement.new(len(coordinates), [project(h) for h in a.hyperplanes], marker=marker)


def format_arrangement(a: Arrangement) -> str:
    """One `c : a_0 ... a_{d-1}` line per hyperplane, sorted by (offset, normal)."""
    return "\n".join(str(h) for h in a.sorted_hyperplanes())


__all__ = [
    "build_deformation",
    "cone",
    "general_localize",
    "localize_triple",
    "project_arrangement",
    "format_arrangement",
]
