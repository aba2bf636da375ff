"""Exact lattice volumes and the Bernstein count ``n! * MV``.

Volumes come from a placing triangulation read off the face lattice: cone
the first vertex over every facet that misses it, recursively.  All values
are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from ._linalg import Vector, det
from .polytope import LatticePolytope, minkowski_sum

__all__ = ["VolumeResult", "triangulate", "volume", "volume_result", "bkk_number", "mixed_volume"]


@dataclass(frozen=True)
class VolumeResult:
    value: Fraction
    triangulation: tuple[tuple[Vector, ...], ...]


def _simplex_volume(simplex: Sequence[Vector]) -> Fraction:
    v0 = simplex[0]
    rows = [[a - b for a, b in zip(v, v0)] for v in simplex[1:]]
    return Fraction(abs(det(rows)), factorial(len(rows)))


def triangulate(poly: LatticePolytope) -> list[tuple[Vector, ...]]:
    """Simplices (as vertex tuples) of a placing triangulation of ``poly``."""
    faces = poly.faces
    by_set = {frozenset(f.vertex_indices): f for f in faces}
    children: dict[frozenset, list[frozenset]] = {}
    for f in faces:
        fs = frozenset(f.vertex_indices)
        children[fs] = [
            frozenset(g.vertex_indices) for g in faces
            if g.dim == f.dim - 1 and frozenset(g.vertex_indices) < fs
        ]

    def rec(fs: frozenset) -> list[tuple[int, ...]]:
        if by_set[fs].dim == 0:
            return [(min(fs),)]
        apex = min(fs)
        out = []
        for g in children[fs]:
            if apex in g:
                continue
            out.extend((apex,) + s for s in rec(g))
        return out

    top = frozenset(range(len(poly.vertices)))
    return [tuple(poly.vertices[i] for i in s) for s in rec(top)]


def volume_result(poly: LatticePolytope) -> VolumeResult:
    if poly.dim < poly.ambient_rank:
        return VolumeResult(Fraction(0), ())
    simplices = triangulate(poly)
    return VolumeResult(sum((_simplex_volume(s) for s in simplices), Fraction(0)), tuple(simplices))


def volume(poly: LatticePolytope) -> Fraction:
    """Euclidean volume in the ambient space; ``0`` for lower-dimensional polytopes.

    >>> from goodcompact.polytope import hull
    >>> volume(hull([(0, 0), (1, 0), (0, 1)]))
    Fraction(1, 2)
    """
    return volume_result(poly).value


def bkk_number(polys: Sequence[LatticePolytope]) -> Fraction:
    """``n!`` times the mixed volume, by inclusion-exclusion over subsets."""
    if not polys:
        raise ValueError("need n polytopes of rank n, got none")
    n = polys[0].ambient_rank
    if any(p.ambient_rank != n for p in polys):
        raise ValueError("polytopes of different rank")
    if len(polys) != n:
        raise ValueError(f"need {n} polytopes of rank {n}, got {len(polys)}")
    total = Fraction(0)
    for size in range(1, n + 1):
        sign = -1 if (n - size) % 2 else 1
        for subset in itertools.combinations(polys, size):
            total += sign * volume(minkowski_sum(*subset))
    return total


def mixed_volume(polys: Sequence[LatticePolytope]) -> Fraction:
    return bkk_number(polys) / factorial(len(polys))
