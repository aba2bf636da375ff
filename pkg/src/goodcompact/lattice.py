"""Integer lattice plumbing for splitting the torus along a covector.

A primitive covector ``phi`` on Z^n is completed to a unimodular basis
``(kernel_basis, e)`` with ``<phi, e> = 1``.  The kernel sublattice is then
identified with Z^(n-1) through :func:`push_down` / :func:`pull_up`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from ._linalg import Vector, det, dot, hermite_rows, mat_vec, xgcd

__all__ = [
    "TorusSplit",
    "make_primitive",
    "complete_split",
    "push_down",
    "pull_up",
    "is_primitive",
]


def make_primitive(v: Sequence[int]) -> tuple[Vector, int]:
    """Divide an integer vector by the gcd of its entries.

    Returns ``(primitive_vector, content)`` with ``content > 0``; the sign of
    ``v`` is kept on the vector.

    >>> make_primitive((2, 4, -6))
    ((1, 2, -3), 2)
    """
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(int(x) // g for x in v), g


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


@dataclass(frozen=True)
class TorusSplit:
    """Covector ``phi``, vector ``e`` with ``<phi, e> = 1`` and a basis of ``ker phi``.

    ``t = x^e`` is the elimination variable; characters in ``ker phi`` are the
    coordinates on the complementary codimension-one subtorus.
    """

    phi: Vector
    e: Vector
    kernel_basis: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.phi)

    def check(self) -> None:
        """Raise ``AssertionError`` if an invariant fails (exact arithmetic)."""
        assert dot(self.phi, self.e) == 1
        assert all(dot(self.phi, b) == 0 for b in self.kernel_basis)
        assert len(self.kernel_basis) == self.rank - 1
        cols = list(self.kernel_basis) + [self.e]
        rows = [[c[i] for c in cols] for i in range(self.rank)]
        assert abs(det(rows)) == 1


def complete_split(phi: Sequence[int]) -> TorusSplit:
    """Complete a primitive covector to a unimodular basis.

    Column operations driven by the extended gcd, left to right, give an
    unimodular ``U`` with ``phi U = (1, 0, ..., 0)``.  The kernel columns are
    then brought to Hermite form and ``e`` is reduced against them, so the
    output only depends on ``phi``.
    """
    phi = tuple(int(x) for x in phi)
    n = len(phi)
    if n < 1:
        raise ValueError("covector must have rank >= 1")
    if not is_primitive(phi):
        raise ValueError(f"covector {phi} is not primitive")
    cols = [[int(i == j) for i in range(n)] for j in range(n)]
    v = list(phi)
    for j in range(1, n):
        if v[j] == 0:
            continue
        a, b = v[0], v[j]
        g, x, y = xgcd(a, b)
        c0 = [x * p + y * q for p, q in zip(cols[0], cols[j])]
        cj = [(-b // g) * p + (a // g) * q for p, q in zip(cols[0], cols[j])]
        cols[0], cols[j] = c0, cj
        v[0], v[j] = g, 0
    if v[0] == -1:
        cols[0] = [-p for p in cols[0]]
    kernel = hermite_rows(cols[1:]) if n > 1 else []
    e = list(cols[0])
    for row in kernel:
        c = next(i for i, x in enumerate(row) if x)
        q = e[c] // row[c]
        if q:
            e = [p - q * r for p, r in zip(e, row)]
    split = TorusSplit(phi, tuple(e), tuple(kernel))
    split.check()
    return split


def push_down(m: Sequence[int], split: TorusSplit) -> Vector:
    """Coordinates of a kernel vector in ``split.kernel_basis``."""
    m = [int(x) for x in m]
    if dot(split.phi, m) != 0:
        raise ValueError(f"{tuple(m)} not in kernel sublattice of {split.phi}")
    coords = []
    for row in split.kernel_basis:
        c = next(i for i, x in enumerate(row) if x)
        q, r = divmod(m[c], row[c])
        # Hermite basis of a saturated lattice: division is always exact here
        assert r == 0
        coords.append(q)
        m = [p - q * s for p, s in zip(m, row)]
    assert not any(m)
    return tuple(coords)


def pull_up(coords: Sequence[int], split: TorusSplit) -> Vector:
    """Inverse of :func:`push_down`."""
    if len(coords) != len(split.kernel_basis):
        raise ValueError("coordinate length does not match the kernel rank")
    if not split.kernel_basis:
        return tuple(0 for _ in split.phi)
    return mat_vec(split.kernel_basis, coords)


def decompose(m: Sequence[int], split: TorusSplit) -> tuple[int, Vector]:
    """Write ``m = d*e + pull_up(c)``; return ``(d, c)`` with ``d = <phi, m>``."""
    d = dot(split.phi, m)
    rest = [x - d * y for x, y in zip(m, split.e)]
    return d, push_down(rest, split)
