"""Hand-built systems with known codimension.

``points`` lists the full zero set in the torus when it is finite; every
entry was solved by hand (substitution) and is cross-checked against sympy
in the tests.
"""
from dataclasses import dataclass

import sympy

from goodcompact.laurent import parse

I = sympy.I


@dataclass(frozen=True)
class Case:
    name: str
    rank: int
    equations: tuple
    codim: int
    points: tuple | None = None
    kind: str = ""

    def system(self):
        return [parse(t, self.rank) for t in self.equations]


FINITE = [
    Case("hyperbola_diagonal", 2, ("x1*x2 - 1", "x1 - x2"), 2, ((1, 1), (-1, -1)), "point set"),
    Case("point_rank2", 2, ("x1 - 1", "x2 - 1"), 2, ((1, 1),), "point"),
    Case("circle_hyperbola", 2, ("x1^2 + x2^2 - 5", "x1*x2 - 2"), 2,
         ((1, 2), (2, 1), (-1, -2), (-2, -1)), "complete intersection"),
    Case("laurent_tangent", 2, ("x1 + x1^-1 - x2", "x2 - 2"), 2, ((1, 2),), "point"),
    Case("parabola_line", 2, ("x2 - x1^2", "x2 - x1 - 2"), 2, ((2, 4), (-1, 1)), "complete intersection"),
    Case("imaginary_pair", 2, ("x1^2 + 1", "x2 - x1"), 2, ((I, I), (-I, -I)), "point set"),
    Case("point_rank3", 3, ("x1 - 1", "x2 - 2", "x3 - 3"), 3, ((1, 2, 3),), "point"),
    Case("two_points_rank3", 3, ("x1^2 - 1", "x2 - x1", "x1*x3 - 2"), 3,
         ((1, 1, 2), (-1, -1, -2)), "point set"),
    Case("diagonal_redundant", 3, ("x1 - x2", "x2 - x3", "x1 - x3", "x1*x2 - 4"), 3,
         ((2, 2, 2), (-2, -2, -2)), "redundant"),
    Case("tangent_rank3", 3, ("x1 + x2 + x3 - 6", "x1*x2 - 2", "x3 - x1 - 2"), 3, ((1, 2, 3),), "point"),
]

POSITIVE_DIM = [
    Case("line_rank2", 2, ("x1 - x2",), 1, kind="hypersurface"),
    Case("plane_rank3", 3, ("x1 + x2 + x3 + 1",), 1, kind="hypersurface"),
    Case("subtorus_coset", 3, ("x1 - x2", "x2 - x3"), 2, kind="subtorus coset"),
    Case("shifted_coset", 3, ("x1*x2^-1 - 2", "x3 - 3*x1"), 2, kind="subtorus coset"),
    Case("curve_rank3", 3, ("x1 + x2 + x3 - 3", "x1*x2*x3 - 1"), 2, kind="complete intersection"),
    Case("repeated", 2, ("x1*x2 - 1", "x1*x2 - 1"), 1, kind="redundant"),
    Case("multiples", 3, ("x1 - x2", "x1^2 - x2^2", "x1*x3 - x2*x3"), 1, kind="redundant"),
    Case("binomial_rank4", 4, ("x1*x2 - x3*x4",), 1, kind="hypersurface"),
    Case("coset_rank4", 4, ("x1 - x2", "x3 - x4"), 2, kind="subtorus coset"),
    Case("hyperbolic_curve", 3, ("x1*x2*x3 - 1", "x1 - x2"), 2, kind="complete intersection"),
    Case("curve_rank4", 4, ("x1 + x2 - 2", "x2*x3 - 1", "x4 - x1*x3"), 3, kind="complete intersection"),
    Case("surface_rank4", 4, ("x1 + x2 + x3 + x4 - 4", "x1*x2 - x3*x4"), 2, kind="complete intersection"),
    Case("point_rank4", 4, ("x1 - 1", "x2 - x1", "x3 - 2", "x4 - x3*x1"), 4, kind="point"),
    Case("repeated_and_implied", 3, ("x1*x2 - x3", "x1*x2 - x3", "x3^2 - x1^2*x2^2", "x1 - 1"), 2,
         kind="redundant"),
]

EMPTY = [
    Case("parallel_lines", 2, ("x1 - 1", "x1 - 2"), 3, kind="empty"),
    Case("inconsistent_rank3", 3, ("x1 + x2 + 1", "x1 - x2 + 2", "x1^2 + x2"), 4, kind="empty"),
]

CORPUS = FINITE + POSITIVE_DIM
