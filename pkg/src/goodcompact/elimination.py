"""Resultants over a Laurent coefficient ring and projection to a subtorus.

For a split ``(phi, e)`` every equation becomes a polynomial in ``t = x^e``
whose coefficients are Laurent polynomials on the kernel of ``phi``.  The
pivot ``P`` is eliminated against ``Q_lambda = sum lambda_i Q_i``; the
coefficients of the resultant, as a polynomial in ``lambda``, cut out the
projection of the zero set.

Sign convention: Sylvester matrix with the ``q`` rows of ``P`` first,
coefficients in descending powers of ``t``.  Zero sets do not depend on it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import TorusSplit
from .laurent import LaurentPolynomial, UnivariatePoly, newton_polytope, to_univariate
from .polytope import face_in_direction, is_weakly_generic

__all__ = [
    "LambdaPoly",
    "Projection",
    "NoEquationsError",
    "NotWeaklyGenericError",
    "sylvester_matrix",
    "determinant",
    "det_cofactor",
    "det_bareiss",
    "resultant",
    "parametric_resultant",
    "project",
    "projection_equations",
]


class NoEquationsError(ValueError):
    """Only the pivot is left; there is nothing to eliminate against."""


class NotWeaklyGenericError(ValueError):
    def __init__(self, phi, face_min, face_max):
        self.phi = phi
        self.face_min = face_min
        self.face_max = face_max
        bad = face_min if not face_min.is_vertex else face_max
        side = "minimum" if bad is face_min else "maximum"
        super().__init__(
            f"split not weakly generic for pivot Newton polytope: phi={tuple(phi)} "
            f"attains its {side} on the face {list(bad.points)} (dim {bad.dim})"
        )


def _coeff_list(u, rank: int | None = None) -> list[LaurentPolynomial]:
    if isinstance(u, UnivariatePoly):
        return list(u.coeffs)
    out = []
    for c in u:
        if isinstance(c, LaurentPolynomial):
            out.append(c)
        else:
            out.append(LaurentPolynomial.constant(Fraction(c), rank or 0))
    return out


def sylvester_matrix(a: Sequence[LaurentPolynomial], b: Sequence[LaurentPolynomial], p: int, q: int):
    """``(p+q) x (p+q)`` Sylvester matrix of ascending coefficient lists.

    ``a`` is padded with zeros up to degree ``p`` and ``b`` up to ``q``.
    """
    if len(a) - 1 > p or len(b) - 1 > q:
        raise ValueError("declared degree is below the actual degree")
    r = (a or b)[0].ambient_rank
    zero = LaurentPolynomial.zero(r)
    a = list(a) + [zero] * (p + 1 - len(a))
    b = list(b) + [zero] * (q + 1 - len(b))
    size = p + q
    rows = []
    for i in range(q):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(p):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def det_cofactor(m):
    """Laplace expansion along the first row; skips zero entries."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = None
    for j, c in enumerate(m[0]):
        if c == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = c * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return m[0][0] * 0
    return total


def det_bareiss(m):
    """Fraction-free Gaussian elimination; every division is exact in the ring."""
    m = [list(r) for r in m]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        cands = [i for i in range(k, n) if m[i][k] != 0]
        if not cands:
            return m[0][0] * 0
        piv = min(cands, key=lambda i: (len(m[i][k]) if isinstance(m[i][k], LaurentPolynomial) else 1, i))
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        mkk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mkk * m[i][j] - m[i][k] * m[k][j]
                if prev is None:
                    m[i][j] = num
                elif isinstance(prev, LaurentPolynomial):
                    m[i][j] = num.exact_div(prev)
                else:
                    m[i][j] = num / prev
            m[i][k] = m[i][k] * 0
        prev = mkk
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


# Sylvester matrices are sparse, and up to this size Laplace expansion beats
# Bareiss, whose exact polynomial divisions dominate.
COFACTOR_MAX = 6


def determinant(m):
    if len(m) <= COFACTOR_MAX:
        return det_cofactor(m)
    return det_bareiss(m)


def resultant(P, Q, p: int | None = None, q: int | None = None) -> LaurentPolynomial:
    """``R_{p,q}(P, Q)``, the determinant of the Sylvester matrix.

    ``P`` and ``Q`` are :class:`UnivariatePoly` or ascending coefficient lists.
    With ``q = 0`` this is ``b_0^p``; with ``p = 0`` it is ``a_0^q``.
    """
    a, b = _coeff_list(P), _coeff_list(Q)
    r = a[0].ambient_rank if a else b[0].ambient_rank
    a = [c if isinstance(c, LaurentPolynomial) else LaurentPolynomial.constant(c, r) for c in a]
    b = [c if isinstance(c, LaurentPolynomial) else LaurentPolynomial.constant(c, r) for c in b]
    p = len(a) - 1 if p is None else p
    q = len(b) - 1 if q is None else q
    if p + q == 0:
        raise ValueError("empty resultant: p + q = 0")
    out = determinant(sylvester_matrix(a, b, p, q))
    if not isinstance(out, LaurentPolynomial):
        out = LaurentPolynomial.constant(out, r)
    return out


@dataclass(frozen=True)
class LambdaPoly:
    """Polynomial in ``lambda_1..lambda_N`` with Laurent coefficients.

    ``terms`` maps the exponent multi-index of ``lambda`` to its coefficient.
    """

    N: int
    terms: dict[tuple[int, ...], LaurentPolynomial]
    ambient_rank: int

    def coefficients(self) -> list[tuple[tuple[int, ...], LaurentPolynomial]]:
        """Nonzero coefficients, lambda multi-indices in decreasing lex order."""
        return sorted(((k, c) for k, c in self.terms.items() if not c.is_zero()), reverse=True)

    def specialize(self, lam: Sequence) -> LaurentPolynomial:
        out = LaurentPolynomial.zero(self.ambient_rank)
        for k, c in self.terms.items():
            w = Fraction(1)
            for x, e in zip(lam, k):
                w *= Fraction(x) ** e
            out = out + c.scale(w)
        return out

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(k) == degree for k, c in self.terms.items() if not c.is_zero())


def parametric_resultant(P: UnivariatePoly, Qs: Sequence[UnivariatePoly]) -> LambdaPoly:
    """``R(lambda) = R_{p,q}(P, lambda_1 Q_1 + ... + lambda_N Q_N)``.

    The ``lambda_i`` are appended as extra variables of the coefficient ring,
    the determinant is expanded there and regrouped by ``lambda`` monomial.
    """
    if not Qs:
        raise NoEquationsError("no equations to eliminate against")
    a = _coeff_list(P)
    bs = [_coeff_list(Q) for Q in Qs]
    r = a[0].ambient_rank
    N = len(Qs)
    p = len(a) - 1
    q = max(len(b) - 1 for b in bs)
    R = r + N
    a_l = [c.lift(R) for c in a]
    b_l = []
    for j in range(q + 1):
        acc = LaurentPolynomial.zero(R)
        for i, b in enumerate(bs):
            if j < len(b) and not b[j].is_zero():
                lam = tuple(int(s == r + i) for s in range(R))
                acc = acc + b[j].lift(R).mul_monomial(lam)
        b_l.append(acc)
    if p + q == 0:
        raise ValueError("empty resultant: p + q = 0")
    det = determinant(sylvester_matrix(a_l, b_l, p, q))
    if not isinstance(det, LaurentPolynomial):
        det = LaurentPolynomial.constant(det, R)
    groups: dict[tuple[int, ...], dict] = {}
    for m, c in det.terms.items():
        groups.setdefault(m[r:], {})[m[:r]] = c
    terms = {k: LaurentPolynomial(v, r) for k, v in groups.items()}
    return LambdaPoly(N, terms, r)


@dataclass
class Projection:
    """Result of eliminating ``t`` from a system for one split."""

    split: TorusSplit
    pivot: UnivariatePoly
    shifts: list[int]
    raw_count: int
    equations: list[LaurentPolynomial]
    lambda_poly: LambdaPoly | None = None


def check_weakly_generic(pivot: LaurentPolynomial, phi: Sequence[int]) -> None:
    poly = newton_polytope(pivot)
    if not is_weakly_generic(phi, poly):
        raise NotWeaklyGenericError(
            phi, face_in_direction(poly, phi), face_in_direction(poly, [-x for x in phi])
        )


def dedupe_normalized(polys: Sequence[LaurentPolynomial]) -> list[LaurentPolynomial]:
    """Drop zeros and duplicates up to monomial factor and scalar; keeps order."""
    seen, out = set(), []
    for c in polys:
        if c.is_zero():
            continue
        nc = c.normalized()
        if nc not in seen:
            seen.add(nc)
            out.append(nc)
    return out


def project(system: Sequence[LaurentPolynomial], split: TorusSplit) -> Projection:
    """Equations of the image of ``{system = 0}`` in the subtorus ``{x^e = 1}``.

    ``system[0]`` is the pivot; ``split.phi`` must be weakly generic for its
    Newton polytope so that its lowest and highest coefficients in ``t`` are
    units.
    """
    if not system:
        raise ValueError("empty system")
    pivot = system[0]
    if pivot.is_zero():
        raise ValueError("pivot equation is identically zero")
    if pivot.ambient_rank != split.rank:
        raise ValueError("rank mismatch between system and split")
    check_weakly_generic(pivot, split.phi)
    P, s0 = to_univariate(pivot, split)
    rest = [f for f in system[1:] if not f.is_zero()]
    if not rest:
        raise NoEquationsError("no equations to eliminate against")
    Qs, shifts = [], [s0]
    for f in rest:
        u, s = to_univariate(f, split)
        Qs.append(u)
        shifts.append(s)
    r = split.rank - 1
    if P.degree == 0:
        # a unit pivot: the zero set is empty, and so is its image
        one = LaurentPolynomial.constant(1, r)
        return Projection(split, P, shifts, 1, [one])
    lp = parametric_resultant(P, Qs)
    coeffs = [c for _, c in lp.coefficients()]
    return Projection(split, P, shifts, len(coeffs), dedupe_normalized(coeffs), lp)


def projection_equations(system: Sequence[LaurentPolynomial], split: TorusSplit) -> list[LaurentPolynomial]:
    return project(system, split).equations
