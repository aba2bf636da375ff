"""Laurent polynomials with rational coefficients.

A :class:`LaurentPolynomial` is an immutable map from exponent vectors in
Z^n to nonzero ``Fraction`` coefficients.  Printing uses graded
lexicographic order, highest term first, and the text form parses back to
the same polynomial::

    >>> p = LaurentPolynomial.parse("3/4*x1^-2*x2^5 + 1 - x2")
    >>> str(p)
    '3/4*x1^-2*x2^5 - x2 + 1'
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from ._linalg import Vector, dot
from .lattice import TorusSplit, decompose, pull_up
from .polytope import LatticePolytope, face_in_direction, hull

__all__ = [
    "LaurentPolynomial",
    "UnivariatePoly",
    "ParseError",
    "parse",
    "to_univariate",
    "from_univariate",
    "reduce_in_codirection",
    "newton_polytope",
]


def _term_key(m: Vector):
    return (sum(m), m)


class LaurentPolynomial:
    __slots__ = ("ambient_rank", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | Iterable = (), ambient_rank: int = 0):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Vector, Fraction] = {}
        for m, c in items:
            m = tuple(int(x) for x in m)
            if len(m) != ambient_rank:
                raise ValueError(f"exponent {m} does not have length {ambient_rank}")
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        self.ambient_rank = ambient_rank
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c, ambient_rank: int) -> "LaurentPolynomial":
        return cls({(0,) * ambient_rank: c}, ambient_rank)

    @classmethod
    def monomial(cls, exponent: Sequence[int], c=1) -> "LaurentPolynomial":
        return cls({tuple(exponent): c}, len(exponent))

    @classmethod
    def variable(cls, i: int, ambient_rank: int) -> "LaurentPolynomial":
        """The coordinate ``x_i`` (1-based)."""
        return cls.monomial(tuple(int(j == i - 1) for j in range(ambient_rank)))

    @classmethod
    def zero(cls, ambient_rank: int) -> "LaurentPolynomial":
        return cls({}, ambient_rank)

    @classmethod
    def parse(cls, text: str, ambient_rank: int | None = None) -> "LaurentPolynomial":
        return parse(text, ambient_rank)

    # -- access -----------------------------------------------------------
    @property
    def terms(self) -> dict[Vector, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded lex, descending) order."""
        return sorted(self._terms.items(), key=lambda t: _term_key(t[0]), reverse=True)

    @property
    def support(self) -> list[Vector]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        """Exactly one term, i.e. a unit of the Laurent ring."""
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    def leading_term(self) -> tuple[Vector, Fraction]:
        return self.items()[0]

    def trailing_term(self) -> tuple[Vector, Fraction]:
        return self.items()[-1]

    # -- arithmetic -------------------------------------------------------
    def _same_rank(self, other: "LaurentPolynomial") -> None:
        if self.ambient_rank != other.ambient_rank:
            raise ValueError(f"rank mismatch: {self.ambient_rank} vs {other.ambient_rank}")

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            self._same_rank(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other, self.ambient_rank)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPolynomial(out, self.ambient_rank)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({m: -c for m, c in self._terms.items()}, self.ambient_rank)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Vector, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPolynomial(out, self.ambient_rank)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be inverted")
            (m, c), = self._terms.items()
            return LaurentPolynomial.monomial(tuple(-k * x for x in m), Fraction(1) / c ** (-k))
        out = LaurentPolynomial.constant(1, self.ambient_rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "LaurentPolynomial":
        c = Fraction(c)
        return LaurentPolynomial({m: c * v for m, v in self._terms.items()}, self.ambient_rank)

    def mul_monomial(self, m: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the character ``x^m``."""
        if len(m) != self.ambient_rank:
            raise ValueError("rank mismatch")
        return LaurentPolynomial(
            {tuple(a + b for a, b in zip(k, m)): c for k, c in self._terms.items()}, self.ambient_rank
        )

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Quotient ``self / other``; raises ``ArithmeticError`` if it is not exact.

        Long division in lexicographic order, which is compatible with
        multiplication on Z^n.  The quotient's exponents must lie in the box
        ``box(self) - box(other)``, which bounds the loop.
        """
        self._same_rank(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if other.is_monomial():
            (m, c), = other._terms.items()
            return self.mul_monomial(tuple(-x for x in m)).scale(1 / c)
        n = self.ambient_rank
        lo = [min(m[i] for m in self._terms) - min(m[i] for m in other._terms) for i in range(n)]
        hi = [max(m[i] for m in self._terms) - max(m[i] for m in other._terms) for i in range(n)]
        lead_m = max(other._terms)
        lead_c = other._terms[lead_m]
        rem = dict(self._terms)
        quot: dict[Vector, Fraction] = {}
        while rem:
            m = max(rem)
            q = tuple(a - b for a, b in zip(m, lead_m))
            if any(x < l or x > h for x, l, h in zip(q, lo, hi)):
                raise ArithmeticError("division is not exact")
            c = rem[m] / lead_c
            quot[q] = c
            for k, v in other._terms.items():
                kk = tuple(a + b for a, b in zip(k, q))
                nv = rem.get(kk, 0) - c * v
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return LaurentPolynomial(quot, n)

    # -- comparisons ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.ambient_rank)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_rank, frozenset(self._terms.items())))
        return self._hash

    # -- maps -------------------------------------------------------------
    def map_exponents(self, f: Callable[[Vector], Sequence[int]], new_rank: int) -> "LaurentPolynomial":
        """Apply a map to every exponent; must be injective on the support."""
        out: dict[Vector, Fraction] = {}
        for m, c in self._terms.items():
            k = tuple(f(m))
            if k in out:
                raise ValueError("exponent map is not injective on the support")
            out[k] = c
        return LaurentPolynomial(out, new_rank)

    def lift(self, new_rank: int) -> "LaurentPolynomial":
        """View as a polynomial in more variables (trailing exponents zero)."""
        if new_rank < self.ambient_rank:
            raise ValueError("cannot lower the rank")
        pad = (0,) * (new_rank - self.ambient_rank)
        return self.map_exponents(lambda m: m + pad, new_rank)

    def evaluate(self, point: Sequence):
        """Value at a point of the torus (entries must be nonzero).

        Works with any field elements supporting ``**`` and ``*``: ints,
        Fractions, sympy numbers.
        """
        if len(point) != self.ambient_rank:
            raise ValueError("point has the wrong number of coordinates")
        # ints go to Fraction so that negative powers stay exact
        point = [Fraction(x) if isinstance(x, int) else x for x in point]
        total = 0
        for m, c in self._terms.items():
            term = c
            for x, k in zip(point, m):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def normalized(self) -> "LaurentPolynomial":
        """Representative up to monomial factor and scalar.

        Divides by the trailing monomial and makes the leading coefficient 1.
        """
        if self.is_zero():
            return self
        tm, _ = self.trailing_term()
        p = self.mul_monomial(tuple(-x for x in tm))
        _, lc = p.leading_term()
        return p.scale(1 / lc)

    def newton_polytope(self) -> LatticePolytope:
        return newton_polytope(self)

    # -- text -------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.items()):
            mono = "*".join(
                f"x{j + 1}" if k == 1 else f"x{j + 1}^{k}" for j, k in enumerate(m) if k
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r}, rank={self.ambient_rank})"


def newton_polytope(p: LaurentPolynomial) -> LatticePolytope:
    if p.is_zero():
        raise ValueError("Newton polytope undefined for the zero polynomial")
    return hull(p.support, p.ambient_rank)


def reduce_in_codirection(p: LaurentPolynomial, xi: Sequence[int]) -> LaurentPolynomial:
    """Terms of ``p`` on the face of its Newton polytope where ``<xi, .>`` is minimal."""
    if p.is_zero():
        raise ValueError("reduction of the zero polynomial")
    face = face_in_direction(newton_polytope(p), xi)
    m = dot(xi, face.points[0])
    return LaurentPolynomial({k: c for k, c in p.terms.items() if dot(xi, k) == m}, p.ambient_rank)


# -- parsing --------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text[:pos]}<here>{text[pos:]}")


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:  # trailing whitespace
            break
        kind = mt.lastgroup
        start = mt.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {mt.group(kind)!r}", text, start)
        out.append((kind, mt.group(kind), start))
        pos = mt.end()
    out.append(("end", "", len(text)))
    return out


def parse(text: str, ambient_rank: int | None = None) -> LaurentPolynomial:
    """Parse ``term (('+'|'-') term)*`` where a term is a product of
    rationals and powers ``x<i>^<int>``.  A leading sign is accepted."""
    toks = _tokens(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        t = toks[i]
        if (kind and t[0] != kind) or (value is not None and t[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r}", text, t[2])
        i += 1
        return t

    def integer():
        sign = 1
        if peek()[0] == "op" and peek()[1] in "+-":
            sign = -1 if take()[1] == "-" else 1
        return sign * int(take("num")[1])

    raw_terms: list[tuple[Fraction, dict[int, int]]] = []

    def term(sign):
        coef = Fraction(sign)
        exps: dict[int, int] = {}
        while True:
            t = peek()
            if t[0] == "num":
                num = int(take()[1])
                if peek()[1] == "/" and peek()[0] == "op":
                    take()
                    den_tok = peek()
                    den = int(take("num")[1])
                    if den == 0:
                        raise ParseError("zero denominator", text, den_tok[2])
                    coef *= Fraction(num, den)
                else:
                    coef *= num
            elif t[0] == "var":
                take()
                idx = int(t[1][1:])
                if idx < 1:
                    raise ParseError("variable indices start at 1", text, t[2])
                k = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    take()
                    k = integer()
                exps[idx] = exps.get(idx, 0) + k
            else:
                raise ParseError("expected a number or a variable", text, t[2])
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                continue
            return coef, exps

    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    raw_terms.append(term(sign))
    while peek()[0] != "end":
        t = take("op")
        if t[1] not in "+-":
            raise ParseError("expected '+' or '-'", text, t[2])
        raw_terms.append(term(-1 if t[1] == "-" else 1))

    used = max((k for _, e in raw_terms for k in e), default=0)
    n = used if ambient_rank is None else ambient_rank
    if used > n:
        raise ParseError(f"variable x{used} exceeds rank {n}", text, 0)
    terms = []
    for c, e in raw_terms:
        terms.append((tuple(e.get(j + 1, 0) for j in range(n)), c))
    return LaurentPolynomial(terms, n)


# -- univariate view ------------------------------------------------------


@dataclass(frozen=True)
class UnivariatePoly:
    """Polynomial in ``t = x^e`` with coefficients in the kernel ring.

    ``coeffs[j]`` is the coefficient of ``t^j``, a Laurent polynomial of rank
    ``n - 1`` in the coordinates given by ``split.kernel_basis``.
    """

    split: TorusSplit
    coeffs: tuple[LaurentPolynomial, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1].is_zero():
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def to_univariate(p: LaurentPolynomial, split: TorusSplit) -> tuple[UnivariatePoly, int]:
    """Group the terms of ``p`` by ``<phi, m>`` and shift so the lowest degree is 0.

    Returns ``(U, shift)`` with ``p = t^shift * U(t)``.
    """
    if p.is_zero():
        raise ValueError("cannot rewrite the zero polynomial")
    if p.ambient_rank != split.rank:
        raise ValueError("rank mismatch between polynomial and split")
    groups: dict[int, dict[Vector, Fraction]] = {}
    for m, c in p.terms.items():
        d, k = decompose(m, split)
        groups.setdefault(d, {})[k] = c
    lo, hi = min(groups), max(groups)
    r = split.rank - 1
    coeffs = tuple(LaurentPolynomial(groups.get(d, {}), r) for d in range(lo, hi + 1))
    return UnivariatePoly(split, coeffs), lo


def from_univariate(u: UnivariatePoly, shift: int = 0) -> LaurentPolynomial:
    split = u.split
    out: dict[Vector, Fraction] = {}
    for j, c in enumerate(u.coeffs):
        d = j + shift
        for k, v in c.terms.items():
            base = pull_up(k, split)
            out[tuple(b + d * e for b, e in zip(base, split.e))] = v
    return LaurentPolynomial(out, split.rank)
