"""Construction of a good compactification for ``{T_1 = ... = T_m = 0}``.

The deterministic driver peels off one equation per level: it picks a pivot,
splits the torus along a covector generic for the pivot's Newton polytope,
and replaces the system by the resultant coefficients that cut out its
projection.  It stops when every coefficient vanishes (or a single equation
is left), and the number of levels is the codimension.  The pivots, pulled
back to the original lattice, have Newton polytopes with affinely
independent edges, so the normal fan of their Minkowski sum is a good
compactification.

:func:`good_system_randomized` is the variant for a known codimension that
eliminates against random linear combinations instead of expanding in
``lambda``, and checks its output a posteriori.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from ._linalg import Vector, dot, primitive
from .elimination import project, resultant
from .lattice import TorusSplit, complete_split, is_primitive
from .laurent import LaurentPolynomial, newton_polytope, to_univariate
from .polytope import (
    Developedness,
    Convenience,
    EdgeIndependence,
    Fan,
    LatticePolytope,
    OrbitAvoidance,
    edges_affine_independent,
    find_generic_covector,
    hull,
    is_convenient,
    is_developed,
    is_generic_covector,
    minkowski_sum,
    normal_fan,
    orbit_avoidance,
)

__all__ = [
    "LevelState",
    "Certificates",
    "CompactificationResult",
    "GenericityError",
    "NotDevelopedError",
    "good_system",
    "good_system_randomized",
    "dimension",
    "build_convenient_fan",
    "certify",
]

log = logging.getLogger(__name__)

DEFAULT_CAP = 64

STOP_CONTINUE = "continue"
STOP_VANISH = "all coefficients vanish"
STOP_SINGLE = "single equation"
STOP_CAP = "cap warning"
STOP_EMPTY = "unit equation (empty variety)"
STOP_WHOLE = "no equations (whole torus)"


class GenericityError(RuntimeError):
    def __init__(self, message: str, trace: list[str]):
        self.trace = trace
        super().__init__(message)


class NotDevelopedError(ValueError):
    def __init__(self, face):
        self.face = face
        super().__init__(f"tuple is not developed: face {list(face.points)} of dim {face.dim} has no vertex summand")


@dataclass
class LevelState:
    """One step of the recursion.

    ``embedding`` holds, for each coordinate of this level's lattice, its
    image in the original Z^n; pulling a polynomial back is a linear change
    of exponents.
    """

    level: int
    rank: int
    system: list[LaurentPolynomial]
    pivot: LaurentPolynomial
    split: TorusSplit | None
    embedding: tuple[Vector, ...]
    ambient_rank: int
    coeffs_before: int = 0
    coeffs_after: int = 0
    stop: str = STOP_CONTINUE

    def pull_back(self, p: LaurentPolynomial) -> LaurentPolynomial:
        return pull_back(p, self.embedding, self.ambient_rank)

    def report_line(self) -> str:
        phi = "(" + " ".join(map(str, self.split.phi)) + ")" if self.split else "-"
        e = "(" + " ".join(map(str, self.split.e)) + ")" if self.split else "-"
        return (
            f"level {self.level}: pivot={self.pivot} phi={phi} e={e} "
            f"coeffs={self.coeffs_before}/{self.coeffs_after} stop={self.stop}"
        )


def pull_back(p: LaurentPolynomial, embedding: Sequence[Vector], n: int) -> LaurentPolynomial:
    def img(m):
        out = [0] * n
        for c, col in zip(m, embedding):
            if c:
                out = [a + c * b for a, b in zip(out, col)]
        return out

    return p.map_exponents(img, n)


def _refine_embedding(embedding: Sequence[Vector], split: TorusSplit) -> tuple[Vector, ...]:
    n = len(embedding[0])
    out = []
    for b in split.kernel_basis:
        col = [0] * n
        for c, e in zip(b, embedding):
            if c:
                col = [x + c * y for x, y in zip(col, e)]
        out.append(tuple(col))
    return tuple(out)


@dataclass
class Certificates:
    edge_independence: EdgeIndependence
    developedness: Developedness
    convenience: Convenience
    orbit_avoidance: OrbitAvoidance

    @property
    def all_passed(self) -> bool:
        return bool(self.edge_independence and self.developedness and self.convenience and self.orbit_avoidance)


@dataclass
class CompactificationResult:
    ambient_rank: int
    codim: int
    tuple: list[LaurentPolynomial]
    fan: Fan
    certificates: Certificates
    levels: list[LevelState] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    empty: bool = False
    attempts: int = 1

    @property
    def dim(self) -> int:
        return self.ambient_rank - self.codim

    @property
    def polytopes(self) -> list[LatticePolytope]:
        return [newton_polytope(p) for p in self.tuple]

    def report(self) -> list[str]:
        lines = [lv.report_line() for lv in self.levels]
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"codim={self.codim}")
        return lines


def certify(polys: Sequence[LatticePolytope], fan: Fan) -> Certificates:
    """Run the four checks on a tuple of Newton polytopes and a fan.

    An incomplete fan fails the convenience check instead of raising.
    """
    try:
        conv = is_convenient(fan, polys)
    except ValueError as exc:
        conv = Convenience(False, reason=str(exc))
    return Certificates(edges_affine_independent(polys), is_developed(polys), conv, orbit_avoidance(fan, polys))


def _trivial_fan(n: int) -> Fan:
    return normal_fan(hull([(0,) * n], n))


def build_convenient_fan(polys: Sequence[LaurentPolynomial]) -> tuple[Fan, Certificates]:
    """Normal fan of the Minkowski sum of the Newton polytopes, with certificates.

    Raises :class:`NotDevelopedError` if the tuple is not developed: its
    convenient compactifications need not be good.
    """
    if any(p.is_zero() for p in polys):
        raise ValueError("all polynomials must be nonzero")
    if not polys:
        raise ValueError("empty tuple; use good_system for the whole torus")
    nps = [newton_polytope(p) for p in polys]
    dev = is_developed(nps)
    if not dev:
        raise NotDevelopedError(dev.violation)
    fan = normal_fan(minkowski_sum(*nps))
    certs = Certificates(edges_affine_independent(nps), dev, is_convenient(fan, nps), orbit_avoidance(fan, nps))
    return fan, certs


def _common_rank(system: Sequence[LaurentPolynomial], ambient_rank: int | None) -> int:
    ranks = {p.ambient_rank for p in system}
    if ambient_rank is not None:
        if any(r > ambient_rank for r in ranks):
            raise ValueError("a polynomial has larger rank than requested")
        return ambient_rank
    if not ranks:
        raise ValueError("cannot infer the rank of an empty system")
    return max(ranks)


def _support_key(p: LaurentPolynomial):
    return (len(p), [(m, c) for m, c in p.items()])


def _finish(n, codim, levels, tuple_, notes, empty=False, attempts=1) -> CompactificationResult:
    if tuple_:
        fan, certs = _fan_and_certs(tuple_)
    else:
        fan = _trivial_fan(n)
        certs = certify([], fan)
    return CompactificationResult(n, codim, tuple_, fan, certs, levels, notes, empty, attempts)


def _fan_and_certs(tuple_):
    nps = [newton_polytope(p) for p in tuple_]
    fan = normal_fan(minkowski_sum(*nps))
    return fan, certify(nps, fan)


def good_system(
    system: Sequence[LaurentPolynomial],
    *,
    ambient_rank: int | None = None,
    cap: int = DEFAULT_CAP,
    first_covector: Sequence[int] | None = None,
) -> CompactificationResult:
    """Replace ``system`` by ``k = codim`` equations with independent edges.

    Parameters
    ----------
    system
        Laurent polynomials; zero entries are ignored.  Polynomials of
        smaller rank are lifted.
    cap
        Maximum number of equations carried to the next level.  Hitting it is
        reported as a note since dropping equations may lose completeness.
    first_covector
        Override for the level-one covector (must be generic for the first
        pivot's Newton polytope).
    """
    n = _common_rank(system, ambient_rank)
    current = [p.lift(n) for p in system if not p.is_zero()]
    identity = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    if not current:
        lv = LevelState(1, n, [], LaurentPolynomial.zero(n), None, identity, n, stop=STOP_WHOLE)
        return _finish(n, 0, [lv], [], ["variety is the whole torus"])

    levels: list[LevelState] = []
    tuple_: list[LaurentPolynomial] = []
    notes: list[str] = []
    embedding = identity
    level = 1
    while True:
        r = n - level + 1
        unit = next((p for p in current if p.is_monomial()), None)
        if unit is not None:
            lv = LevelState(level, r, current, unit, None, embedding, n, stop=STOP_EMPTY)
            levels.append(lv)
            notes.append("variety is empty")
            return _finish(n, n + 1, levels, [lv.pull_back(unit)], notes, empty=True)
        if level == 1:
            pi = 0
        else:
            pi = min(range(len(current)), key=lambda i: _support_key(current[i]))
        pivot = current[pi]
        others = current[:pi] + current[pi + 1:]
        lv = LevelState(level, r, current, pivot, None, embedding, n)
        levels.append(lv)
        tuple_.append(lv.pull_back(pivot))
        if not others:
            lv.stop = STOP_SINGLE
            break
        np_ = newton_polytope(pivot)
        if level == 1 and first_covector is not None:
            phi = tuple(first_covector)
            if not is_primitive(phi) or not is_generic_covector(phi, np_):
                raise ValueError(f"covector {phi} is not primitive and generic for the first pivot")
        else:
            phi = find_generic_covector(np_)
        split = complete_split(phi)
        lv.split = split
        proj = project([pivot] + others, split)
        eqs = proj.equations
        lv.coeffs_before = proj.raw_count
        lv.coeffs_after = len(eqs)
        if not eqs:
            lv.stop = STOP_VANISH
            break
        if len(eqs) > cap:
            eqs = sorted(eqs, key=_support_key)[:cap]
            lv.coeffs_after = cap
            lv.stop = STOP_CAP
            notes.append(f"level {level}: kept {cap} of {proj.raw_count} equations; completeness not guaranteed")
            log.warning("equation cap hit at level %d", level)
        embedding = _refine_embedding(embedding, split)
        current = eqs
        level += 1
    return _finish(n, len(tuple_), levels, tuple_, notes)


def dimension(system: Sequence[LaurentPolynomial], ambient_rank: int | None = None) -> tuple[int, int]:
    """``(dim, codim)`` of the zero set; the empty set is ``(-1, n + 1)``."""
    res = good_system(system, ambient_rank=ambient_rank)
    return res.dim, res.codim


class _Degenerate(Exception):
    pass


def _random_combination(us, shifts_deg, lam, q, r):
    """Coefficients of ``sum lam_i U_i`` as a list of length ``q + 1``."""
    out = [LaurentPolynomial.zero(r) for _ in range(q + 1)]
    for c, u in zip(lam, us):
        if c == 0:
            continue
        for j, a in enumerate(u.coeffs):
            out[j] = out[j] + a.scale(c)
    return out


def _randomized_once(current, n, k, rng, bound):
    identity = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    embedding = identity
    levels, tuple_ = [], []
    for level in range(1, k + 1):
        r = n - level + 1
        pivot = current[0]
        if pivot.is_zero():
            raise _Degenerate(f"level {level}: pivot vanished")
        if pivot.is_monomial():
            raise _Degenerate(f"level {level}: pivot is a unit")
        lv = LevelState(level, r, list(current), pivot, None, embedding, n)
        levels.append(lv)
        tuple_.append(lv.pull_back(pivot))
        if level == k:
            lv.stop = STOP_SINGLE
            break
        split = complete_split(find_generic_covector(newton_polytope(pivot)))
        lv.split = split
        P, _ = to_univariate(pivot, split)
        us = [to_univariate(f, split)[0] for f in current if not f.is_zero()]
        q = max(u.degree for u in us)
        rs = []
        for _ in range(k - level):
            lam = [rng.randint(-bound, bound) for _ in us]
            g = _random_combination(us, None, lam, q, r - 1)
            if P.degree + q == 0:
                raise _Degenerate(f"level {level}: empty resultant")
            rs.append(resultant(list(P.coeffs), g, P.degree, q))
        lv.coeffs_before = lv.coeffs_after = len(rs)
        embedding = _refine_embedding(embedding, split)
        current = rs
    return levels, tuple_


def good_system_randomized(
    system: Sequence[LaurentPolynomial],
    k: int,
    seed: int = 0,
    *,
    ambient_rank: int | None = None,
    bound: int = 8,
    retries: int = 8,
) -> CompactificationResult:
    """Known-codimension variant with random choices, validated afterwards.

    At level ``i`` the pivot is eliminated against ``k - i`` random integer
    combinations of the current equations (coefficients in ``[-B, B]``), one
    resultant each.  A run is accepted when no pivot degenerates and all
    certificates pass; otherwise ``B`` doubles and the generator moves on.
    """
    n = _common_rank(system, ambient_rank)
    if k < 1:
        raise ValueError("codimension must be at least 1")
    if k > n:
        raise ValueError(f"codimension {k} exceeds the rank {n}")
    current = [p.lift(n) for p in system if not p.is_zero()]
    if not current:
        raise ValueError("all equations vanish identically; codimension is 0")
    rng = random.Random(seed)
    trace = []
    b = bound
    for attempt in range(1, retries + 1):
        try:
            levels, tuple_ = _randomized_once(current, n, k, rng, b)
        except _Degenerate as exc:
            trace.append(f"attempt {attempt} (B={b}): {exc}")
            b *= 2
            continue
        res = _finish(n, k, levels, tuple_, [f"seed={seed} attempts={attempt} B={b}"], attempts=attempt)
        if res.certificates.all_passed:
            return res
        trace.append(f"attempt {attempt} (B={b}): certificates failed")
        b *= 2
    raise GenericityError("genericity failure — verify k or raise coefficient range", trace)
