"""Exact lattice polytopes, their faces and normal fans.

Everything is integer or rational arithmetic; no floating point.  Hulls are
computed inside the affine hull of the input points: a coordinate projection
makes the point set full dimensional, and the facets are then the extreme
rays of the homogenized inequality cone, found by a double description pass.
The face lattice is the closure of the facet vertex sets under intersection.

Covectors act on points by the standard pairing, and the face of ``P`` in
the co-direction ``xi`` is where ``<xi, .>`` is *minimal* on ``P``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from ._linalg import (
    Vector,
    canonical_sign,
    dot,
    hermite_rows,
    nullspace,
    primitive,
    rank,
    row_echelon,
    solve,
)

__all__ = [
    "LatticePolytope",
    "Face",
    "Cone",
    "Fan",
    "EdgeIndependence",
    "Developedness",
    "Convenience",
    "OrbitAvoidance",
    "hull",
    "support_function",
    "face_in_direction",
    "minkowski_sum",
    "edges",
    "face_decomposition",
    "edges_affine_independent",
    "is_developed",
    "is_generic_covector",
    "is_weakly_generic",
    "find_generic_covector",
    "normal_fan",
    "is_convenient",
    "orbit_avoidance",
    "check_complete",
]


def _affine_rank(points: Sequence[Vector]) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def _facets_full_dim(pts: Sequence[Vector]) -> list[tuple[Vector, frozenset[int]]]:
    """Facets of a full-dimensional point configuration in Z^d, d >= 1.

    Returns ``(ray, incident)`` where ``ray = (a_1..a_d, b)`` encodes the
    valid inequality ``<a, x> + b >= 0`` and ``incident`` holds the indices of
    the points on the facet.
    """
    d = len(pts[0])
    rows = [tuple(p) + (1,) for p in pts]
    base: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in base] + [r]) > len(base):
            base.append(i)
            if len(base) == d + 1:
                break
    a0 = [rows[i] for i in base]
    rays: list[Vector] = []
    zeros: list[frozenset[int]] = []
    for j in range(d + 1):
        unit = [int(i == j) for i in range(d + 1)]
        rays.append(primitive(solve(a0, unit)))
        zeros.append(frozenset(base[i] for i in range(d + 1) if i != j))

    for h in range(len(rows)):
        if h in base:
            continue
        vals = [dot(rows[h], r) for r in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        if not minus:
            zeros = [z | {h} if vals[i] == 0 else z for i, z in enumerate(zeros)]
            continue
        new_rays, new_zeros = [], []
        for i, v in enumerate(vals):
            if v >= 0:
                new_rays.append(rays[i])
                new_zeros.append(zeros[i] | {h} if v == 0 else zeros[i])
        for ip in plus:
            for im in minus:
                common = zeros[ip] & zeros[im]
                if len(common) < d - 1:
                    continue
                if any(
                    common <= zeros[o] for o in range(len(rays)) if o != ip and o != im
                ):
                    continue
                comb = [vals[ip] * a - vals[im] * b for a, b in zip(rays[im], rays[ip])]
                new_rays.append(primitive(comb))
                new_zeros.append(common | {h})
        rays, zeros = new_rays, new_zeros

    out = []
    for r in rays:
        incident = frozenset(i for i, row in enumerate(rows) if dot(row, r) == 0)
        out.append((r, incident))
    return out


class LatticePolytope:
    """Convex hull of finitely many points of Z^n, stored by its vertices.

    Build with :func:`hull`.  Vertices are kept sorted, so two polytopes with
    the same vertex set compare equal.
    """

    def __init__(self, vertices: Iterable[Sequence[int]], ambient_rank: int, *, _trusted=False):
        verts = sorted({tuple(int(x) for x in v) for v in vertices})
        if not verts:
            raise ValueError("a polytope needs at least one point")
        if any(len(v) != ambient_rank for v in verts):
            raise ValueError("point length does not match the ambient rank")
        self.ambient_rank = ambient_rank
        if _trusted:
            self.vertices: tuple[Vector, ...] = tuple(verts)
        else:
            self.vertices = tuple(verts)
            geo = self._geometry
            if len(geo["vertices"]) != len(verts):
                raise ValueError("given points are not all vertices; use hull()")

    # -- geometry ---------------------------------------------------------
    @cached_property
    def _geometry(self) -> dict:
        pts = list(self.vertices)
        n = self.ambient_rank
        p0 = pts[0]
        dirs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
        red, idx = row_echelon(dirs) if dirs else ([], [])
        d = len(idx)
        lineality = [canonical_sign(v) for v in hermite_rows(nullspace(red, n))] if d < n else []
        if d == 0:
            return dict(dim=0, vertices=[p0], facets=[], lineality=lineality)
        proj = [tuple(p[i] for i in idx) for p in pts]
        raw = _facets_full_dim(proj)
        incid = {}
        for r, inc in raw:
            normal = [0] * n
            for i, c in zip(idx, r[:d]):
                normal[i] = c
            incid[inc] = normal
        # vertex <=> normals of incident facets span the d-dim direction space
        is_vertex = []
        for i in range(len(pts)):
            normals = [r[:d] for r, inc in raw if i in inc]
            is_vertex.append(rank(normals) == d)
        keep = [i for i in range(len(pts)) if is_vertex[i]]
        remap = {old: new for new, old in enumerate(keep)}
        facets = []
        for inc, normal in incid.items():
            vs = frozenset(remap[i] for i in inc if i in remap)
            facets.append((vs, self._canonical_normal(normal, lineality)))
        facets.sort(key=lambda f: (sorted(f[0]), f[1]))
        return dict(
            dim=d,
            vertices=[pts[i] for i in keep],
            facets=facets,
            lineality=lineality,
        )

    @staticmethod
    def _canonical_normal(normal, lineality) -> Vector:
        """Project a normal orthogonally off the lineality space, then make it primitive."""
        if not lineality:
            return primitive(normal)
        gram = [[dot(u, v) for v in lineality] for u in lineality]
        rhs = [dot(u, normal) for u in lineality]
        coef = solve(gram, rhs)
        proj = [Fraction(x) for x in normal]
        for c, w in zip(coef, lineality):
            proj = [p - c * wi for p, wi in zip(proj, w)]
        return primitive(proj)

    @property
    def dim(self) -> int:
        return self._geometry["dim"]

    @property
    def lineality(self) -> list[Vector]:
        """Integer basis of the covectors constant on the polytope."""
        return self._geometry["lineality"]

    @property
    def facets(self) -> list[tuple[frozenset[int], Vector]]:
        """Facets as ``(vertex indices, inner normal)``; empty for a point."""
        return self._geometry["facets"]

    @cached_property
    def faces(self) -> list["Face"]:
        """All nonempty faces, including the polytope itself, by increasing dim."""
        facet_sets = [f for f, _ in self.facets]
        found = {frozenset(range(len(self.vertices)))}
        frontier = list(facet_sets)
        while frontier:
            nxt = []
            for f in frontier:
                if f in found or not f:
                    continue
                found.add(f)
                for g in facet_sets:
                    h = f & g
                    if h and h not in found:
                        nxt.append(h)
            frontier = nxt
        out = []
        for vs in found:
            witness = [0] * self.ambient_rank
            for f, normal in self.facets:
                if vs <= f:
                    witness = [a + b for a, b in zip(witness, normal)]
            pts = [self.vertices[i] for i in sorted(vs)]
            out.append(Face(self, tuple(sorted(vs)), tuple(witness), _affine_rank(pts)))
        out.sort(key=lambda f: (f.dim, f.vertex_indices))
        return out

    # -- conveniences -----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.ambient_rank, self.vertices))

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)}, rank={self.ambient_rank})"

    def __add__(self, other: "LatticePolytope") -> "LatticePolytope":
        return minkowski_sum(self, other)

    def translate(self, v: Sequence[int]) -> "LatticePolytope":
        return LatticePolytope(
            [tuple(a + b for a, b in zip(p, v)) for p in self.vertices], self.ambient_rank, _trusted=True
        )

    def dilate(self, c: int) -> "LatticePolytope":
        if c <= 0:
            raise ValueError("dilation factor must be positive")
        return LatticePolytope([tuple(c * x for x in p) for p in self.vertices], self.ambient_rank, _trusted=True)

    def contains(self, point: Sequence) -> bool:
        """Exact membership test against the facet inequalities."""
        point = [Fraction(x) for x in point]
        p0 = self.vertices[0]
        # must lie in the affine hull
        for w in self.lineality:
            if dot(w, point) != dot(w, p0):
                return False
        for vs, normal in self.facets:
            v = self.vertices[next(iter(vs))]
            if dot(normal, point) < dot(normal, v):
                return False
        return True


@dataclass(frozen=True, eq=False)
class Face:
    """Face of ``parent``: the vertices minimizing ``<witness, .>``."""

    parent: LatticePolytope
    vertex_indices: tuple[int, ...]
    witness: Vector
    dim: int

    @property
    def points(self) -> tuple[Vector, ...]:
        return tuple(self.parent.vertices[i] for i in self.vertex_indices)

    @property
    def is_vertex(self) -> bool:
        return self.dim == 0

    @property
    def direction(self) -> Vector:
        """Primitive direction of an edge, first nonzero coordinate positive."""
        if self.dim != 1:
            raise ValueError("direction is only defined for edges")
        a, b = self.points
        return canonical_sign(primitive([x - y for x, y in zip(b, a)]))

    def __eq__(self, other):
        if not isinstance(other, Face):
            return NotImplemented
        return self.parent == other.parent and self.vertex_indices == other.vertex_indices

    def __hash__(self):
        return hash((self.parent, self.vertex_indices))

    def __repr__(self):
        return f"Face(dim={self.dim}, points={list(self.points)})"


def hull(points: Iterable[Sequence[int]], ambient_rank: int | None = None) -> LatticePolytope:
    """Convex hull of a nonempty set of lattice points."""
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise ValueError("cannot take the hull of an empty point set")
    n = len(pts[0]) if ambient_rank is None else ambient_rank
    tmp = LatticePolytope(pts, n, _trusted=True)
    geo = tmp._geometry
    out = LatticePolytope(geo["vertices"], n, _trusted=True)
    # kept vertices are already sorted, so facet indices carry over
    out.__dict__["_geometry"] = geo
    return out


def _check_rank(poly: LatticePolytope, xi: Sequence) -> None:
    if len(xi) != poly.ambient_rank:
        raise ValueError(f"covector of length {len(xi)} against rank {poly.ambient_rank}")


def support_function(poly: LatticePolytope, xi: Sequence):
    """``min_{v in poly} <xi, v>``."""
    _check_rank(poly, xi)
    return min(dot(xi, v) for v in poly.vertices)


def face_in_direction(poly: LatticePolytope, xi: Sequence) -> Face:
    _check_rank(poly, xi)
    vals = [dot(xi, v) for v in poly.vertices]
    m = min(vals)
    idx = tuple(i for i, v in enumerate(vals) if v == m)
    return Face(poly, idx, tuple(xi), _affine_rank([poly.vertices[i] for i in idx]))


def minkowski_sum(*polys: LatticePolytope) -> LatticePolytope:
    if not polys:
        raise ValueError("need at least one summand")
    n = polys[0].ambient_rank
    if any(p.ambient_rank != n for p in polys):
        raise ValueError("Minkowski sum of polytopes of different rank")
    pts = [tuple(0 for _ in range(n))]
    for p in polys:
        pts = {tuple(a + b for a, b in zip(u, v)) for u in pts for v in p.vertices}
        # prune between steps; keeps the product small
        pts = hull(pts, n).vertices
    return LatticePolytope(pts, n, _trusted=True)


def edges(poly: LatticePolytope) -> list[Face]:
    return [f for f in poly.faces if f.dim == 1]


def face_decomposition(xi: Sequence, polys: Sequence[LatticePolytope]) -> tuple[Face, ...]:
    return tuple(face_in_direction(p, xi) for p in polys)


# -- predicates -----------------------------------------------------------


@dataclass
class EdgeIndependence:
    ok: bool
    too_many: bool = False
    witness: tuple[Face, ...] | None = None
    directions: list[list[Vector]] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def edges_affine_independent(polys: Sequence[LatticePolytope]) -> EdgeIndependence:
    """Every choice of one edge per polytope gives ``k`` independent directions.

    On failure ``witness`` is the lexicographically first offending tuple of
    edges.  More polytopes than the ambient rank is reported via ``too_many``.
    """
    k = len(polys)
    if k == 0:
        return EdgeIndependence(True)
    n = polys[0].ambient_rank
    if k > n:
        return EdgeIndependence(False, too_many=True)
    reps: list[list[Face]] = []
    for p in polys:
        seen, first = set(), []
        for e in edges(p):
            if e.direction not in seen:
                seen.add(e.direction)
                first.append(e)
        reps.append(first)
    dirs = [[e.direction for e in r] for r in reps]
    for combo in itertools.product(*reps):
        if rank([e.direction for e in combo]) < k:
            return EdgeIndependence(False, witness=combo, directions=dirs)
    return EdgeIndependence(True, directions=dirs)


@dataclass
class Developedness:
    ok: bool
    # (face of the sum, index j, vertex of polytope j) for every face of dim < k
    certificate: list[tuple[Face, int, Vector]] = field(default_factory=list)
    violation: Face | None = None

    def __bool__(self):
        return self.ok


def is_developed(polys: Sequence[LatticePolytope]) -> Developedness:
    k = len(polys)
    if k == 0:
        return Developedness(True)
    total = minkowski_sum(*polys)
    cert = []
    for face in total.faces:
        if face.dim >= k:
            continue
        parts = face_decomposition(face.witness, polys)
        j = next((i for i, g in enumerate(parts) if g.is_vertex), None)
        if j is None:
            return Developedness(False, cert, face)
        cert.append((face, j, parts[j].points[0]))
    return Developedness(True, cert)


def is_generic_covector(xi: Sequence[int], poly: LatticePolytope) -> bool:
    """``<xi, .>`` is nonconstant on every edge."""
    _check_rank(poly, xi)
    if not any(xi):
        return False
    return all(dot(xi, e.direction) != 0 for e in edges(poly))


def is_weakly_generic(xi: Sequence[int], poly: LatticePolytope) -> bool:
    """``<xi, .>`` attains its minimum and its maximum only at vertices."""
    _check_rank(poly, xi)
    if not any(xi):
        return False
    neg = tuple(-x for x in xi)
    return face_in_direction(poly, xi).is_vertex and face_in_direction(poly, neg).is_vertex


def _primitive_shell(n: int, s: int) -> list[Vector]:
    shell = [
        v
        for v in itertools.product(range(-s, s + 1), repeat=n)
        if max(abs(x) for x in v) == s and primitive(v) == v
    ]
    shell.sort(key=lambda v: (sum(abs(x) for x in v), tuple(-x for x in v)))
    return shell


def enumerate_covectors(n: int) -> Iterator[Vector]:
    """Primitive covectors by increasing max-norm, then L1 norm, then
    decreasing lexicographic order, so ``e_1`` comes first."""
    s = 1
    while True:
        yield from _primitive_shell(n, s)
        s += 1


def find_generic_covector(poly: LatticePolytope) -> Vector:
    dirs = [e.direction for e in edges(poly)]
    for xi in enumerate_covectors(poly.ambient_rank):
        if all(dot(xi, d) != 0 for d in dirs):
            return xi
    raise AssertionError("unreachable")  # pragma: no cover


# -- fans -----------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """Cone of a fan: indices into ``Fan.rays`` plus the shared lineality.

    ``dual_face`` lists the vertex indices of the face the cone is normal to,
    when known.
    """

    rays: tuple[int, ...]
    dim: int
    dual_face: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Fan:
    ambient_rank: int
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]
    cones: tuple[Cone, ...]
    provenance: LatticePolytope | None = field(default=None, compare=False)

    def generators(self, cone: Cone) -> list[Vector]:
        """Rays of ``cone`` followed by +/- each lineality generator."""
        gens = [self.rays[i] for i in cone.rays]
        for w in self.lineality:
            gens.append(w)
            gens.append(tuple(-x for x in w))
        return gens

    def relative_interior_point(self, cone: Cone) -> Vector:
        pt = [0] * self.ambient_rank
        for i in cone.rays:
            pt = [a + b for a, b in zip(pt, self.rays[i])]
        return tuple(pt)

    @property
    def maximal_cones(self) -> list[tuple[int, Cone]]:
        return [(i, c) for i, c in enumerate(self.cones) if c.dim == self.ambient_rank]


def normal_fan(poly: LatticePolytope) -> Fan:
    """One cone per face; the cone of a face is spanned by its facet normals."""
    n = poly.ambient_rank
    rays = sorted({normal for _, normal in poly.facets})
    index = {r: i for i, r in enumerate(rays)}
    lin = tuple(poly.lineality)
    cones = []
    for face in poly.faces:
        vs = set(face.vertex_indices)
        ray_idx = tuple(sorted(index[nm] for f, nm in poly.facets if vs <= f))
        cones.append(Cone(ray_idx, n - face.dim, face.vertex_indices))
    cones.sort(key=lambda c: (c.dim, c.rays))
    return Fan(n, tuple(rays), lin, tuple(cones), provenance=poly)


def _cone_walls(fan: Fan, cone: Cone) -> list[frozenset[int]]:
    """Facets of a full-dimensional cone, as sets of ray indices."""
    n = fan.ambient_rank
    lin = list(fan.lineality)
    need = n - 1 - len(lin)
    if need < 0:
        # the cone is the whole space
        return []
    walls = set()
    for sub in itertools.combinations(cone.rays, need):
        span = [fan.rays[i] for i in sub] + lin
        if rank(span) != n - 1:
            continue
        normal = nullspace(span, n)[0]
        vals = [dot(normal, fan.rays[i]) for i in cone.rays]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            walls.add(frozenset(i for i, v in zip(cone.rays, vals) if v == 0))
    return sorted(walls, key=sorted)


def check_complete(fan: Fan) -> None:
    """Raise ``ValueError`` unless the maximal cones close up around every wall.

    Each wall of a full-dimensional cone has to be shared by exactly two
    full-dimensional cones; for a fan whose cones meet along common faces this
    is equivalent to covering the whole space.
    """
    n = fan.ambient_rank
    maximal = [c for _, c in fan.maximal_cones]
    if not maximal:
        raise ValueError("incomplete fan: no full-dimensional cone")
    for c in maximal:
        gens = [fan.rays[i] for i in c.rays] + list(fan.lineality)
        if rank(gens) != n:
            raise ValueError("incomplete fan: cone dimension does not match its rays")
    counts: dict[frozenset[int], int] = {}
    for c in maximal:
        for w in _cone_walls(fan, c):
            counts[w] = counts.get(w, 0) + 1
    bad = [sorted(w) for w, k in counts.items() if k != 2]
    if bad:
        raise ValueError(f"incomplete fan: walls {bad} are not shared by exactly two cones")


@dataclass
class Convenience:
    ok: bool
    # per maximal cone index: the vertex of each polytope realizing the support function
    certificate: dict[int, tuple[Vector, ...]] = field(default_factory=dict)
    violation: tuple[int, int] | None = None  # (cone index, polytope index)
    reason: str | None = None

    def __bool__(self):
        return self.ok


def _linear_vertex(poly: LatticePolytope, gens: Sequence[Vector]) -> Vector | None:
    mins = [support_function(poly, g) for g in gens]
    for v in poly.vertices:
        if all(dot(g, v) == m for g, m in zip(gens, mins)):
            return v
    return None


def is_convenient(fan: Fan, polys: Sequence[LatticePolytope]) -> Convenience:
    """Support function of every polytope is linear on every maximal cone.

    Linearity is certified by one vertex ``A`` with ``<r, A> = H(r)`` for all
    generators ``r``; concavity of ``H`` extends the equality to the cone.
    """
    check_complete(fan)
    cert = {}
    for ci, cone in fan.maximal_cones:
        gens = fan.generators(cone)
        row = []
        for pi, p in enumerate(polys):
            if p.ambient_rank != fan.ambient_rank:
                raise ValueError("fan and polytope ranks differ")
            v = _linear_vertex(p, gens)
            if v is None:
                return Convenience(False, cert, (ci, pi))
            row.append(v)
        cert[ci] = tuple(row)
    return Convenience(True, cert)


@dataclass
class OrbitAvoidance:
    ok: bool
    # cone index -> (polytope index j, vertex A of polytope j)
    certificate: dict[int, tuple[int, Vector]] = field(default_factory=dict)
    violation: int | None = None

    def __bool__(self):
        return self.ok


def orbit_avoidance(fan: Fan, polys: Sequence[LatticePolytope]) -> OrbitAvoidance:
    """For each cone of dimension > n - k find a polytope whose face in the
    cone's interior direction is a single vertex.

    Such a vertex ``A`` makes ``P_j * x^-A`` a nonzero constant on the orbit
    of the cone, so the closure of ``{P_j = 0}`` misses that orbit.
    """
    n, k = fan.ambient_rank, len(polys)
    cert = {}
    for ci, cone in enumerate(fan.cones):
        if cone.dim <= n - k:
            continue
        xi = fan.relative_interior_point(cone)
        for j, p in enumerate(polys):
            f = face_in_direction(p, xi)
            if f.is_vertex:
                cert[ci] = (j, f.points[0])
                break
        else:
            return OrbitAvoidance(False, cert, ci)
    return OrbitAvoidance(True, cert)
