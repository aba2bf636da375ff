"""Text formats: system files, fan files and certificate reports.

System file: one Laurent polynomial per line, ``#`` starts a comment, ``;``
may separate several polynomials on a line.

Fan file::

    # fan: ambient rank 2
    RAYS
    -1 0
    0 1
    LINEALITY
    CONES
    2 0 1 | face: 0

Each cone line is its dimension, its ray indices, then the vertex indices of
the dual face.  The rank comment is optional when a ray or lineality vector
is present.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .laurent import LaurentPolynomial, ParseError, parse
from .polytope import Cone, Fan

__all__ = [
    "FormatError",
    "SystemFile",
    "parse_system",
    "read_system",
    "format_system",
    "format_fan",
    "parse_fan",
    "format_certificates",
    "format_vector",
]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class SystemFile:
    path: str | None
    polys: list[LaurentPolynomial]
    rank: int


def parse_system(text: str, ambient_rank: int | None = None, path: str | None = None) -> SystemFile:
    """Parse a system; every polynomial is lifted to the largest variable index."""
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        for chunk in body.split(";"):
            if chunk.strip():
                try:
                    raw.append(parse(chunk))
                except ParseError as exc:
                    raise FormatError(f"{exc} (column {exc.pos + 1})", lineno) from exc
    rank = max((p.ambient_rank for p in raw), default=0)
    if ambient_rank is not None:
        if ambient_rank < rank:
            raise FormatError(f"variable x{rank} exceeds the requested rank {ambient_rank}")
        rank = ambient_rank
    return SystemFile(path, [p.lift(rank) for p in raw], rank)


def read_system(path, ambient_rank: int | None = None) -> SystemFile:
    return parse_system(Path(path).read_text(), ambient_rank, str(path))


def format_system(polys: Sequence[LaurentPolynomial]) -> str:
    return "".join(f"{p}\n" for p in polys)


def format_vector(v: Sequence[int]) -> str:
    return " ".join(str(int(x)) for x in v)


def format_fan(fan: Fan) -> str:
    lines = [f"# fan: ambient rank {fan.ambient_rank}", "RAYS"]
    lines += [format_vector(r) for r in fan.rays]
    lines.append("LINEALITY")
    lines += [format_vector(w) for w in fan.lineality]
    lines.append("CONES")
    for c in fan.cones:
        head = " ".join(str(x) for x in (c.dim,) + c.rays)
        face = " ".join(map(str, c.dual_face or ()))
        lines.append(f"{head} | face: {face}".rstrip())
    return "\n".join(lines) + "\n"


_RANK_RE = re.compile(r"#\s*fan:\s*ambient rank\s+(\d+)")


def _ints(text: str, lineno: int) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split())
    except ValueError:
        raise FormatError(f"expected integers, got {text.strip()!r}", lineno) from None


def parse_fan(text: str) -> Fan:
    rank = None
    section = None
    rays, lin, cones = [], [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        m = _RANK_RE.match(line.strip())
        if m:
            rank = int(m.group(1))
            continue
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body in ("RAYS", "LINEALITY", "CONES"):
            section = body
            continue
        if section is None:
            raise FormatError("data before the first section header", lineno)
        if section == "CONES":
            head, sep, face = body.partition("|")
            nums = _ints(head, lineno)
            if not nums:
                raise FormatError("cone line without a dimension", lineno)
            face = face.strip()
            if face.startswith("face:"):
                face = face[len("face:"):]
            dual = _ints(face, lineno) if sep else None
            cones.append((lineno, Cone(tuple(nums[1:]), nums[0], dual)))
        else:
            (rays if section == "RAYS" else lin).append((lineno, _ints(body, lineno)))
    lengths = {len(v) for _, v in rays + lin}
    if rank is None:
        if len(lengths) != 1:
            raise FormatError("cannot determine the ambient rank")
        rank = lengths.pop()
    for lineno, v in rays + lin:
        if len(v) != rank:
            raise FormatError(f"vector of length {len(v)} in a rank {rank} fan", lineno)
    for lineno, c in cones:
        if any(i < 0 or i >= len(rays) for i in c.rays):
            raise FormatError("ray index out of range", lineno)
    return Fan(rank, tuple(v for _, v in rays), tuple(v for _, v in lin), tuple(c for _, c in cones))


def _points(pts) -> str:
    return "[" + ", ".join(f"({format_vector(v)})" for v in pts) + "]"


def _pass(ok) -> str:
    return "PASS" if ok else "FAIL"


def format_certificates(certs, polys: Sequence[LaurentPolynomial], fan: Fan) -> str:
    """Human-readable certificate dump; the last line summarizes."""
    lines = []
    ei = certs.edge_independence
    lines.append(f"edges_affine_independent: {_pass(ei)}")
    if ei.too_many:
        lines.append(f"  {len(polys)} polytopes exceed the ambient rank {fan.ambient_rank}")
    elif ei.witness is not None:
        segs = "; ".join(_points(e.points) for e in ei.witness)
        lines.append(f"  dependent edges: {segs}")
    else:
        for j, ds in enumerate(ei.directions):
            shown = ", ".join(f"({format_vector(d)})" for d in ds) or "none"
            lines.append(f"  P{j + 1} edge directions: {shown}")
    dv = certs.developedness
    lines.append(f"developed: {_pass(dv)}")
    if dv.violation is not None:
        lines.append(f"  face {_points(dv.violation.points)} (dim {dv.violation.dim}) has no vertex summand")
    else:
        for face, j, v in dv.certificate:
            lines.append(f"  face {_points(face.points)}: P{j + 1} vertex ({format_vector(v)})")
    cv = certs.convenience
    lines.append(f"convenient: {_pass(cv)}")
    if cv.reason is not None:
        lines.append(f"  {cv.reason}")
    elif cv.violation is not None:
        ci, pi = cv.violation
        lines.append(f"  support function of P{pi + 1} is not linear on cone {ci}")
    else:
        for ci, vs in sorted(cv.certificate.items()):
            lines.append(f"  cone {ci}: " + ", ".join(f"({format_vector(v)})" for v in vs))
    oa = certs.orbit_avoidance
    lines.append(f"orbit_avoidance: {_pass(oa)}")
    if oa.violation is not None:
        lines.append(f"  cone {oa.violation}: no polytope has a vertex as its face")
    else:
        for ci, (j, v) in sorted(oa.certificate.items()):
            lines.append(f"  cone {ci}: P{j + 1} vertex ({format_vector(v)})")
    lines.append("ALL CHECKS PASSED" if certs.all_passed else "SOME CHECKS FAILED")
    return "\n".join(lines) + "\n"
