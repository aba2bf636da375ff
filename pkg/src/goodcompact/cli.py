"""Command line interface.

Exit codes: 0 success, 1 a certificate check failed, 2 parse or shape error,
3 genericity failure of the randomized driver, 4 precondition failure.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .compactify import GenericityError, NotDevelopedError, certify, good_system, good_system_randomized
from .elimination import NoEquationsError, NotWeaklyGenericError, project
from .formats import (
    FormatError,
    format_certificates,
    format_fan,
    format_system,
    format_vector,
    parse_fan,
    read_system,
)
from .lattice import complete_split, is_primitive
from .laurent import newton_polytope
from .mixedvol import bkk_number
from .polytope import hull

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_SHAPE = 2
EXIT_GENERICITY = 3
EXIT_PRECONDITION = 4


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        self.code = code
        super().__init__(message)


def _load(path, rank=None):
    try:
        sf = read_system(path, rank)
    except OSError as exc:
        raise CLIError(str(exc), EXIT_SHAPE) from exc
    except FormatError as exc:
        raise CLIError(f"{path}: {exc}", EXIT_SHAPE) from exc
    if sf.rank == 0:
        raise CLIError(f"{path}: no variables; pass --rank", EXIT_SHAPE)
    return sf


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_dim(args) -> int:
    sf = _load(args.file, args.rank)
    res = good_system(sf.polys, ambient_rank=sf.rank, cap=args.cap)
    print(f"dim={res.dim} codim={res.codim}")
    for line in res.report():
        print(line)
    return EXIT_OK


def cmd_compactify(args) -> int:
    sf = _load(args.file, args.rank)
    if args.codim is not None:
        try:
            res = good_system_randomized(sf.polys, args.codim, args.seed, ambient_rank=sf.rank)
        except GenericityError as exc:
            for line in exc.trace:
                print(line, file=sys.stderr)
            raise CLIError(str(exc), EXIT_GENERICITY) from exc
        except ValueError as exc:
            raise CLIError(str(exc), EXIT_PRECONDITION) from exc
    else:
        res = good_system(sf.polys, ambient_rank=sf.rank, cap=args.cap)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    certs_text = format_certificates(res.certificates, res.tuple, res.fan)
    report = [f"# goodcompact {__version__}"] + res.report()
    files = {
        "system.out": format_system(res.tuple),
        "fan.out": format_fan(res.fan),
        "certs.out": certs_text,
        "report.out": "\n".join(report) + "\n",
    }
    for name, text in files.items():
        (out / name).write_text(text, encoding="utf-8", newline="\n")
    print(f"dim={res.dim} codim={res.codim}")
    print(certs_text.splitlines()[-1])
    return EXIT_OK if res.certificates.all_passed else EXIT_CHECK


def _parse_phi(text: str, n: int) -> tuple[int, ...]:
    try:
        phi = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise CLIError(f"--phi: expected integers, got {text!r}", EXIT_SHAPE) from exc
    if len(phi) != n:
        raise CLIError(f"--phi has {len(phi)} entries, the system has rank {n}", EXIT_SHAPE)
    if not any(phi):
        raise CLIError("--phi is the zero covector", EXIT_PRECONDITION)
    if not is_primitive(phi):
        raise CLIError(f"--phi {phi} is not primitive", EXIT_PRECONDITION)
    return phi


def cmd_project(args) -> int:
    sf = _load(args.file, args.rank)
    phi = _parse_phi(args.phi, sf.rank)
    if not sf.polys:
        raise CLIError("empty system", EXIT_SHAPE)
    if sf.polys[0].is_zero():
        raise CLIError("first equation is identically zero", EXIT_PRECONDITION)
    split = complete_split(phi)
    try:
        proj = project(sf.polys, split)
    except (NotWeaklyGenericError, NoEquationsError) as exc:
        raise CLIError(str(exc), EXIT_PRECONDITION) from exc
    print(f"# phi: {format_vector(split.phi)}")
    print(f"# e: {format_vector(split.e)}")
    for b in split.kernel_basis:
        print(f"# kernel: {format_vector(b)}")
    print(f"# coefficients: {proj.raw_count} raw, {len(proj.equations)} after pruning")
    sys.stdout.write(format_system(proj.equations))
    return EXIT_OK


def _parse_polytope(text: str):
    pts = []
    for chunk in text.split(";"):
        if chunk.strip():
            try:
                pts.append(tuple(int(t) for t in chunk.replace(",", " ").split()))
            except ValueError as exc:
                raise CLIError(f"--polytope: bad point {chunk.strip()!r}", EXIT_SHAPE) from exc
    if not pts or len({len(p) for p in pts}) != 1:
        raise CLIError(f"--polytope: need points of equal length, got {text!r}", EXIT_SHAPE)
    return hull(pts)


def cmd_mixedvol(args) -> int:
    polys = []
    if args.file:
        sf = _load(args.file, args.rank)
        if any(p.is_zero() for p in sf.polys):
            raise CLIError("the zero polynomial has no Newton polytope", EXIT_SHAPE)
        polys += [newton_polytope(p) for p in sf.polys]
    polys += [_parse_polytope(t) for t in args.polytope or ()]
    if not polys:
        raise CLIError("no polytopes given", EXIT_SHAPE)
    try:
        value = bkk_number(polys)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_SHAPE) from exc
    print(_fmt_rational(value))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        fan = parse_fan(Path(args.fan).read_text())
    except OSError as exc:
        raise CLIError(str(exc), EXIT_SHAPE) from exc
    except FormatError as exc:
        raise CLIError(f"{args.fan}: {exc}", EXIT_SHAPE) from exc
    polys = _load(args.tuple, fan.ambient_rank).polys
    if not polys or any(p.is_zero() for p in polys):
        raise CLIError("the tuple must consist of nonzero polynomials", EXIT_SHAPE)
    certs = certify([newton_polytope(p) for p in polys], fan)
    sys.stdout.write(format_certificates(certs, polys, fan))
    return EXIT_OK if certs.all_passed else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="goodcompact", description="Good toric compactifications of Laurent systems.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def system_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="system file, one polynomial per line")
        p.add_argument("--rank", type=int, help="ambient rank (default: largest variable index)")
        return p

    p = system_cmd("dim", "dimension and codimension of the zero set")
    p.add_argument("--cap", type=int, default=64, help="max equations per level")
    p.set_defaults(func=cmd_dim)

    p = system_cmd("compactify", "build a certified good compactification")
    p.add_argument("--codim", type=int, help="known codimension; selects the randomized driver")
    p.add_argument("--seed", type=int, help="seed for the randomized driver (needs --codim)")
    p.add_argument("--cap", type=int, default=64, help="max equations per level")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_compactify)

    p = system_cmd("project", "equations of the projection along a covector")
    p.add_argument("--phi", required=True, help='covector, e.g. "0 1"')
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("mixedvol", help="n! times the mixed volume")
    p.add_argument("file", nargs="?", help="system file; uses the Newton polytopes")
    p.add_argument("--rank", type=int)
    p.add_argument("--polytope", action="append", help='vertex list, e.g. "0 0; 1 0; 0 1"')
    p.set_defaults(func=cmd_mixedvol)

    p = sub.add_parser("check", help="re-run the certificate checks on a tuple and a fan")
    p.add_argument("tuple", help="system file holding the tuple")
    p.add_argument("fan", help="fan file")
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "compactify":
        if args.seed is not None and args.codim is None:
            ap.error("--seed requires --codim")
        if args.codim is not None and args.seed is None:
            args.seed = 0
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotDevelopedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
