"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are collected in ``RESULTS`` and echoed in pytest's terminal
summary (see conftest.py); ``python tests/test_acceptance.py`` prints them
directly.
"""
from __future__ import annotations

import filecmp
import itertools
import random
import sys
import tempfile
from fractions import Fraction
from math import factorial
from pathlib import Path

import sympy
from scipy.spatial import ConvexHull, QhullError

sys.path.insert(0, str(Path(__file__).parent))

from corpus import CORPUS, FINITE  # noqa: E402
from goodcompact.cli import main as cli_main  # noqa: E402
from goodcompact.compactify import dimension, good_system, good_system_randomized  # noqa: E402
from goodcompact.elimination import projection_equations, resultant  # noqa: E402
from goodcompact.laurent import LaurentPolynomial, parse  # noqa: E402
from goodcompact.mixedvol import bkk_number, volume  # noqa: E402
from goodcompact.polytope import (  # noqa: E402
    edges_affine_independent,
    hull,
    is_convenient,
    is_developed,
    minkowski_sum,
    normal_fan,
)

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[n] = line
    print(line)


# -- 1. resultant oracle ------------------------------------------------------

def _poly_from_roots(lead, roots):
    coeffs = [Fraction(lead)]  # descending build, then reversed to ascending
    for r in roots:
        nxt = coeffs + [Fraction(0)]
        for i, c in enumerate(coeffs):
            nxt[i + 1] -= r * c
        coeffs = nxt
    return list(reversed(coeffs))


def criterion_1(pairs=500, seed=2024):
    rng = random.Random(seed)
    pool = [Fraction(a, b) for a in range(-6, 7) for b in (1, 2, 3)]
    mism, zeros, signs = [], 0, set()
    for i in range(pairs):
        p, q = rng.randint(1, 4), rng.randint(1, 4)
        rp = [rng.choice(pool) for _ in range(p)]
        if rng.random() < 0.4:
            rq = [rng.choice(rp)] + [rng.choice(pool) for _ in range(q - 1)]
        else:
            rq = [rng.choice(pool) for _ in range(q)]
        a = Fraction(rng.choice([-3, -2, -1, 1, 2, 5]), rng.choice([1, 2]))
        b = Fraction(rng.choice([-4, -1, 1, 3]), rng.choice([1, 3]))
        P = [LaurentPolynomial.constant(c, 0) for c in _poly_from_roots(a, rp)]
        Q = [LaurentPolynomial.constant(c, 0) for c in _poly_from_roots(b, rq)]
        r = resultant(P, Q, p, q).coefficient(())
        expected = a ** q * b ** p
        for x in rp:
            for y in rq:
                expected *= x - y
        share = bool(set(rp) & set(rq))
        if share:
            zeros += 1
        if (r == 0) != share or abs(r) != abs(expected):
            mism.append((rp, rq, r, expected))
        elif r:
            signs.add(r == expected)
    ok = not mism
    sign = "sign matches the product formula" if signs == {True} else "sign differs in some cases"
    record(1, ok, f"{pairs} pairs, {zeros} with a common root, {len(mism)} mismatches; {sign}")
    return ok


# -- 2. projection fidelity -----------------------------------------------

def _to_sympy(p: LaurentPolynomial, xs):
    lo = [min(m[i] for m in p.support) for i in range(p.ambient_rank)]
    shifted = p.mul_monomial([-x for x in lo])
    return sympy.Integer(0) + sum(
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[x ** k for x, k in zip(xs, m)])
        for m, c in shifted.terms.items()
    )


def torus_zero_set(system, r):
    """Finite zero set in (C*)^r via sympy; raises if not finite."""
    polys = [p for p in system if not p.is_zero()]
    if r == 0:
        return {()} if all(p.is_zero() for p in system) else set()
    xs = sympy.symbols(f"y1:{r + 1}")
    eqs = [_to_sympy(p, xs) for p in polys]
    if not eqs:
        raise ValueError("zero set is the whole torus")
    sols = sympy.solve(eqs, xs, dict=True)
    out = []
    for s in sols:
        if set(s) != set(xs):
            raise ValueError("positive-dimensional zero set")
        pt = tuple(sympy.nsimplify(sympy.simplify(s[x])) for x in xs)
        if all(sympy.simplify(v) != 0 for v in pt):
            out.append(pt)
    return _dedupe(out)


def _same(a, b):
    return len(a) == len(b) and all(sympy.simplify(x - y) == 0 for x, y in zip(a, b))


def _dedupe(points):
    out = []
    for p in points:
        if not any(_same(p, q) for q in out):
            out.append(p)
    return out


def _set_equal(a, b):
    return all(any(_same(p, q) for q in b) for p in a) and all(any(_same(p, q) for q in a) for p in b)


def _image(points, split):
    """Monomial map x -> (x^b for b in kernel_basis): the quotient map in coordinates."""
    out = []
    for x in points:
        out.append(tuple(sympy.simplify(sympy.Mul(*[xi ** k for xi, k in zip(x, b)])) for b in split.kernel_basis))
    return _dedupe(out)


def criterion_2():
    checked, failures = 0, []
    for case in FINITE:
        res = good_system(case.system())
        sol = torus_zero_set(case.system(), case.rank)
        hand = [tuple(sympy.sympify(v) for v in p) for p in case.points]
        if not _set_equal(sol, hand):
            failures.append(f"{case.name}: sympy zero set differs from hand solution")
            continue
        k = res.codim
        for i, lv in enumerate(res.levels):
            # codim and dim preserved level by level
            # pivot first, so the restarted run makes the same level-1 choice
            others = [p for p in lv.system if p is not lv.pivot]
            sub = good_system([lv.pivot] + others, ambient_rank=lv.rank)
            if sub.codim != k - i or lv.rank - sub.codim != case.rank - k:
                failures.append(f"{case.name}: level {lv.level} codim {sub.codim}")
            if lv.split is None:
                continue
            eqs = projection_equations([lv.pivot] + others, lv.split)
            here = torus_zero_set(lv.system, lv.rank)
            img = _image(here, lv.split)
            if lv.rank - 1 == 0:
                proj = [()] if not eqs else []
            else:
                proj = torus_zero_set(eqs, lv.rank - 1)
            checked += 1
            if not _set_equal(img, proj):
                failures.append(f"{case.name}: level {lv.level} projection {proj} != image {img}")
    ok = not failures and len(FINITE) >= 8
    record(2, ok, f"{len(FINITE)} systems, {checked} projections compared as exact point sets"
                  + (f"; failures: {failures}" if failures else ""))
    return ok


# -- 3. structure theorems ----------------------------------------------------

def _random_tuple(rng):
    n = rng.randint(1, 4)
    k = rng.randint(1, n)
    if rng.random() < 0.5:
        # structured: polytope i lives in its own coordinate block, which forces independent edges
        blocks = list(range(n))
        rng.shuffle(blocks)
        cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
        groups = [blocks[a:b] for a, b in zip([0] + cuts, cuts + [n])]
        polys = []
        for g in groups:
            pts = []
            for _ in range(rng.randint(2, 4)):
                v = [0] * n
                for c in g:
                    v[c] = rng.randint(-2, 2)
                pts.append(tuple(v))
            base = tuple(rng.randint(-1, 1) for _ in range(n))
            polys.append(hull([tuple(a + b for a, b in zip(p, base)) for p in pts], n))
        return polys
    return [
        hull([tuple(rng.randint(-1, 2) for _ in range(n)) for _ in range(rng.randint(1, 4))], n)
        for _ in range(k)
    ]


def criterion_3(count=200, seed=77):
    rng = random.Random(seed)
    implications, counterexamples, inconvenient = 0, [], []
    for _ in range(count):
        polys = _random_tuple(rng)
        if edges_affine_independent(polys):
            implications += 1
            if not is_developed(polys):
                counterexamples.append(polys)
        fan = normal_fan(minkowski_sum(*polys))
        if not is_convenient(fan, polys):
            inconvenient.append(polys)
    ok = not counterexamples and not inconvenient and implications > 0
    record(3, ok, f"{count} tuples, {implications} with independent edges, "
                  f"{len(counterexamples)} not developed, {len(inconvenient)} normal fans not convenient")
    return ok


# -- 4. end-to-end certification ------------------------------------------

def criterion_4():
    bad = []
    for case in CORPUS:
        res = good_system(case.system())
        if res.codim != case.codim or not res.certificates.all_passed:
            bad.append(f"{case.name}: codim {res.codim} (expected {case.codim}), certs {res.certificates.all_passed}")
    kinds = sorted({c.kind for c in CORPUS})
    ok = not bad and len(CORPUS) >= 12
    record(4, ok, f"{len(CORPUS)} systems ({', '.join(kinds)}), all certified with exact codim"
           if ok else f"failures: {bad}")
    return ok


# -- 5. randomized agreement ------------------------------------------------

def _write_system(path: Path, case):
    path.write_text("".join(f"{t}\n" for t in case.equations))


def _quiet(argv):
    import contextlib
    import io

    buf, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = cli_main(argv)
    return code, buf.getvalue(), err.getvalue()


def criterion_5(seeds=range(5)):
    bad, runs, retries = [], 0, 0
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for case in CORPUS:
            k = good_system(case.system()).codim
            src = tmp / f"{case.name}.txt"
            _write_system(src, case)
            for s in seeds:
                try:
                    res = good_system_randomized(case.system(), k, s)
                except Exception as exc:  # reported, not hidden
                    bad.append(f"{case.name} seed {s}: {exc}")
                    continue
                retries += res.attempts - 1
                out = tmp / f"{case.name}-{s}"
                code, _, _ = _quiet(["compactify", str(src), "--codim", str(k), "--seed", str(s), "--out", str(out)])
                chk, _, _ = _quiet(["check", str(out / "system.out"), str(out / "fan.out")])
                runs += 1
                if code != 0 or chk != 0:
                    bad.append(f"{case.name} seed {s}: compactify exit {code}, check exit {chk}")
    ok = not bad
    record(5, ok, f"{runs} randomized runs over {len(CORPUS)} systems x {len(list(seeds))} seeds, "
                  f"{retries} retries, all re-validated by check" if ok else f"failures: {bad}")
    return ok


# -- 6. BKK -----------------------------------------------------------------

def _scipy_volume(points, n):
    pts = list(set(points))
    try:
        v = ConvexHull(pts).volume
    except (QhullError, ValueError):
        return Fraction(0)
    return Fraction(round(v * factorial(n)), factorial(n))


def polyfit_bkk(polys):
    """Mixed coefficient of Vol(l1 D1 + ... + ln Dn), fitted from sampled volumes.

    Volumes here come from scipy (floating point, rounded to 1/n!), and the
    Minkowski combination from raw point sums, so nothing is shared with the
    library code under test.
    """
    n = len(polys)
    lams = sympy.symbols(f"l1:{n + 1}")
    monos = [m for m in itertools.product(range(n + 1), repeat=n) if sum(m) == n]
    coeffs = sympy.symbols(f"c0:{len(monos)}")
    eqs = []
    for lam in itertools.product(range(0, 3), repeat=n):
        if not any(lam):
            continue
        pts = {tuple([0] * n)}
        for l, poly in zip(lam, polys):
            scaled = [tuple(l * x for x in v) for v in poly.vertices]
            pts = {tuple(a + b for a, b in zip(u, v)) for u in pts for v in scaled}
        vol = _scipy_volume(list(pts), n)
        lhs = sum(c * sympy.Mul(*[x ** e for x, e in zip(lam, m)]) for c, m in zip(coeffs, monos))
        eqs.append(sympy.Eq(lhs, sympy.Rational(vol.numerator, vol.denominator)))
    sol = sympy.solve(eqs, coeffs, dict=True)[0]
    mixed = monos.index(tuple([1] * n))
    return Fraction(str(sol[coeffs[mixed]]))


def criterion_6(instances=100, seed=31):
    T = hull([(0, 0), (1, 0), (0, 1)])
    S = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    T3 = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    C3 = hull(itertools.product((0, 1), repeat=3))
    known = [
        ("generic linear system", [T, T], 1),
        ("two generic conics", [T.dilate(2), T.dilate(2)], 4),
        ("bilinear pair", [S, S], 2),
    ]
    mixed = [
        ("triangle x square", [T, S]),
        ("skew triangles", [hull([(0, 0), (2, 0), (0, 1)]), hull([(0, 0), (1, 0), (0, 3)])]),
        ("simplex, cube, tilted triangle", [T3, C3, hull([(0, 0, 0), (1, 1, 0), (0, 0, 2)])]),
    ]
    bad = []
    for name, polys, want in known:
        if bkk_number(polys) != want:
            bad.append(name)
    for name, polys in mixed:
        got, fit = bkk_number(polys), polyfit_bkk(polys)
        if got != fit:
            bad.append(f"{name}: {got} vs fit {fit}")
    rng = random.Random(seed)
    props = 0
    for _ in range(instances):
        n = rng.choice([2, 2, 3])
        polys = [hull([tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(2, 5))], n) for _ in range(n)]
        base = bkk_number(polys)
        perm = list(polys)
        rng.shuffle(perm)
        shift = tuple(rng.randint(-3, 3) for _ in range(n))
        moved = list(polys)
        j = rng.randrange(n)
        moved[j] = moved[j].translate(shift)
        diag = bkk_number([polys[0]] * n) == factorial(n) * volume(polys[0])
        if bkk_number(perm) != base or bkk_number(moved) != base or not diag:
            bad.append(f"properties failed on {[p.vertices for p in polys]}")
        props += 1
    ok = not bad
    record(6, ok, f"3 known counts, 3 mixed cases matched by polynomial fit, "
                  f"{props} random instances (symmetry, translation, diagonal)" if ok else f"failures: {bad}")
    return ok


# -- 7. interface stability ---------------------------------------------------

def criterion_7():
    bad = []
    texts = []
    for case in CORPUS:
        res = good_system(case.system())
        texts += [str(p) for p in case.system()] + [str(p) for p in res.tuple]
        texts += [str(lv.pivot) for lv in res.levels]
    for t in texts:
        once = parse(t)
        if str(once) != t and str(parse(str(once))) != str(once):
            bad.append(f"print/parse not stable on {t!r}")
    for t in (c for case in CORPUS for c in case.equations):
        p = parse(t)
        if str(parse(str(p))) != str(p):
            bad.append(f"fixpoint fails on {t!r}")
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for case in CORPUS:
            src = tmp / f"{case.name}.txt"
            _write_system(src, case)
            runs = []
            for rep in (1, 2):
                out = tmp / f"{case.name}-{rep}"
                code, stdout, _ = _quiet(["compactify", str(src), "--out", str(out)])
                runs.append((code, stdout, out))
            (c1, s1, o1), (c2, s2, o2) = runs
            same = s1 == s2 and all(filecmp.cmp(o1 / f, o2 / f, shallow=False)
                                    for f in ("system.out", "fan.out", "certs.out", "report.out"))
            chk, _, _ = _quiet(["check", str(o1 / "system.out"), str(o1 / "fan.out")])
            d1 = _quiet(["dim", str(src)])
            d2 = _quiet(["dim", str(src)])
            if c1 != 0 or chk != 0 or not same or d1 != d2:
                bad.append(f"{case.name}: exit {c1}, check {chk}, identical reruns {same and d1 == d2}")
    ok = not bad
    record(7, ok, f"{len(texts)} polynomials round-trip; {len(CORPUS)} compactify outputs pass check "
                  f"and rerun byte-identically" if ok else f"failures: {bad}")
    return ok


# -- pytest entry points ----------------------------------------------------

def test_criterion_1_resultant_oracle():
    assert criterion_1()


def test_criterion_2_projection_fidelity():
    assert criterion_2()


def test_criterion_3_structure_theorems():
    assert criterion_3()


def test_criterion_4_end_to_end_certification():
    assert criterion_4()


def test_criterion_5_randomized_agreement():
    assert criterion_5()


def test_criterion_6_bkk_cross_check():
    assert criterion_6()


def test_criterion_7_interface_stability():
    assert criterion_7()


if __name__ == "__main__":
    results = [f() for f in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7)]
    sys.exit(0 if all(results) else 1)
