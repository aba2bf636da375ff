import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from scipy.spatial import ConvexHull

from goodcompact.mixedvol import bkk_number, mixed_volume, triangulate, volume, volume_result
from goodcompact.polytope import hull, minkowski_sum

TRI = hull([(0, 0), (1, 0), (0, 1)])
SQUARE = hull([(0, 0), (1, 0), (0, 1), (1, 1)])


def scipy_volume(poly):
    n = poly.ambient_rank
    if poly.dim < n:
        return Fraction(0)
    v = ConvexHull(poly.vertices).volume
    # lattice polytopes have volume in (1/n!) Z
    return Fraction(round(v * factorial(n)), factorial(n))


def test_volume_examples():
    assert volume(SQUARE) == 1
    assert volume(TRI) == Fraction(1, 2)
    assert volume(hull([(0, 0), (3, 1)])) == 0


def test_volume_result_is_sum_of_simplices():
    cube = hull(itertools.product((0, 2), repeat=3))
    res = volume_result(cube)
    assert res.value == 8
    assert all(len(s) == 4 for s in res.triangulation)


def test_triangulation_of_point_and_segment():
    assert triangulate(hull([(1, 1)])) == [((1, 1),)]
    assert len(triangulate(hull([(0,), (4,)]))) == 1


@pytest.mark.parametrize("seed", range(8))
def test_volume_matches_scipy(seed):
    rng = random.Random(seed)
    n = 2 + seed % 2
    poly = hull([tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(8)])
    assert volume(poly) == scipy_volume(poly)


def test_bkk_examples():
    assert bkk_number([TRI, TRI]) == 1
    assert bkk_number([TRI.dilate(2), TRI.dilate(2)]) == 4
    assert bkk_number([hull([(0, 0), (1, 0)]), hull([(0, 0), (0, 1)])]) == 1
    assert bkk_number([SQUARE, SQUARE]) == 2


def test_bkk_count_mismatch():
    with pytest.raises(ValueError):
        bkk_number([TRI])
    with pytest.raises(ValueError):
        bkk_number([TRI, TRI, TRI])


def test_mixed_volume_scaling():
    assert mixed_volume([TRI, TRI]) == Fraction(1, 2)


def rand_poly(rng, n):
    return hull([tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(2, 5))], n)


def test_multilinearity():
    rng = random.Random(3)
    for _ in range(15):
        a, a2, b = rand_poly(rng, 2), rand_poly(rng, 2), rand_poly(rng, 2)
        assert bkk_number([minkowski_sum(a, a2), b]) == bkk_number([a, b]) + bkk_number([a2, b])


def test_monotone_under_inclusion():
    rng = random.Random(4)
    for _ in range(15):
        a, b = rand_poly(rng, 2), rand_poly(rng, 2)
        bigger = hull(list(a.vertices) + [(3, 3)])
        assert bkk_number([bigger, b]) >= bkk_number([a, b])
