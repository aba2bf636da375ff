"""Exact volumes and root counts.

For n generic Laurent polynomials in n variables the number of common roots
in the torus is n! times the mixed volume of their Newton polytopes.
"""
from goodcompact import bkk_number, hull, mixed_volume, newton_polytope, parse, volume

unit = hull([(0, 0), (1, 0), (0, 1)])
print("area of the unit triangle:", volume(unit))

# two generic conics meet in 4 points
conic = hull([(0, 0), (2, 0), (0, 2)])
print("two conics:", bkk_number([conic, conic]))

# sparse systems can have far fewer roots than the degree bound
f = parse("1 + x1 + x2 + x1*x2", 2)
g = parse("1 + 2*x1 + 3*x2 + 5*x1*x2", 2)
polys = [newton_polytope(f), newton_polytope(g)]
print("bilinear pair:", bkk_number(polys), "(Bezout would say 4)")
print("mixed volume: ", mixed_volume(polys))

# three dimensions: unit cube three times gives 3! * 1 = 6
cube = hull([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
print("three cubes:", bkk_number([cube, cube, cube]))
