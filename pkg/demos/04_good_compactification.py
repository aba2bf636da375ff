"""From a system of equations to a certified good tuple.

good_system eliminates one variable per level until a single equation is left,
then pulls the pivots back to the original torus.  Their Newton polytopes have
affinely independent edges, so the normal fan of their Minkowski sum is
convenient for them.  The four certificates make that checkable.
"""
from goodcompact import dimension, good_system, good_system_randomized, parse

# a curve in (C*)^3: two equations, codimension 2
system = [parse(t, 3) for t in ("x1 + x2 + x3 - 1", "x1*x2 - x3^2")]
res = good_system(system)
for line in res.report():
    print(line)
print("dim", res.dim, "codim", res.codim)
for q in res.tuple:
    print("  ", q)
print("certificates all pass:", res.certificates.all_passed)
print("fan:", len(res.fan.rays), "rays,", len(res.fan.cones), "cones")

# redundancy is detected: a third equation implied by the first two
redundant = [parse(t, 2) for t in ("x1 - 1", "x2 - 1", "x1*x2 - 1")]
print("redundant system: (dim, codim) =", dimension(redundant))

# no solutions at all
empty = [parse(t, 2) for t in ("x1 + x2 - 1", "x1 + x2 - 2")]
res = good_system(empty)
print("parallel lines:", res.notes, "codim", res.codim)

# if the codimension is known, random combinations need only k eliminations
res = good_system_randomized(system, 2, seed=3)
print("randomized:", res.notes[-1], "all pass:", res.certificates.all_passed)
