"""Laurent polynomials and elimination along a covector.

Given a pivot P and further equations Q_1..Q_N, projecting along phi replaces
the system by the coefficients (in the random weights lambda) of the
resultant of P and sum lambda_j Q_j, taken in the variable t = x^e.
"""
from goodcompact import complete_split, newton_polytope, parse, project, resultant

p = parse("x1^2*x2^-1 - 3*x1 + 2*x2", 2)
print("p              =", p)
print("Newton polytope =", newton_polytope(p).vertices)
print("p * p          =", p * p)

# resultant of two univariate polynomials with coefficients in rank 0
a = [parse(c, 0) for c in ("1", "0", "-1")]  # t^2 - 1
b = [parse(c, 0) for c in ("1", "-1")]       # t - 1
print("Res(t^2 - 1, t - 1) =", resultant(a, b, 2, 1))
b = [parse(c, 0) for c in ("1", "-2")]       # t - 2
print("Res(t^2 - 1, t - 2) =", resultant(a, b, 2, 1))

# project the hyperbola x1*x2 = 1 cut with the diagonal x1 = x2 along x2
system = [parse("x1*x2 - 1", 2), parse("x1 - x2", 2)]
split = complete_split((0, 1))
proj = project(system, split)
print(f"{proj.raw_count} coefficient(s) before pruning, {len(proj.equations)} after")
for q in proj.equations:
    print("  image equation:", q)  # x1^2 - 1: the points (1, 1) and (-1, -1)
