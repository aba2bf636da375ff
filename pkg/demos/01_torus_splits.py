"""Splitting the torus along a covector.

A primitive covector phi picks out the one-parameter direction we eliminate.
complete_split finds e with <phi, e> = 1 and a basis of ker(phi), together a
unimodular basis of Z^n.  Characters in ker(phi) are the coordinates on the
complementary subtorus.
"""
from goodcompact import complete_split, make_primitive, pull_up, push_down

# (2, 4, -6) is not primitive; divide out the content first
phi, content = make_primitive((2, 4, -6))
print("primitive covector", phi, "content", content)

split = complete_split(phi)
print("phi    ", split.phi)
print("e      ", split.e)
for b in split.kernel_basis:
    print("kernel ", b)

# any kernel vector has integer coordinates in the basis, and back again
m = (5, -1, 1)
coords = push_down(m, split)
print(m, "->", coords, "->", pull_up(coords, split))

# the basis depends only on phi, so the same call is reproducible
assert complete_split(phi) == split
