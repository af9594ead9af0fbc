"""Sign matrices and semistandard tableaux.

Walks through the map from a sign matrix to its tableau and back, then counts
a few families two ways: by brute-force enumeration and by closed formulas.
"""

from signpoly import (
    MN,
    Partition,
    Shape,
    enumerate_family,
    gordon_count,
    hook_content_count,
    phi,
    phi_inv,
    validate,
)


def show(M):
    for row in M.entries:
        print("   ", " ".join(f"{x:2d}" for x in row))


M = validate([[0, 1, 0, 0], [1, -1, 1, 0], [0, 1, 0, 0]])
print("a 3x4 sign matrix:")
show(M)

T = phi(M)
print("its tableau, shape", list(T.shape.parts))
for row in T.rows:
    print("   ", row)

back = phi_inv(T)
print("and back again:", back == M)

print()
print("family sizes: enumerated vs formula")
for lam, n in [((2, 2), 3), ((3, 1), 4), ((3, 2, 1), 3), ((2, 2, 1), 5)]:
    tag = Shape(Partition(lam), n)
    print(f"  {str(tag):18} {len(enumerate_family(tag)):5d} {hook_content_count(Partition(lam), n):5d}")
for m, n in [(2, 2), (2, 3), (3, 3)]:
    tag = MN(m, n)
    print(f"  {str(tag):18} {len(enumerate_family(tag)):5d} {gordon_count(m, n):5d}")
