"""Writing a point of a sign matrix polytope as a convex combination of sign matrices.

The point below has fractional partial sums.  A circuit through the
fractional edges of its partial-sum grid gives a direction D; moving along
+D and -D until some partial sum hits an integer produces two points that are
closer to being vertices.  Repeating finishes in finitely many steps.
"""

from fractions import Fraction

from signpoly import Partition, Shape, decompose, find_fractional_circuit, membership, partial_sums, split
from signpoly.partial_sums import as_matrix


def fmt(X):
    return "\n".join("    " + " ".join(f"{str(Fraction(x)):>6}" for x in row) for row in X)


tag = Shape(Partition((3, 3, 1)), 4)
X = as_matrix([
    ["9/10", 0, "3/10", "4/5"],
    [0, "1/10", "3/5", "-7/10"],
    [0, "9/10", "-1/10", "1/5"],
])
print("point X in", tag, "->", bool(membership(X, tag)))
print(fmt(X))

lab = partial_sums(X)
print("integral partial sums:", lab.integral_count())

C = find_fractional_circuit(X)
print("circuit:", C.kind, "with corners", C.corners)

r = split(X, tag)
print(f"steps: +{r.ell_plus}, -{r.ell_minus}; weights {r.weight_plus}, {r.weight_minus}")
print("X+ =")
print(fmt(r.x_plus))
print("X- =")
print(fmt(r.x_minus))

stats = {}
combo = decompose(X, tag, stats)
print()
print(f"full decomposition: {len(combo.terms)} sign matrices after {stats['splits']} splits")
for w, M in combo.terms:
    print(f"  {str(w):>6}  {M.entries}")
print("reconstructs X:", combo.point() == X)
