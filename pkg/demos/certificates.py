"""Why every sign matrix is a vertex.

For a member M, sum the column partial sums that equal 1 in M.  On M this is
the size of that support; on any other member of a fixed-shape family it is
strictly smaller.  Without fixed row totals one also subtracts the partial
sums that are 0 in M.
"""

from signpoly import MN, Partition, Shape, certificate, enumerate_family, hyperplane_shape, validate

tag = Shape(Partition((2, 2)), 3)
members = enumerate_family(tag)
M = validate([[1, 0, 1], [0, 1, -1]])
H = certificate(M, tag)
print("family", tag, "target")
print("   ", M.entries)
print("threshold", H.threshold)
for other in members:
    mark = "<- target" if other == M else ""
    print(f"    {str(other.entries):32} {H.evaluate(other)} {mark}")

print()
tag = MN(2, 3)
h = validate([[1, 0, 0], [0, 0, 0]])
print("in", tag, "the unsigned functional for", h.entries, "does not separate:")
U = hyperplane_shape(h)
print("   ", sum(1 for o in enumerate_family(tag) if o != h and U.evaluate(o) >= U.evaluate(h)), "other members reach its value")
K = certificate(h, tag)
print("the signed one does:", K.separates(h, enumerate_family(tag)))
