"""Facets of sign matrix polytopes.

Closed-form facet counts are compared against facets found directly: a face
is a facet when the vertices tight on one inequality span a hyperplane of the
polytope's affine hull.  The listed equalities for fixed shapes are also
checked one by one.
"""

from signpoly import (
    MN,
    Partition,
    Shape,
    facet_count,
    facet_count_two_row,
    facet_equalities,
    facet_equalities_from_proof,
    true_facet_count,
    verify_facets,
)

for tag in [MN(2, 2), MN(2, 3), MN(3, 3), Shape(Partition((2, 2)), 3), Shape(Partition((3, 1)), 4), Shape(Partition((3, 2, 1)), 4)]:
    print(f"{str(tag):18} formula {facet_count(tag):3d}   computed {true_facet_count(tag):3d}")

print()
tag = Shape(Partition((2, 2)), 3)
listed = facet_equalities(tag)
report = verify_facets(tag)
print(f"{tag}: {len(listed)} listed equalities, {report.computed_facets} facets, pass={report.passed}")
for check in report.listed:
    print(f"    {str(check.equality):24} tight face dim {check.affine_dim}, ok={check.passed}")
print("rebuilt from the counting argument:")
report = verify_facets(tag, facet_equalities_from_proof(tag))
print("   ", [str(e) for e in facet_equalities_from_proof(tag)], "pass =", report.passed)

print()
print("two-row shapes at n = 3, closed form vs computed:")
for l1, l2 in [(2, 1), (3, 1), (3, 2)]:
    print(f"    [{l1},{l2}]: {facet_count_two_row(l1, l2, 3)} vs {true_facet_count(Shape(Partition((l1, l2)), 3))}")
