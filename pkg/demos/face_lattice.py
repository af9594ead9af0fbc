"""Faces as components of the complete partial-sum graph.

Each sign matrix labels the vertical edges of the grid with its column
partial sum and the horizontal edges with 0 or * (zero or positive row
partial sum).  Unions of these labelings are the faces; the number of bounded
regions cut out by the doubly labelled edges is the face's dimension.
"""

from collections import Counter

from signpoly import MN, Partition, Shape, affine_dimension, face_lattice, polytope_faces, region_count

for tag in [MN(2, 2), Shape(Partition((2, 2)), 3)]:
    L = face_lattice(tag)
    faces = polytope_faces(tag, L.vertices)
    grades = Counter(L.grade(e) for e in L.elements)
    print(tag)
    print("    components:", len(L), " faces from inequalities:", len(faces))
    print("    f-vector:", [grades[d] for d in sorted(grades)])
    top = L.top
    print("    top region count:", region_count(top), " dimension:", affine_dimension([M.entries for M in L.vertices]))
    agree = all(region_count(e) == affine_dimension([M.entries for M in L.vertices_of(e)]) for e in L.elements)
    print("    region count = dimension on every face:", agree)

L = face_lattice(MN(1, 1))
print()
print(L.to_dot())
