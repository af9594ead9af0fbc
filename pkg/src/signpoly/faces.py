"""Facets and face lattices of the sign-matrix polytopes.

Faces are modelled as *components*: labelings of the grid graph in which a
vertical edge carries a subset of {0, 1} (the values its column partial sum
takes over the face's vertices) and a horizontal edge carries ``0`` or ``*``
(the row partial sum is always zero, or not).  Labels are stored as bit
masks so union, intersection and containment are ``|``, ``&`` and a subset
test:

    vertical:    {0} -> 1,  {1} -> 2,  {0,1} -> 3,  {} -> 0
    horizontal:  0   -> 1,  *   -> 3                (0 is a subset of *)

Edges whose label is forced by the family (last-column row totals for
fixed-shape families, last-row column totals for a fixed first column) are
decorations: they never count as darkened.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import affine_dimension
from .sign_matrices import (
    MN,
    FamilyTag,
    Padded,
    Shape,
    ShapeFirstCol,
    SignMatrix,
    enumerate_family,
    in_family,
)
from .tableaux import Partition, distinct_part_count, frequency_rep

V_ZERO, V_ONE, V_BOTH = 1, 2, 3
H_ZERO, H_STAR = 1, 3
DEFAULT_SIZE_GUARD = 10**6


def variant_name(tag: FamilyTag) -> str:
    return {MN: "mn", Shape: "shape", ShapeFirstCol: "shape_v", Padded: "padded"}[type(tag)]


def decorations(tag: FamilyTag) -> tuple[frozenset, frozenset]:
    """Fixed (never darkened) horizontal and vertical edges, as 1-based cells."""
    m, n = tag.rows, tag.cols
    fixed_h = frozenset() if isinstance(tag, MN) else frozenset((i, n) for i in range(1, m + 1))
    fixed_v = frozenset((m, j) for j in range(1, n + 1)) if isinstance(tag, ShapeFirstCol) else frozenset()
    return fixed_h, fixed_v


@dataclass(frozen=True)
class Component:
    m: int
    n: int
    v: tuple[tuple[int, ...], ...]
    h: tuple[tuple[int, ...], ...]
    variant: str = "mn"
    fixed_h: frozenset = field(default=frozenset(), compare=False)
    fixed_v: frozenset = field(default=frozenset(), compare=False)

    @property
    def is_empty(self) -> bool:
        return all(x == 0 for row in self.v for x in row)

    def _check(self, other: "Component"):
        if (self.m, self.n, self.variant) != (other.m, other.n, other.variant):
            raise ValueError("components live on different grids or families")

    def union(self, other: "Component") -> "Component":
        self._check(other)
        return self._with(
            tuple(tuple(a | b for a, b in zip(r, s)) for r, s in zip(self.v, other.v)),
            tuple(tuple(a | b for a, b in zip(r, s)) for r, s in zip(self.h, other.h)),
        )

    def intersection(self, other: "Component") -> "Component":
        self._check(other)
        return self._with(
            tuple(tuple(a & b for a, b in zip(r, s)) for r, s in zip(self.v, other.v)),
            tuple(tuple(a & b for a, b in zip(r, s)) for r, s in zip(self.h, other.h)),
        )

    def contains(self, other: "Component") -> bool:
        """Every label of ``other`` is a subset of the matching label here."""
        self._check(other)
        return all(
            (a & b) == b
            for grid_self, grid_other in ((self.v, other.v), (self.h, other.h))
            for r, s in zip(grid_self, grid_other)
            for a, b in zip(r, s)
        )

    __or__ = union
    __and__ = intersection

    def __le__(self, other: "Component") -> bool:
        return other.contains(self)

    def _with(self, v, h) -> "Component":
        return Component(self.m, self.n, v, h, self.variant, self.fixed_h, self.fixed_v)

    def darkened_edges(self) -> list[tuple[str, int, int]]:
        out = []
        for i in range(1, self.m + 1):
            for j in range(1, self.n + 1):
                if self.v[i - 1][j - 1] == V_BOTH and (i, j) not in self.fixed_v:
                    out.append(("v", i, j))
                if self.h[i - 1][j - 1] == H_STAR and (i, j) not in self.fixed_h and not self.is_empty:
                    out.append(("h", i, j))
        return out

    def key(self) -> tuple:
        return (self.v, self.h)


def empty_component(tag: FamilyTag) -> Component:
    m, n = tag.rows, tag.cols
    zero = tuple(tuple(0 for _ in range(n)) for _ in range(m))
    fixed_h, fixed_v = decorations(tag)
    return Component(m, n, zero, zero, variant_name(tag), fixed_h, fixed_v)


def zero_dim_component(M: SignMatrix, tag: FamilyTag) -> Component:
    """``{c_ij}`` on vertical edges; ``0`` or ``*`` on horizontal edges as ``r_ij`` is zero or not."""
    if not in_family(M, tag):
        raise ValueError(f"matrix is not a member of {tag}")
    c = M.column_sums()
    r = M.row_sums()
    v = tuple(tuple(V_ONE if x == 1 else V_ZERO for x in row) for row in c)
    h = tuple(tuple(H_ZERO if x == 0 else H_STAR for x in row) for row in r)
    fixed_h, fixed_v = decorations(tag)
    return Component(M.m, M.n, v, h, variant_name(tag), fixed_h, fixed_v)


def region_count(delta: Component) -> int:
    """Bounded regions cut out by the darkened edges; -1 for the empty component.

    Darkened edge ends on the bottom or right boundary are merged into one
    exterior point, and the count is ``E - V + C`` for the resulting planar
    graph (edges, vertices, connected components).
    """
    if delta.is_empty:
        return -1
    edges = delta.darkened_edges()
    if not edges:
        return 0
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def node(i, j):
        return "ext" if i == delta.m + 1 or j == delta.n + 1 else (i, j)

    for kind, i, j in edges:
        a = node(i, j)
        b = node(i + 1, j) if kind == "v" else node(i, j + 1)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    nodes = list(parent)
    comps = len({find(x) for x in nodes})
    return len(edges) - len(nodes) + comps


def component_json(delta: Component) -> dict:
    vnames = {0: "", V_ZERO: "0", V_ONE: "1", V_BOTH: "01"}
    hnames = {0: "", H_ZERO: "0", H_STAR: "*"}
    return {
        "v": [[vnames[x] for x in row] for row in delta.v],
        "h": [[hnames[x] for x in row] for row in delta.h],
        "variant": delta.variant,
    }


class FaceLattice:
    """Components of a family ordered by containment.

    Elements are the empty component and every union of 0-dimensional
    components; ``atoms[t]`` is the component of ``vertices[t]``.
    """

    def __init__(self, tag: FamilyTag, size_guard: int = DEFAULT_SIZE_GUARD):
        self.tag = tag
        self.vertices = enumerate_family(tag)
        self.atoms = [zero_dim_component(M, tag) for M in self.vertices]
        self.empty = empty_component(tag)
        seen = {a.key(): a for a in self.atoms}
        frontier = list(seen.values())
        while frontier:
            nxt = []
            for delta in frontier:
                for atom in self.atoms:
                    u = delta | atom
                    if u.key() not in seen:
                        seen[u.key()] = u
                        nxt.append(u)
                        if len(seen) > size_guard:
                            raise RuntimeError(f"face lattice of {tag} exceeds {size_guard} components")
            frontier = nxt
        self._grade = {}
        elements = [self.empty] + list(seen.values())
        for e in elements:
            self._grade[e.key()] = region_count(e)
        self.elements = sorted(elements, key=lambda e: (self._grade[e.key()], e.key()))

    def __len__(self):
        return len(self.elements)

    def grade(self, delta: Component) -> int:
        return self._grade[delta.key()]

    @property
    def top(self) -> Component:
        return self.elements[-1]

    def join(self, a: Component, b: Component) -> Component:
        return a | b

    def meet(self, a: Component, b: Component) -> Component:
        """Union of the atoms lying in ``a & b`` (the empty component if there are none)."""
        both = a & b
        out = self.empty
        for atom in self.atoms:
            if both.contains(atom):
                out = out | atom
        return out

    def vertices_of(self, delta: Component) -> list[SignMatrix]:
        return [M for M, atom in zip(self.vertices, self.atoms) if delta.contains(atom) and not delta.is_empty]

    def covers(self) -> list[tuple[int, int]]:
        """Index pairs ``(lo, hi)`` with ``elements[hi]`` covering ``elements[lo]``."""
        els = self.elements
        below = {
            hi: [lo for lo in range(len(els)) if lo != hi and els[hi].contains(els[lo])]
            for hi in range(len(els))
        }
        out = []
        for hi, lows in below.items():
            lowset = set(lows)
            for lo in lows:
                if not any(lo in set(below[mid]) for mid in lows if mid != lo and mid in lowset):
                    out.append((lo, hi))
        return sorted(out)

    def coatoms(self) -> list[Component]:
        top = self.top
        proper = [e for e in self.elements if e.key() != top.key()]
        return [e for e in proper if not any(o.key() != e.key() and o.contains(e) for o in proper)]

    def to_dot(self, name: str = "face_lattice") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=9];"]
        for idx, e in enumerate(self.elements):
            label = "empty" if e.is_empty else ",".join(
                str(t) for t, a in enumerate(self.atoms) if e.contains(a)
            )
            lines.append(f'  n{idx} [label="{label}\\ndim {self.grade(e)}"];')
        for lo, hi in self.covers():
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def face_lattice(tag: FamilyTag, size_guard: int = DEFAULT_SIZE_GUARD) -> FaceLattice:
    return FaceLattice(tag, size_guard)


# ---------------------------------------------------------------------------
# Faces from the inequality description (independent of components)


@dataclass(frozen=True)
class Inequality:
    """``c_ij >= 0``, ``c_ij <= 1`` or ``r_ij >= 0``; ``tight`` gives the value on the boundary."""

    kind: str  # "c>=0", "c<=1", "r>=0"
    i: int
    j: int

    def is_tight(self, M: SignMatrix, c=None, r=None) -> bool:
        c = M.column_sums() if c is None else c
        r = M.row_sums() if r is None else r
        if self.kind == "c>=0":
            return c[self.i - 1][self.j - 1] == 0
        if self.kind == "c<=1":
            return c[self.i - 1][self.j - 1] == 1
        return r[self.i - 1][self.j - 1] == 0


def description_inequalities(tag: FamilyTag) -> list[Inequality]:
    m, n = tag.rows, tag.cols
    out = []
    for kind in ("c>=0", "c<=1", "r>=0"):
        out += [Inequality(kind, i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    return out


def tight_masks(vertices: list[SignMatrix], inequalities: list[Inequality]) -> list[int]:
    masks = []
    for M in vertices:
        c, r = M.column_sums(), M.row_sums()
        mask = 0
        for b, ineq in enumerate(inequalities):
            if ineq.is_tight(M, c, r):
                mask |= 1 << b
        masks.append(mask)
    return masks


def polytope_faces(tag: FamilyTag, vertices: list[SignMatrix] | None = None) -> list[frozenset]:
    """All faces, each as the frozenset of its vertex indices (the empty face included).

    A face is the set of vertices tight on every inequality that is tight on
    all of a given vertex set; faces are generated by closing unions.
    """
    vertices = enumerate_family(tag) if vertices is None else vertices
    ineqs = description_inequalities(tag)
    masks = tight_masks(vertices, ineqs)
    full = (1 << len(ineqs)) - 1

    def closure(idx: frozenset) -> frozenset:
        common = full
        for t in idx:
            common &= masks[t]
        return frozenset(t for t, mk in enumerate(masks) if mk & common == common)

    faces = {closure(frozenset([t])) for t in range(len(vertices))}
    frontier = list(faces)
    while frontier:
        nxt = []
        for F in frontier:
            for t in range(len(vertices)):
                if t in F:
                    continue
                G = closure(F | {t})
                if G not in faces:
                    faces.add(G)
                    nxt.append(G)
        frontier = nxt
    return [frozenset()] + sorted(faces, key=lambda F: (len(F), sorted(F)))


def face_from_component(delta: Component, tag: FamilyTag, vertices: list[SignMatrix]) -> frozenset:
    """Vertices meeting every equality read off the non-darkened edges of ``delta``."""
    if delta.is_empty:
        return frozenset()
    out = []
    for t, M in enumerate(vertices):
        c, r = M.column_sums(), M.row_sums()
        ok = True
        for i in range(delta.m):
            for j in range(delta.n):
                lv = delta.v[i][j]
                if lv in (V_ZERO, V_ONE) and c[i][j] != (1 if lv == V_ONE else 0):
                    ok = False
                    break
                if delta.h[i][j] == H_ZERO and r[i][j] != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(t)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Facet counts


def polytope_dimension(tag: FamilyTag) -> int:
    """Closed-form dimension (``m*n``, ``lambda1*(n-1)``, ``(lambda1-1)*(n-1)``, or the ``k = n`` forms)."""
    if isinstance(tag, MN):
        return tag.m * tag.n
    lam = tag.shape
    if lam.k == 0:
        return 0
    if lam.k > tag.n:
        raise ValueError(f"{tag} is empty: more parts than available entries")
    if lam.k == tag.n:
        return (lam.lambda1 - lam.part(tag.n)) * (tag.n - 1)
    if isinstance(tag, ShapeFirstCol):
        return (lam.lambda1 - 1) * (tag.n - 1)
    return lam.lambda1 * (tag.n - 1)


def facet_count_mn(m: int, n: int) -> int:
    if m < 2 or n < 1:
        raise ValueError(f"facet count for P(m,n) is stated for m > 1, got m={m}, n={n}")
    return 3 * m * n - n - 2 * (m - 1)


def _shape_constant(lam: Partition, n: int) -> int:
    k, lam1, lam2 = lam.k, lam.lambda1, lam.part(2)
    rectangle = all(p == lam1 for p in lam.parts)
    if k == 1:
        return 2
    if 1 < k < n - 1:
        return 1 if lam1 != lam2 else 0
    if k == n - 1:
        if lam1 != lam2 or rectangle:
            return 2
        return 1
    raise ValueError(f"no case for k={k}, n={n}")


def facet_count_shape(shape, n: int) -> int:
    """Facet count of the fixed-shape polytope for ``1 <= k < n``.

    A rectangle with ``k = n`` is a single point and has no facets; any other
    ``k >= n`` raises.
    """
    lam = Partition.of(shape)
    k, lam1 = lam.k, lam.lambda1
    if k == n and all(p == lam1 for p in lam.parts):
        return 0
    if not 1 <= k < n:
        raise ValueError(f"facet count is stated for 1 <= k < n, got k={k}, n={n}")
    a = frequency_rep(lam)
    return (
        3 * n * lam1
        - n
        - 3 * (lam1 - 1)
        - (n - 2) * (lam1 - lam.part(2) + lam.part(n - 1))
        - (k - a[lam1 - 1])
        - 2 * (lam1 - distinct_part_count(lam))
        - _shape_constant(lam, n)
    )


def facet_count_two_row(lam1: int, lam2: int, n: int) -> int:
    if lam1 == lam2 or lam2 < 1 or lam2 > lam1:
        raise ValueError("two-row formula needs lambda1 > lambda2 >= 1")
    if n > 3:
        return 3 * n * lam1 - n - 5 * (lam1 - 1) - (n - 2) * (lam1 - lam2)
    if n == 3:
        return 3 * n * lam1 - n - 5 * (lam1 - 1) - (n - 2) * lam2 - 1
    raise ValueError("two-row formula needs n >= 3")


def facet_count_rectangle(lam1: int, k: int, n: int) -> int:
    if lam1 < 1 or not 1 <= k <= n:
        raise ValueError(f"rectangle formula needs lambda1 >= 1 and 1 <= k <= n, got {lam1}, {k}, {n}")
    if k == n:
        return 0
    if k == n - 1 or k == 1:
        return 2 * n * lam1 - n - 3 * (lam1 - 1)
    return 3 * n * lam1 - n - 5 * (lam1 - 1)


def facet_count_hook(lam1: int, k: int, n: int) -> int:
    if lam1 < 2 or k < 2 or k > n:
        raise ValueError(f"hook formula needs lambda1 >= 2 and 2 <= k <= n, got {lam1}, {k}, {n}")
    if k == n:
        return 2 * n * (lam1 - 1) - n - 3 * (lam1 - 2)
    if k == n - 1:
        return 2 * n * lam1 - 2 * n - 3 * (lam1 - 1) + 4
    return 2 * n * lam1 - 3 * (lam1 - 1) - k + 2


# ---------------------------------------------------------------------------
# Facet-defining equalities


@dataclass(frozen=True)
class FacetEquality:
    kind: str  # row-sum-zero | col-sum-zero | col-sum-one | corner-zero | full-col-one
    i: int
    j: int

    def holds(self, M: SignMatrix, c=None, r=None) -> bool:
        c = M.column_sums() if c is None else c
        r = M.row_sums() if r is None else r
        if self.kind == "row-sum-zero":
            return r[self.i - 1][self.j - 1] == 0
        if self.kind in ("col-sum-zero", "corner-zero"):
            return c[self.i - 1][self.j - 1] == 0
        return c[self.i - 1][self.j - 1] == 1

    def __str__(self):
        names = {
            "row-sum-zero": "r[{i},{j}] = 0",
            "col-sum-zero": "c[{i},{j}] = 0",
            "col-sum-one": "c[{i},{j}] = 1",
            "corner-zero": "X[{i},{j}] = 0",
            "full-col-one": "c[{i},{j}] = 1",
        }
        return names[self.kind].format(i=self.i, j=self.j)


def facet_equalities(tag: FamilyTag) -> list[FacetEquality]:
    if isinstance(tag, MN):
        m, n = tag.m, tag.n
        facet_count_mn(m, n)
        out = [FacetEquality("row-sum-zero", i, j) for i in range(2, m + 1) for j in range(1, n + 1)]
        out += [FacetEquality("col-sum-zero", i, j) for i in range(1, m + 1) for j in range(2, n + 1)]
        out += [FacetEquality("col-sum-one", i, j) for i in range(1, m + 1) for j in range(2, n + 1)]
        out += [FacetEquality("corner-zero", 1, 1), FacetEquality("full-col-one", m, 1)]
        return out
    if type(tag) is not Shape:
        raise ValueError(f"facet equalities are listed for MN and Shape families, not {tag}")
    lam, n = tag.shape, tag.n
    k, lam1, lam2 = lam.k, lam.lambda1, lam.part(2)
    if k == n and all(p == lam1 for p in lam.parts):
        return []
    if not 1 <= k < n:
        raise ValueError(f"facet equalities are stated for 1 <= k < n, got k={k}, n={n}")
    a = frequency_rep(lam)

    def freq(t):  # a_t with a_t = 0 outside 1..lambda1
        return a[t - 1] if 1 <= t <= lam1 else 0

    out = [
        FacetEquality("row-sum-zero", i, j)
        for i in range(2, lam1 + 1)
        for j in range(1, n - freq(lam1 - i + 1))
    ]
    out += [FacetEquality("col-sum-zero", i, j) for i in range(1, lam1 + 1) for j in range(2, n)]
    out += [
        FacetEquality("col-sum-zero", i, n)
        for i in range(1, lam1 + 1)
        if (i == lam1 and k < n - 1) or (i <= lam1 - 1 and freq(lam1 - i) > 0)
    ]
    out += [FacetEquality("col-sum-one", i, j) for i in range(lam1 - lam2 + 1, lam1 + 1) for j in range(2, n)]
    out += [
        FacetEquality("col-sum-one", i, n)
        for i in range(lam1 - lam2 + 1, lam1 + 1)
        if freq(lam1 - i + 1) > 0
    ]
    if k == n - 1 and k > 1 and all(p == lam1 for p in lam.parts):
        out.append(FacetEquality("corner-zero", 1, 1))
    if k == 1:
        out.append(FacetEquality("full-col-one", lam1, 1))
    return out


def facet_equalities_from_proof(tag: FamilyTag) -> list[FacetEquality]:
    """Facet equalities obtained by starting from the ``P(lambda1, n)`` list and
    striking every inequality the fixed-shape counting argument shows redundant.

    For MN families this is the same list as :func:`facet_equalities`.  For
    fixed shapes it differs from the printed list in three places: the
    ``X[1,1] = 0`` and ``c[lambda1,1] = 1`` equalities are kept exactly where
    the printed conditions drop them, and when ``k = n - 1`` the column
    conditions ``c[i,j] = 0`` on the bottom ``lambda_{n-1}`` rows are struck.
    """
    if isinstance(tag, MN):
        return facet_equalities(tag)
    if type(tag) is not Shape:
        raise ValueError(f"facet equalities are listed for MN and Shape families, not {tag}")
    lam, n = tag.shape, tag.n
    k, lam1, lam2 = lam.k, lam.lambda1, lam.part(2)
    if k == n and all(p == lam1 for p in lam.parts):
        return []
    if not 1 <= k < n:
        raise ValueError(f"facet equalities are stated for 1 <= k < n, got k={k}, n={n}")
    a = frequency_rep(lam)

    def freq(t):
        return a[t - 1] if 1 <= t <= lam1 else 0

    keep = {("row-sum-zero", i, j) for i in range(2, lam1 + 1) for j in range(1, n)}
    keep |= {("col-sum-zero", i, j) for i in range(1, lam1 + 1) for j in range(2, n + 1)}
    keep |= {("col-sum-one", i, j) for i in range(1, lam1 + 1) for j in range(2, n + 1)}
    keep |= {("corner-zero", 1, 1), ("full-col-one", lam1, 1)}
    # top rows sum to at most 1 when lambda1 > lambda2
    keep -= {("col-sum-one", i, j) for i in range(1, lam1 - lam2 + 1) for j in range(1, n + 1)}
    # bottom rows sum to zero when k = n - 1
    if k == n - 1 and k > 1:
        low = lam.part(n - 1)
        keep -= {("col-sum-zero", i, j) for i in range(lam1 - low + 1, lam1 + 1) for j in range(2, n + 1)}
        if low == lam1:
            keep.discard(("corner-zero", 1, 1))
    for i in range(2, lam1 + 1):
        keep -= {("row-sum-zero", i, j) for j in range(n - freq(lam1 - i + 1), n)}
        if freq(lam1 - i + 1) == 0:
            keep -= {("col-sum-one", i, n), ("col-sum-zero", i - 1, n)}
    if k == 1:
        keep.discard(("full-col-one", lam1, 1))
    order = {"row-sum-zero": 0, "col-sum-zero": 1, "col-sum-one": 2, "corner-zero": 3, "full-col-one": 4}
    return [FacetEquality(*t) for t in sorted(keep, key=lambda t: (order[t[0]], t[1], t[2]))]


def facet_count(tag: FamilyTag) -> int:
    if isinstance(tag, MN):
        return facet_count_mn(tag.m, tag.n)
    if type(tag) is Shape:
        return facet_count_shape(tag.shape, tag.n)
    raise ValueError(f"no closed-form facet count for {tag}")


@dataclass
class FacetCheck:
    equality: FacetEquality
    tight_vertices: list[int]
    affine_dim: int
    passed: bool


@dataclass
class FacetReport:
    tag: FamilyTag
    dimension: int
    expected_count: int
    listed: list[FacetCheck]
    distinct: bool
    computed_facets: int
    missing: list[str]
    discarded_ok: bool

    @property
    def passed(self) -> bool:
        return (
            all(ch.passed for ch in self.listed)
            and self.distinct
            and len(self.listed) == self.expected_count == self.computed_facets
            and not self.missing
            and self.discarded_ok
        )

    def as_json(self) -> list[dict]:
        return [
            {
                "equality": str(ch.equality),
                "kind": ch.equality.kind,
                "i": ch.equality.i,
                "j": ch.equality.j,
                "tight_vertices": ch.tight_vertices,
                "affine_dim": ch.affine_dim,
                "pass": ch.passed,
            }
            for ch in self.listed
        ]


def verify_facets(tag: FamilyTag, equalities: list[FacetEquality] | None = None) -> FacetReport:
    """Certify the listed equalities as the facets of the family polytope.

    Each listed equality must be met by a vertex set of affine dimension one
    less than the polytope; the vertex sets must be pairwise distinct; every
    inequality of the description whose vertex set is of codimension one must
    coincide with a listed facet (anything it misses is reported); and the
    number of listed facets must equal the closed form and the number of
    distinct codimension-one vertex sets.
    """
    vertices = enumerate_family(tag)
    dim = affine_dimension([M.entries for M in vertices])
    if equalities is None:
        equalities = facet_equalities(tag)
    checks = []
    seen = set()
    for eq in equalities:
        tight = [t for t, M in enumerate(vertices) if eq.holds(M)]
        d = affine_dimension([vertices[t].entries for t in tight])
        checks.append(FacetCheck(eq, tight, d, d == dim - 1))
        seen.add(frozenset(tight))
    distinct = len(seen) == len(equalities)
    computed = set()
    missing = []
    for ineq in description_inequalities(tag):
        tight = frozenset(t for t, M in enumerate(vertices) if ineq.is_tight(M))
        if len(tight) == len(vertices):
            continue
        if affine_dimension([vertices[t].entries for t in tight]) == dim - 1:
            computed.add(tight)
            if tight not in seen:
                missing.append(f"{ineq.kind} at ({ineq.i},{ineq.j})")
    return FacetReport(
        tag=tag,
        dimension=dim,
        expected_count=facet_count(tag),
        listed=checks,
        distinct=distinct,
        computed_facets=len(computed),
        missing=sorted(set(missing)),
        discarded_ok=not missing,
    )


def true_facet_count(tag: FamilyTag) -> int:
    """Number of facets found directly from vertex tightness, with no closed form involved."""
    vertices = enumerate_family(tag)
    dim = affine_dimension([M.entries for M in vertices])
    facets = set()
    for ineq in description_inequalities(tag):
        tight = frozenset(t for t, M in enumerate(vertices) if ineq.is_tight(M))
        if len(tight) < len(vertices) and affine_dimension([vertices[t].entries for t in tight]) == dim - 1:
            facets.add(tight)
    return len(facets)
