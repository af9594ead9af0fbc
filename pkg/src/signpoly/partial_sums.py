"""The grid graph of a matrix, its partial-sum edge labels, and fractional circuits.

Vertices of the ``m x n`` grid graph are ``(i, j)`` with ``1 <= i <= m+1`` and
``1 <= j <= n+1``.  Vertex ``(i, j)`` with ``i <= m, j <= n`` stands for the
matrix entry ``X[i][j]``; the vertical edge leaving it downwards carries the
column partial sum ``c[i][j]`` and the horizontal edge leaving it to the right
carries the row partial sum ``r[i][j]``.  Vertices in row ``m+1`` and column
``n+1`` are boundary vertices.

Matrices are tuples of tuples; indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]

DOWN, RIGHT, UP, LEFT = "down", "right", "up", "left"
_STEP = {DOWN: (1, 0), RIGHT: (0, 1), UP: (-1, 0), LEFT: (0, -1)}
_VERTICAL = {DOWN, UP}


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    """Convert nested iterables of ints, Fractions or ``"p/q"`` strings to a Fraction matrix."""
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("matrix rows must all have the same length")
    return out


def is_integral(x) -> bool:
    return Fraction(x).denominator == 1


@dataclass(frozen=True)
class GridSpec:
    m: int
    n: int

    def vertices(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.m + 2) for j in range(1, self.n + 2)]

    def is_internal(self, v: tuple[int, int]) -> bool:
        return 1 <= v[0] <= self.m and 1 <= v[1] <= self.n

    def is_bottom(self, v: tuple[int, int]) -> bool:
        return v[0] == self.m + 1 and 1 <= v[1] <= self.n

    def is_right(self, v: tuple[int, int]) -> bool:
        return v[1] == self.n + 1 and 1 <= v[0] <= self.m

    def edges(self) -> list[tuple[str, int, int]]:
        """``("v", i, j)`` joins (i,j)-(i+1,j); ``("h", i, j)`` joins (i,j)-(i,j+1)."""
        return [(kind, i, j) for kind in "vh" for i in range(1, self.m + 1) for j in range(1, self.n + 1)]


@dataclass(frozen=True)
class PartialSumLabeling:
    grid: GridSpec
    r: Matrix
    c: Matrix

    def row_sum(self, i: int, j: int) -> Fraction:
        """``r_ij`` with the convention ``r_i0 = 0``."""
        return self.r[i - 1][j - 1] if j >= 1 else Fraction(0)

    def col_sum(self, i: int, j: int) -> Fraction:
        """``c_ij`` with the convention ``c_0j = 0``."""
        return self.c[i - 1][j - 1] if i >= 1 else Fraction(0)

    def label(self, edge: tuple[str, int, int]) -> Fraction:
        kind, i, j = edge
        return self.c[i - 1][j - 1] if kind == "v" else self.r[i - 1][j - 1]

    def integral_count(self) -> int:
        return sum(1 for grid in (self.r, self.c) for row in grid for x in row if x.denominator == 1)


def partial_sums(X: Sequence[Sequence]) -> PartialSumLabeling:
    X = as_matrix(X)
    m = len(X)
    n = len(X[0]) if m else 0
    r = tuple(tuple(sum(row[: j + 1], Fraction(0)) for j in range(n)) for row in X)
    c_rows = []
    running = [Fraction(0)] * n
    for row in X:
        running = [a + b for a, b in zip(running, row)]
        c_rows.append(tuple(running))
    return PartialSumLabeling(GridSpec(m, n), r, tuple(c_rows))


def matrix_from_column_sums(c: Sequence[Sequence]) -> Matrix:
    c = as_matrix(c)
    return tuple(
        tuple(x - (c[i - 1][j] if i else 0) for j, x in enumerate(row)) for i, row in enumerate(c)
    )


@dataclass(frozen=True)
class Circuit:
    """A simple cycle (``closed``) or boundary-to-boundary simple path (``open``).

    ``vertices`` lists the traversal; for a closed circuit the first vertex is
    not repeated at the end.  ``corners`` are the turning vertices in
    traversal order, rotated (for closed circuits) so that the first corner is
    entered along a vertical edge.
    """

    kind: str
    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[str, int, int], ...]
    corners: tuple[tuple[int, int], ...] = field(default=())

    def corner_signs(self) -> dict[tuple[int, int], int]:
        """Alternating ``+1, -1, ...`` along the corners, starting with ``+1``."""
        return {corner: 1 if t % 2 == 0 else -1 for t, corner in enumerate(self.corners)}


class NoFractionalColumnSum(ValueError):
    pass


def _edge(v: tuple[int, int], direction: str) -> tuple[str, int, int]:
    i, j = v
    if direction == DOWN:
        return ("v", i, j)
    if direction == UP:
        return ("v", i - 1, j)
    if direction == RIGHT:
        return ("h", i, j)
    return ("h", i, j - 1)


def _edge_exists(grid: GridSpec, edge: tuple[str, int, int]) -> bool:
    _, i, j = edge
    return 1 <= i <= grid.m and 1 <= j <= grid.n


def _start_vertex(lab: PartialSumLabeling, row_sums_fixed: bool) -> tuple[int, int]:
    m, n = lab.grid.m, lab.grid.n
    if m == 0 or n == 0:
        raise NoFractionalColumnSum("matrix has no entries")
    for j in range(1, n + 1):
        if not is_integral(lab.c[m - 1][j - 1]):
            return (m + 1, j)
    if not row_sums_fixed:
        for i in range(1, m + 1):
            if not is_integral(lab.r[i - 1][n - 1]):
                return (i, n + 1)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if not is_integral(lab.c[i - 1][j - 1]):
                return (i, j)
    raise NoFractionalColumnSum("every column partial sum is an integer")


def _corners(vertices: Sequence[tuple[int, int]], closed: bool) -> list[tuple[int, int]]:
    def direction(a, b):
        return "v" if a[1] == b[1] else "h"

    L = len(vertices)
    corners = []
    if closed:
        for t in range(L):
            before = direction(vertices[t - 1], vertices[t])
            after = direction(vertices[t], vertices[(t + 1) % L])
            if before != after:
                corners.append((t, before))
        # rotate so the first corner is entered vertically
        first = next(idx for idx, (_, before) in enumerate(corners) if before == "v")
        corners = corners[first:] + corners[:first]
    else:
        for t in range(1, L - 1):
            if direction(vertices[t - 1], vertices[t]) != direction(vertices[t], vertices[t + 1]):
                corners.append((t, None))
    return [vertices[t] for t, _ in corners]


def find_fractional_circuit(X: Sequence[Sequence], row_sums_fixed: bool = True) -> Circuit:
    """Walk the non-integer edges of the partial-sum graph of ``X`` until it closes or exits.

    Start: the leftmost bottom boundary vertex whose column total is
    fractional; with free row sums, next the topmost right boundary vertex
    whose row total is fractional; otherwise the first fractional ``c_ij`` in
    row-major order, walking from its vertex.

    Extension from the current vertex, over unused fractional edges:
    an edge reaching an admissible boundary endpoint is taken at once;
    otherwise a turn is preferred over going straight, and ties are broken
    in the order down, right, up, left.  When the walk meets a vertex already
    on it, the leading tail is dropped and the closed loop is returned.

    With ``row_sums_fixed`` open circuits must run bottom to bottom; without it
    the right boundary is admissible as well.
    """
    lab = partial_sums(X)
    grid = lab.grid
    start = _start_vertex(lab, row_sums_fixed)

    def terminal(v):
        if v == start:
            return False
        return grid.is_bottom(v) or grid.is_right(v)

    path = [start]
    edges: list[tuple[str, int, int]] = []
    seen = {start: 0}
    prev_dir = None
    while True:
        here = path[-1]
        options = []
        for d in (DOWN, RIGHT, UP, LEFT):
            e = _edge(here, d)
            if not _edge_exists(grid, e) or (edges and e == edges[-1]):
                continue
            if is_integral(lab.label(e)):
                continue
            di, dj = _STEP[d]
            options.append((d, e, (here[0] + di, here[1] + dj)))
        if not options:
            raise RuntimeError(f"fractional walk is stuck at {here}; the labels are inconsistent")
        exits = [opt for opt in options if terminal(opt[2])]
        if exits:
            choice = exits[0]
        elif prev_dir is None:
            choice = options[0]
        else:
            turns = [opt for opt in options if (opt[0] in _VERTICAL) != (prev_dir in _VERTICAL)]
            choice = turns[0] if turns else options[0]
        d, e, nxt = choice
        edges.append(e)
        prev_dir = d
        if nxt in seen:
            k = seen[nxt]
            loop = tuple(path[k:])
            loop_edges = tuple(edges[k:])
            return Circuit("closed", loop, loop_edges, tuple(_corners(loop, closed=True)))
        path.append(nxt)
        seen[nxt] = len(path) - 1
        if terminal(nxt):
            if row_sums_fixed and not (grid.is_bottom(start) and grid.is_bottom(nxt)):
                raise ValueError(
                    f"open walk from {start} to {nxt} leaves through the right boundary "
                    "although row totals are fixed"
                )
            verts = tuple(path)
            return Circuit("open", verts, tuple(edges), tuple(_corners(verts, closed=False)))


def circuit_direction_matrix(circuit: Circuit, m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """The ``+1/-1`` pattern placed on the corner entries of ``circuit``."""
    signs = circuit.corner_signs()
    return tuple(tuple(signs.get((i, j), 0) for j in range(1, n + 1)) for i in range(1, m + 1))


def labeling_to_dot(X: Sequence[Sequence], name: str = "partial_sums") -> str:
    """Graphviz description of the labeled grid graph (entries on internal vertices)."""
    X = as_matrix(X)
    lab = partial_sums(X)
    m, n = lab.grid.m, lab.grid.n
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for i, j in lab.grid.vertices():
        if i == m + 1 and j == n + 1:
            continue
        pos = f'pos="{j},{-i}!"'
        if lab.grid.is_internal((i, j)):
            lines.append(f'  "{i},{j}" [label="{X[i - 1][j - 1]}", {pos}];')
        else:
            lines.append(f'  "{i},{j}" [label="", shape=point, {pos}];')
    for kind, i, j in lab.grid.edges():
        other = (i + 1, j) if kind == "v" else (i, j + 1)
        value = lab.label((kind, i, j))
        style = "" if value.denominator == 1 else ", penwidth=2"
        lines.append(f'  "{i},{j}" -- "{other[0]},{other[1]}" [label="{value}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
