"""Sign matrices, the polytope families they generate, and the tableau bijection.

A sign matrix has entries in {-1, 0, 1}, column partial sums (from the top)
in {0, 1} and nonnegative row partial sums (from the left).  Four families
are supported, each selected by a small frozen dataclass:

``MN(m, n)``
    all ``m x n`` sign matrices;
``Shape(shape, n)``
    ``lambda1 x n`` sign matrices whose row ``i`` totals ``a[lambda1-i+1]``,
    ``a`` being the frequency representation of ``shape``;
``ShapeFirstCol(v, shape, n)``
    the ``Shape`` members whose column ``j`` totals 1 exactly when ``j`` is in ``v``;
``Padded(m, shape, n)``
    ``Shape`` members with ``m - lambda1`` zero rows stacked on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence, Union

from .tableaux import (
    Partition,
    Tableau,
    check_first_column,
    enumerate_ssyt,
    enumerate_ssyt_first_column,
    frequency_rep,
    partitions_in_box,
)


@dataclass(frozen=True)
class MN:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"MN family needs m, n >= 1, got ({self.m}, {self.n})")

    @property
    def rows(self) -> int:
        return self.m

    @property
    def cols(self) -> int:
        return self.n

    @property
    def row_totals(self):
        return None

    @property
    def column_totals(self):
        return None

    @property
    def zero_rows(self) -> int:
        return 0

    def __str__(self):
        return f"MN({self.m},{self.n})"


@dataclass(frozen=True)
class Shape:
    shape: Partition
    n: int

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition.of(self.shape))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")

    @property
    def rows(self) -> int:
        return self.shape.lambda1

    @property
    def cols(self) -> int:
        return self.n

    @property
    def row_totals(self) -> tuple[int, ...]:
        a = frequency_rep(self.shape)
        lam1 = self.shape.lambda1
        return tuple(a[lam1 - i] for i in range(1, lam1 + 1))

    @property
    def column_totals(self):
        return None

    @property
    def zero_rows(self) -> int:
        return 0

    def __str__(self):
        return f"Shape({self.shape},{self.n})"


@dataclass(frozen=True)
class ShapeFirstCol:
    v: tuple[int, ...]
    shape: Partition
    n: int

    def __post_init__(self):
        shape = Partition.of(self.shape)
        object.__setattr__(self, "shape", shape)
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        v = check_first_column(self.v, shape, self.n)
        if any(x > self.n for x in v):
            raise ValueError(f"first column {v} has entries above n={self.n}")
        object.__setattr__(self, "v", v)

    @property
    def rows(self) -> int:
        return self.shape.lambda1

    @property
    def cols(self) -> int:
        return self.n

    @property
    def row_totals(self) -> tuple[int, ...]:
        return Shape(self.shape, self.n).row_totals

    @property
    def column_totals(self) -> tuple[int, ...]:
        return tuple(1 if j in self.v else 0 for j in range(1, self.n + 1))

    @property
    def zero_rows(self) -> int:
        return 0

    def __str__(self):
        return f"ShapeFirstCol({','.join(map(str, self.v))};{self.shape},{self.n})"


@dataclass(frozen=True)
class Padded:
    m: int
    shape: Partition
    n: int

    def __post_init__(self):
        shape = Partition.of(self.shape)
        object.__setattr__(self, "shape", shape)
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.m < 1 or shape.lambda1 > self.m:
            raise ValueError(f"padded family needs lambda1 <= m, got lambda1={shape.lambda1}, m={self.m}")

    @property
    def rows(self) -> int:
        return self.m

    @property
    def cols(self) -> int:
        return self.n

    @property
    def zero_rows(self) -> int:
        return self.m - self.shape.lambda1

    @property
    def row_totals(self) -> tuple[int, ...]:
        return (0,) * self.zero_rows + Shape(self.shape, self.n).row_totals

    @property
    def column_totals(self):
        return None

    def __str__(self):
        return f"Padded({self.m};{self.shape},{self.n})"


FamilyTag = Union[MN, Shape, ShapeFirstCol, Padded]


class InvalidSignMatrix(ValueError):
    """Raised by :func:`validate`; carries the violated condition and its 1-based cell."""

    def __init__(self, condition: str, i: int, j: int, value):
        self.condition, self.i, self.j, self.value = condition, i, j, value
        super().__init__(f"{condition} is {value} at ({i},{j})")


@dataclass(frozen=True)
class SignMatrix:
    m: int
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __str__(self):
        return "[" + "; ".join(" ".join(f"{x:2d}" for x in row) for row in self.entries) + "]"

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.entries for x in row)

    def column_sums(self) -> tuple[tuple[int, ...], ...]:
        """``c[i-1][j-1]`` is the sum of column ``j`` over rows ``1..i``."""
        out, running = [], [0] * self.n
        for row in self.entries:
            running = [a + b for a, b in zip(running, row)]
            out.append(tuple(running))
        return tuple(out)

    def row_sums(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for row in self.entries:
            acc, partial = 0, []
            for x in row:
                acc += x
                partial.append(acc)
            out.append(tuple(partial))
        return tuple(out)

    def row_totals(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def column_totals(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.entries) for j in range(self.n))


def sort_key(M: SignMatrix) -> tuple[int, ...]:
    return M.flat


def validate(entries: Sequence[Sequence], n: int | None = None) -> SignMatrix:
    """Check the sign-matrix conditions cell by cell in row-major order.

    At each cell the column partial sum is checked before the row partial
    sum; the first failure raises :class:`InvalidSignMatrix`.  ``n`` is only
    needed for matrices with no rows.
    """
    rows = [list(row) for row in entries]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("matrix is not rectangular")
    width = len(rows[0]) if rows else (n or 0)
    if n is not None and width != n:
        raise ValueError(f"expected {n} columns, got {width}")
    col = [0] * width
    clean = []
    for i, row in enumerate(rows, start=1):
        acc = 0
        out = []
        for j, x in enumerate(row, start=1):
            if x != int(x):
                raise InvalidSignMatrix("entry", i, j, x)
            x = int(x)
            col[j - 1] += x
            acc += x
            if col[j - 1] not in (0, 1):
                raise InvalidSignMatrix("column partial sum", i, j, col[j - 1])
            if acc < 0:
                raise InvalidSignMatrix("row partial sum", i, j, acc)
            out.append(x)
        clean.append(tuple(out))
    return SignMatrix(len(clean), width, tuple(clean))


def is_sign_matrix(entries: Sequence[Sequence]) -> bool:
    try:
        validate(entries)
    except (InvalidSignMatrix, ValueError, TypeError):
        return False
    return True


def phi(M: SignMatrix) -> Tableau:
    """Sign matrix to tableau.

    Column ``m - i + 1`` of the tableau lists, increasingly, the ``j`` whose
    column partial sum through row ``i`` equals 1.
    """
    c = M.column_sums()
    columns = []
    for i in range(M.m, 0, -1):
        col = [j for j in range(1, M.n + 1) if c[i - 1][j - 1] == 1]
        if not col:
            break
        columns.append(col)
    height = len(columns[0]) if columns else 0
    rows = tuple(tuple(col[r] for col in columns if len(col) > r) for r in range(height))
    return Tableau(Partition(tuple(len(row) for row in rows)), rows, M.n)


def phi_inv(T: Tableau, m: int | None = None) -> SignMatrix:
    """Tableau to sign matrix with ``m`` rows (default: the tableau's width).

    Rows above the tableau's width come out as zero rows, which is the
    padded embedding.
    """
    width = T.shape.lambda1
    m = width if m is None else m
    if m < width:
        raise ValueError(f"tableau with {width} columns needs at least {width} rows, got m={m}")
    entries = []
    prev = [0] * T.n
    for i in range(1, m + 1):
        col_index = m - i + 1
        present = set(T.column(col_index)) if col_index <= width else set()
        cur = [1 if j in present else 0 for j in range(1, T.n + 1)]
        entries.append(tuple(a - b for a, b in zip(cur, prev)))
        prev = cur
    return SignMatrix(m, T.n, tuple(entries))


def _check_dims(rows: int, cols: int, tag: FamilyTag, what: str = "matrix"):
    if (rows, cols) != (tag.rows, tag.cols):
        raise ValueError(f"{what} is {rows}x{cols} but {tag} needs {tag.rows}x{tag.cols}")


def in_family(M: SignMatrix, tag: FamilyTag) -> bool:
    _check_dims(M.m, M.n, tag)
    if isinstance(tag, MN):
        return True
    if tag.row_totals != M.row_totals():
        return False
    if any(any(row) for row in M.entries[: tag.zero_rows]):
        return False
    if tag.column_totals is not None and tag.column_totals != M.column_totals():
        return False
    return True


def enumerate_family(tag: FamilyTag) -> list[SignMatrix]:
    """Every member of the family, once each, sorted by flattened entries.

    Backtracks cell by cell in row-major order, trying ``-1, 0, 1``, while
    keeping the column partial sums in {0, 1} and the row partial sums
    nonnegative; row and column totals are checked as soon as they are known.
    """
    m, n = tag.rows, tag.cols
    targets = tag.row_totals
    col_targets = tag.column_totals
    zero_rows = tag.zero_rows
    col = [0] * n
    grid = [[0] * n for _ in range(m)]
    found: list[SignMatrix] = []

    def cell(i: int, j: int, acc: int):
        if j == n:
            if targets is not None and acc != targets[i]:
                return
            row_done(i)
            return
        choices = (0,) if i < zero_rows else (-1, 0, 1)
        for x in choices:
            nc = col[j] + x
            if nc not in (0, 1) or acc + x < 0:
                continue
            if targets is not None:
                # the rest of the row can still move the total by at most this much
                rest = range(j + 1, n)
                hi = acc + x + sum(1 for jj in rest if col[jj] == 0)
                if hi < targets[i]:
                    continue
            if i == m - 1 and col_targets is not None and nc != col_targets[j]:
                continue
            col[j] = nc
            grid[i][j] = x
            cell(i, j + 1, acc + x)
            col[j] -= x
        grid[i][j] = 0

    def row_done(i: int):
        if i == m - 1:
            found.append(SignMatrix(m, n, tuple(tuple(row) for row in grid)))
        else:
            cell(i + 1, 0, 0)

    if m == 0:
        return [SignMatrix(0, n, ())]
    cell(0, 0, 0)
    return found


def enumerate_family_via_tableaux(tag: FamilyTag) -> list[SignMatrix]:
    """Second enumeration route: tableaux mapped through :func:`phi_inv`."""
    if isinstance(tag, MN):
        out = [
            phi_inv(T, tag.m)
            for p in partitions_in_box(tag.n, tag.m)
            for T in enumerate_ssyt(p, tag.n)
        ]
    elif isinstance(tag, ShapeFirstCol):
        out = [phi_inv(T) for T in enumerate_ssyt_first_column(tag.v, tag.shape, tag.n)]
    elif isinstance(tag, Padded):
        out = [phi_inv(T, tag.m) for T in enumerate_ssyt(tag.shape, tag.n)]
    else:
        out = [phi_inv(T) for T in enumerate_ssyt(tag.shape, tag.n)]
    if tag.rows == 0:
        out = [SignMatrix(0, tag.cols, ())] if out else []
    return sorted(out, key=sort_key)


def is_asm(M: SignMatrix) -> bool:
    """Alternating sign matrix test: a staircase-shape member whose row partial sums lie in {0, 1}."""
    if M.m != M.n:
        raise ValueError(f"alternating sign matrices are square, got {M.m}x{M.n}")
    staircase = Shape(Partition(tuple(range(M.n, 0, -1))), M.n)
    if not in_family(M, staircase):
        return False
    return all(s in (0, 1) for row in M.row_sums() for s in row)


def pad_embed(M: SignMatrix, m: int) -> SignMatrix:
    """Stack ``m - M.m`` zero rows on top of ``M``."""
    if m < M.m:
        raise ValueError(f"cannot pad a {M.m}-row matrix to {m} rows")
    zero = tuple(0 for _ in range(M.n))
    return SignMatrix(m, M.n, (zero,) * (m - M.m) + M.entries)


def all_integer_matrices(rows: int, cols: int):
    """Every ``rows x cols`` matrix over {-1, 0, 1}."""
    for flat in product((-1, 0, 1), repeat=rows * cols):
        yield tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))


def staircase(n: int) -> Partition:
    return Partition(tuple(range(n, 0, -1)))
