"""Partitions, semistandard Young tableaux and their two closed-form counts.

The hook-content product uses the content convention ``c(u) = col - row``
for a box in row ``row`` and column ``col`` (both 1-based).  This is the
convention that reproduces brute-force enumeration; the transposed sign
convention overcounts for non-rectangular shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"partition parts must weakly decrease, got {parts}")

    @classmethod
    def of(cls, parts: "Partition | Sequence[int]") -> "Partition":
        return parts if isinstance(parts, Partition) else cls(tuple(parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def lambda1(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The 1-based part ``lambda_i``, taken as 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


@dataclass(frozen=True)
class Tableau:
    """A filling of ``shape`` with rows weakly increasing and columns strictly increasing."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        shape = Partition.of(self.shape)
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != shape.parts:
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not match shape {shape}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if not 1 <= x <= self.n:
                    raise ValueError(f"entry {x} at ({r + 1},{c + 1}) outside 1..{self.n}")
                if c and row[c - 1] > x:
                    raise ValueError(f"row {r + 1} is not weakly increasing")
                if r and rows[r - 1][c] >= x:
                    raise ValueError(f"column {c + 1} is not strictly increasing")

    def column(self, c: int) -> tuple[int, ...]:
        """Entries of the 1-based column ``c``, top to bottom."""
        return tuple(row[c - 1] for row in self.rows if len(row) >= c)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(c) for c in range(1, self.shape.lambda1 + 1)]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)


def conjugate(p: Partition | Sequence[int]) -> Partition:
    p = Partition.of(p)
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.lambda1 + 1)))


def frequency_rep(p: Partition | Sequence[int]) -> tuple[int, ...]:
    """``a`` with ``a[i-1]`` the number of parts equal to ``i``; length ``lambda1``."""
    p = Partition.of(p)
    a = [0] * p.lambda1
    for part in p.parts:
        a[part - 1] += 1
    return tuple(a)


def distinct_part_count(p: Partition | Sequence[int]) -> int:
    return len(set(Partition.of(p).parts))


def hook_content_count(p: Partition | Sequence[int], n: int) -> int:
    """Number of SSYT of shape ``p`` with entries at most ``n``.

    Raises ``ArithmeticError`` if the product is not an integer, which can only
    happen through a convention error in the content or hook definitions.
    """
    p = Partition.of(p)
    conj = conjugate(p)
    total = Fraction(1)
    for row, length in enumerate(p.parts, start=1):
        for col in range(1, length + 1):
            content = col - row
            hook = (length - col) + (conj.parts[col - 1] - row) + 1
            total *= Fraction(n + content, hook)
    if total.denominator != 1:
        raise ArithmeticError(f"hook-content product for {p}, n={n} is not integral: {total}")
    return int(total)


def gordon_count(m: int, n: int) -> int:
    """Number of SSYT with at most ``m`` columns and entries at most ``n``."""
    total = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            total *= Fraction(m + i + j - 1, i + j - 1)
    if total.denominator != 1:
        raise ArithmeticError(f"Gordon product for m={m}, n={n} is not integral: {total}")
    return int(total)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols`` (empty one first)."""

    def rec(prefix: tuple[int, ...], bound: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) == rows:
            return
        for part in range(1, bound + 1):
            yield from rec(prefix + (part,), part)

    for parts in rec((), cols):
        yield Partition(parts)


def _fill(shape: Partition, n: int, first_column: Sequence[int] | None = None) -> Iterator[Tableau]:
    cells = [(r, c) for r, length in enumerate(shape.parts) for c in range(length)]
    grid = [[0] * length for length in shape.parts]

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(shape, tuple(tuple(row) for row in grid), n)
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # rows below still need distinct larger entries in this column
        hi = n - sum(1 for part in shape.parts[r + 1:] if part > c)
        if first_column is not None and c == 0:
            lo = hi = first_column[r] if lo <= first_column[r] <= hi else 0
            if lo == 0:
                return
        for x in range(lo, hi + 1):
            grid[r][c] = x
            yield from rec(idx + 1)
        grid[r][c] = 0

    yield from rec(0)


def enumerate_ssyt(p: Partition | Sequence[int], n: int) -> list[Tableau]:
    """All SSYT of shape ``p`` with entries at most ``n``.

    Cells are filled in row-major order with the smallest admissible entry
    first, so the output is sorted lexicographically by reading word.
    """
    return list(_fill(Partition.of(p), n))


def check_first_column(v: Sequence[int], p: Partition, n: int) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if len(v) != p.k:
        raise ValueError(f"first column {v} must have length k={p.k}")
    if any(b <= a for a, b in zip(v, v[1:])):
        raise ValueError(f"first column {v} must be strictly increasing")
    if v and v[0] < 1:
        raise ValueError(f"first column {v} must have positive entries")
    return v


def enumerate_ssyt_first_column(v: Sequence[int], p: Partition | Sequence[int], n: int) -> list[Tableau]:
    """The tableaux of :func:`enumerate_ssyt` whose first column equals ``v``.

    Entries of ``v`` larger than ``n`` are allowed and simply give no tableaux.
    """
    p = Partition.of(p)
    v = check_first_column(v, p, n)
    if any(x > n for x in v):
        return []
    return list(_fill(p, n, v))
