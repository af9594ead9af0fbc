"""Exact rank of rational vectors by fraction-free elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _integer_row(vec: Sequence) -> list[int]:
    fracs = [Fraction(x) for x in vec]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * scale) for f in fracs]


def rational_rank(vectors: Sequence[Sequence]) -> int:
    """Rank of the given rational vectors (all of one length).

    Rows are scaled to integers and reduced with integer-only row operations;
    each row is divided by its content after every step, which keeps entries
    small without ever introducing fractions.
    """
    rows = [_integer_row(v) for v in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("vectors must all have the same length")
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            a = rows[r][col]
            if a:
                row = [p[col] * x - a * y for x, y in zip(rows[r], p)]
                g = gcd(*row)
                rows[r] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == len(rows):
            break
    return rank


def affine_dimension(points: Sequence[Sequence[Sequence]]) -> int:
    """Affine dimension of a set of matrices (flattened); -1 for the empty set."""
    flat = [[x for row in P for x in row] for P in points]
    if not flat:
        return -1
    base = flat[0]
    return rational_rank([[Fraction(x) - Fraction(b) for x, b in zip(p, base)] for p in flat[1:]])
