"""Membership by inequality description, circuit splitting, and convex decomposition.

Every point and weight is an exact ``Fraction``; nothing here rounds.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .partial_sums import (
    Circuit,
    Matrix,
    as_matrix,
    circuit_direction_matrix,
    find_fractional_circuit,
    partial_sums,
)
from .sign_matrices import (
    MN,
    FamilyTag,
    Padded,
    Shape,
    ShapeFirstCol,
    SignMatrix,
    _check_dims,
    all_integer_matrices,
    sort_key,
    validate,
)
from .tableaux import Partition


@dataclass(frozen=True)
class Violation:
    """One failed constraint; ``kind`` names it, ``i``/``j`` are 1-based (``j`` or ``i`` may be None)."""

    kind: str
    i: int | None
    j: int | None
    value: Fraction
    bound: Fraction

    def __str__(self):
        where = ",".join(str(x) for x in (self.i, self.j) if x is not None)
        return f"{self.kind} at ({where}): {self.value} vs {self.bound}"


@dataclass(frozen=True)
class Verdict:
    member: bool
    violation: Violation | None = None

    def __bool__(self):
        return self.member


def membership(X: Sequence[Sequence], tag: FamilyTag) -> Verdict:
    """Test ``X`` against the inequality description of the family's polytope.

    Scan order: column partial-sum bounds by column then row, row partial-sum
    lower bounds by row then column, then the equalities (zero rows, row
    totals, column totals).
    """
    X = as_matrix(X)
    m = len(X)
    n = len(X[0]) if m else tag.cols
    _check_dims(m, n, tag)
    lab = partial_sums(X)
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            c = lab.c[i - 1][j - 1]
            if c < 0:
                return Verdict(False, Violation("column partial sum >= 0", i, j, c, Fraction(0)))
            if c > 1:
                return Verdict(False, Violation("column partial sum <= 1", i, j, c, Fraction(1)))
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            r = lab.r[i - 1][j - 1]
            if r < 0:
                return Verdict(False, Violation("row partial sum >= 0", i, j, r, Fraction(0)))
    for i in range(1, tag.zero_rows + 1):
        for j in range(1, n + 1):
            if X[i - 1][j - 1] != 0:
                return Verdict(False, Violation("zero row entry", i, j, X[i - 1][j - 1], Fraction(0)))
    if tag.row_totals is not None:
        for i, target in enumerate(tag.row_totals, start=1):
            total = lab.r[i - 1][n - 1] if n else Fraction(0)
            if total != target:
                return Verdict(False, Violation("row total", i, None, total, Fraction(target)))
    if tag.column_totals is not None:
        for j, target in enumerate(tag.column_totals, start=1):
            total = lab.c[m - 1][j - 1] if m else Fraction(0)
            if total != target:
                return Verdict(False, Violation("column total", None, j, total, Fraction(target)))
    return Verdict(True)


@dataclass(frozen=True)
class SplitResult:
    x_plus: Matrix
    ell_plus: Fraction
    x_minus: Matrix
    ell_minus: Fraction
    circuit: Circuit

    @property
    def weight_plus(self) -> Fraction:
        return self.ell_minus / (self.ell_plus + self.ell_minus)

    @property
    def weight_minus(self) -> Fraction:
        return self.ell_plus / (self.ell_plus + self.ell_minus)


def _cumulative(D):
    m = len(D)
    n = len(D[0]) if m else 0
    dr = [[0] * n for _ in range(m)]
    dc = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            dr[i][j] = D[i][j] + (dr[i][j - 1] if j else 0)
            dc[i][j] = D[i][j] + (dc[i - 1][j] if i else 0)
    return dr, dc


def step_length(X: Matrix, D) -> Fraction:
    """Largest ``t`` keeping ``X + t*D`` inside the column bounds and row lower bounds."""
    lab = partial_sums(X)
    dr, dc = _cumulative(D)
    bounds = []
    for i, row in enumerate(dc):
        for j, d in enumerate(row):
            c = lab.c[i][j]
            if d > 0:
                bounds.append((1 - c) / d)
            elif d < 0:
                bounds.append(c / -d)
    for i, row in enumerate(dr):
        for j, d in enumerate(row):
            if d < 0:
                bounds.append(lab.r[i][j] / -d)
    if not bounds:
        raise ValueError("direction leaves every constraint slack; the polytope would be unbounded")
    return min(bounds)


def split(X: Sequence[Sequence], tag: FamilyTag) -> SplitResult:
    """One splitting step along a fractional circuit.

    The corners of the circuit get ``+t, -t, +t, ...`` in traversal order.
    ``X+`` moves by ``ell_plus`` in that direction and ``X-`` by ``ell_minus``
    in the opposite one, each as far as the inequalities allow, so that
    ``X = w+ X+ + w- X-`` with ``w+ = ell_minus / (ell_plus + ell_minus)``.
    """
    X = as_matrix(X)
    verdict = membership(X, tag)
    if not verdict:
        raise ValueError(f"point is not in the polytope of {tag}: {verdict.violation}")
    circuit = find_fractional_circuit(X, row_sums_fixed=not isinstance(tag, MN))
    m, n = tag.rows, tag.cols
    D = circuit_direction_matrix(circuit, m, n)
    neg = tuple(tuple(-d for d in row) for row in D)
    ell_plus = step_length(X, D)
    ell_minus = step_length(X, neg)
    x_plus = tuple(tuple(x + ell_plus * d for x, d in zip(xr, dr)) for xr, dr in zip(X, D))
    x_minus = tuple(tuple(x - ell_minus * d for x, d in zip(xr, dr)) for xr, dr in zip(X, D))
    return SplitResult(x_plus, ell_plus, x_minus, ell_minus, circuit)


@dataclass(frozen=True)
class ConvexCombination:
    terms: tuple[tuple[Fraction, SignMatrix], ...]

    def total_weight(self) -> Fraction:
        return sum((w for w, _ in self.terms), Fraction(0))

    def point(self) -> Matrix:
        if not self.terms:
            raise ValueError("empty combination")
        M0 = self.terms[0][1]
        acc = [[Fraction(0)] * M0.n for _ in range(M0.m)]
        for w, M in self.terms:
            for i, row in enumerate(M.entries):
                for j, x in enumerate(row):
                    acc[i][j] += w * x
        return tuple(tuple(row) for row in acc)

    def __len__(self):
        return len(self.terms)


def _is_integral_matrix(X: Matrix) -> bool:
    return all(x.denominator == 1 for row in X for x in row)


def decompose(X: Sequence[Sequence], tag: FamilyTag, stats: dict | None = None) -> ConvexCombination:
    """Write ``X`` as a convex combination of family members by repeated splitting.

    Pending points are processed in order of how many of their partial sums
    are already integral, and identical pending points are merged, so shared
    descendants are split only once.  Splits performed, the largest count of
    pending points, and whether every split strictly increased the number of
    integral partial sums are recorded in ``stats`` when given.
    """
    X = as_matrix(X)
    verdict = membership(X, tag)
    if not verdict:
        raise ValueError(f"point is not in the polytope of {tag}: {verdict.violation}")
    weights: dict[Matrix, Fraction] = {X: Fraction(1)}
    heap = [(partial_sums(X).integral_count(), X)]
    result: dict[SignMatrix, Fraction] = {}
    splits = 0
    widest = 1
    monotone = True
    while heap:
        count, Y = heapq.heappop(heap)
        w = weights.pop(Y)
        if _is_integral_matrix(Y):
            M = validate(Y, tag.cols)
            result[M] = result.get(M, Fraction(0)) + w
            continue
        res = split(Y, tag)
        splits += 1
        for child, cw in ((res.x_plus, res.weight_plus), (res.x_minus, res.weight_minus)):
            child_count = partial_sums(child).integral_count()
            monotone = monotone and child_count > count
            if child in weights:
                weights[child] += w * cw
            else:
                weights[child] = w * cw
                heapq.heappush(heap, (child_count, child))
        widest = max(widest, len(weights))
    if stats is not None:
        stats.update(splits=splits, widest=widest, terms=len(result), monotone=monotone)
    terms = tuple(sorted(((w, M) for M, w in result.items()), key=lambda t: sort_key(t[1])))
    return ConvexCombination(terms)


@dataclass(frozen=True)
class TransportationSpec:
    y: tuple[Fraction, ...]
    z: tuple[Fraction, ...]

    def contains(self, X: Sequence[Sequence]) -> bool:
        """Nonnegative with row margins ``y`` and column margins ``z``."""
        X = as_matrix(X)
        if len(X) != len(self.y) or any(len(row) != len(self.z) for row in X):
            return False
        if any(x < 0 for row in X for x in row):
            return False
        if any(sum(row, Fraction(0)) != yi for row, yi in zip(X, self.y)):
            return False
        return all(sum((row[j] for row in X), Fraction(0)) == zj for j, zj in enumerate(self.z))


def transportation_spec(v: Sequence[int], shape: Partition | Sequence[int], n: int) -> TransportationSpec:
    tag = ShapeFirstCol(tuple(v), Partition.of(shape), n)
    y = tuple(Fraction(t) for t in tag.row_totals)
    z = tuple(Fraction(t) for t in tag.column_totals)
    assert sum(y) == sum(z) == tag.shape.k
    return TransportationSpec(y, z)


def nonneg_equivalence_check(X: Sequence[Sequence], v, shape, n: int) -> bool:
    """Whether membership in the first-column polytope agrees with the transportation polytope."""
    X = as_matrix(X)
    if any(x < 0 for row in X for x in row):
        raise ValueError("nonneg_equivalence_check expects an entrywise nonnegative matrix")
    tag = ShapeFirstCol(tuple(v), Partition.of(shape), n)
    return bool(membership(X, tag)) == transportation_spec(v, shape, n).contains(X)


def integer_points(tag: FamilyTag) -> list[SignMatrix]:
    """Lattice points of the family polytope, found by brute force.

    Column partial sums in [0, 1] force every entry ``c_ij - c_(i-1)j`` into
    [-1, 1], so scanning {-1, 0, 1}-matrices covers every lattice point.
    """
    out = []
    for Y in all_integer_matrices(tag.rows, tag.cols):
        if membership(Y, tag):
            out.append(SignMatrix(tag.rows, tag.cols, Y))
    return sorted(out, key=sort_key)


def family_tag_for(shape, n: int, v=None, m: int | None = None) -> FamilyTag:
    """Convenience constructor mirroring the command-line flags."""
    shape = Partition.of(shape)
    if v is not None:
        return ShapeFirstCol(tuple(v), shape, n)
    if m is not None and m != shape.lambda1:
        return Padded(m, shape, n)
    return Shape(shape, n)

