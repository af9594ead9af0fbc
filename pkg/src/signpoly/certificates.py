"""Separating hyperplanes that certify each sign matrix is a vertex of its polytope."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .partial_sums import as_matrix
from .sign_matrices import MN, FamilyTag, SignMatrix, enumerate_family, in_family


@dataclass(frozen=True)
class Hyperplane:
    """The affine functional ``<coeffs, X>`` together with a separation threshold."""

    coeffs: tuple[tuple[int, ...], ...]
    threshold: Fraction

    def evaluate(self, X: Sequence[Sequence]) -> Fraction:
        X = as_matrix(X.entries if isinstance(X, SignMatrix) else X)
        return sum((a * x for crow, xrow in zip(self.coeffs, X) for a, x in zip(crow, xrow)), Fraction(0))

    def separates(self, inside: SignMatrix, others) -> bool:
        """``inside`` strictly above the threshold, every other point strictly below."""
        if not self.evaluate(inside) > self.threshold:
            return False
        return all(self.evaluate(o) < self.threshold for o in others if o != inside)


def support(M: SignMatrix) -> set[tuple[int, int]]:
    """Cells ``(i, j)`` (1-based) whose column partial sum equals 1."""
    c = M.column_sums()
    return {(i + 1, j + 1) for i, row in enumerate(c) for j, x in enumerate(row) if x == 1}


def hyperplane_shape(M: SignMatrix, tag: FamilyTag | None = None) -> Hyperplane:
    """Sum of the column partial sums that equal 1 in ``M``, against ``|support| - 1/2``.

    The coefficient of ``X[i'][j]`` counts the support cells ``(i, j)`` with
    ``i >= i'``.
    """
    if tag is not None and not in_family(M, tag):
        raise ValueError(f"matrix is not a member of {tag}")
    C = support(M)
    coeffs = tuple(
        tuple(sum(1 for i in range(ip, M.m + 1) if (i, j) in C) for j in range(1, M.n + 1))
        for ip in range(1, M.m + 1)
    )
    return Hyperplane(coeffs, Fraction(len(C)) - Fraction(1, 2))


def hyperplane_mn(M: SignMatrix) -> Hyperplane:
    """Like :func:`hyperplane_shape`, but column partial sums that are 0 in ``M`` enter with sign -1."""
    C = support(M)
    coeffs = tuple(
        tuple(
            sum(1 if (i, j) in C else -1 for i in range(ip, M.m + 1))
            for j in range(1, M.n + 1)
        )
        for ip in range(1, M.m + 1)
    )
    return Hyperplane(coeffs, Fraction(len(C)) - Fraction(1, 2))


def certificate(M: SignMatrix, tag: FamilyTag) -> Hyperplane:
    """The hyperplane appropriate for the family: unsigned for fixed row totals, signed otherwise."""
    if not in_family(M, tag):
        raise ValueError(f"matrix is not a member of {tag}")
    return hyperplane_mn(M) if isinstance(tag, MN) else hyperplane_shape(M)


def verify_vertex(M: SignMatrix, tag: FamilyTag, members: list[SignMatrix] | None = None) -> bool:
    """Check the certificate of ``M`` against every member of the family."""
    H = certificate(M, tag)
    if members is None:
        members = enumerate_family(tag)
    return H.separates(M, members)
