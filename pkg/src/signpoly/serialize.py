"""JSON encodings for the library's value types.

Rationals are always exact strings (``"3/10"``, ``"1"``); integers that are
structurally integers (matrix entries of a sign matrix, indices) stay numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .certificates import Hyperplane
from .faces import Component, FacetReport, component_json
from .membership import ConvexCombination
from .partial_sums import Circuit, as_matrix
from .sign_matrices import MN, FamilyTag, Padded, Shape, ShapeFirstCol, SignMatrix, validate
from .tableaux import Partition, Tableau


def rational(x) -> str:
    return str(Fraction(x))


def matrix_to_json(X) -> list[list[str]]:
    return [[rational(x) for x in row] for row in X]


def sign_matrix_to_json(M: SignMatrix) -> dict:
    return {"m": M.m, "n": M.n, "entries": [list(row) for row in M.entries]}


def sign_matrix_from_json(obj: dict) -> SignMatrix:
    M = validate(obj["entries"], obj.get("n"))
    if "m" in obj and obj["m"] != M.m:
        raise ValueError(f"declared m={obj['m']} but entries have {M.m} rows")
    return M


def point_from_json(obj: Any):
    """A rational matrix from a bare nested list, ``{"entries": ...}`` or ``{"matrix": ...}``."""
    if isinstance(obj, dict):
        obj = obj.get("entries", obj.get("matrix"))
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ValueError("expected a non-empty list of rows")
    if len({len(r) for r in obj}) != 1:
        raise ValueError("rows have different lengths")
    return as_matrix(obj)


def tag_to_json(tag: FamilyTag) -> dict:
    if isinstance(tag, MN):
        return {"variant": "mn", "m": tag.m, "n": tag.n}
    if isinstance(tag, Shape):
        return {"variant": "shape", "shape": list(tag.shape.parts), "n": tag.n}
    if isinstance(tag, ShapeFirstCol):
        return {"variant": "shape_v", "v": list(tag.v), "shape": list(tag.shape.parts), "n": tag.n}
    return {"variant": "padded", "m": tag.m, "shape": list(tag.shape.parts), "n": tag.n}


def tag_from_json(obj: dict) -> FamilyTag:
    variant = obj.get("variant")
    if variant == "mn":
        return MN(obj["m"], obj["n"])
    if variant == "shape":
        return Shape(Partition.of(obj["shape"]), obj["n"])
    if variant == "shape_v":
        return ShapeFirstCol(tuple(obj["v"]), Partition.of(obj["shape"]), obj["n"])
    if variant == "padded":
        return Padded(obj["m"], Partition.of(obj["shape"]), obj["n"])
    raise ValueError(f"unknown family variant {variant!r}")


def tableau_to_json(T: Tableau) -> dict:
    return {"shape": list(T.shape.parts), "rows": [list(r) for r in T.rows], "n": T.n}


def tableau_from_json(obj: dict) -> Tableau:
    return Tableau(Partition.of(obj["shape"]), tuple(tuple(r) for r in obj["rows"]), obj["n"])


def circuit_to_json(C: Circuit) -> dict:
    return {"kind": C.kind, "corners": [list(c) for c in C.corners]}


def combination_to_json(combo: ConvexCombination) -> dict:
    return {
        "terms": [{"weight": rational(w), "matrix": sign_matrix_to_json(M)} for w, M in combo.terms]
    }


def combination_from_json(obj: dict) -> ConvexCombination:
    return ConvexCombination(
        tuple((Fraction(t["weight"]), sign_matrix_from_json(t["matrix"])) for t in obj["terms"])
    )


def hyperplane_to_json(H: Hyperplane) -> dict:
    return {"coeffs": [list(r) for r in H.coeffs], "threshold": rational(H.threshold)}


def component_to_json(delta: Component) -> dict:
    return component_json(delta)


def facet_report_to_json(report: FacetReport) -> list[dict]:
    return report.as_json()


def dumps(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
