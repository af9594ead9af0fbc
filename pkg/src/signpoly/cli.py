"""Command-line entry point: ``signpoly <command> [family flags] ...``.

Every command prints one JSON document (or DOT text with ``--format dot``).
Exit status is 0 on success, 1 on a domain error (with a JSON error object)
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .certificates import certificate
from .checks import SUITES
from .faces import (
    component_json,
    face_lattice,
    facet_count,
    facet_equalities,
    facet_equalities_from_proof,
    verify_facets,
)
from .membership import decompose, membership
from .partial_sums import labeling_to_dot
from .sign_matrices import MN, Padded, Shape, ShapeFirstCol, enumerate_family, phi, phi_inv
from .tableaux import Partition

COMMANDS = ("enumerate", "map", "check", "decompose", "vertex-cert", "facets", "face-lattice", "verify")


class UsageError(Exception):
    pass


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def family_from_args(args, required: bool = True):
    if args.mn is not None:
        if args.shape is not None or args.first_col is not None or args.pad is not None:
            raise UsageError("--mn cannot be combined with --shape/--first-col/--pad")
        dims = _ints(args.mn, "--mn")
        if len(dims) != 2:
            raise UsageError("--mn takes M,N")
        return MN(*dims)
    if args.shape is not None:
        if args.n is None:
            raise UsageError("--shape needs --n")
        shape = Partition(_ints(args.shape, "--shape"))
        if args.first_col is not None and args.pad is not None:
            raise UsageError("--first-col and --pad are exclusive")
        if args.first_col is not None:
            return ShapeFirstCol(_ints(args.first_col, "--first-col"), shape, args.n)
        if args.pad is not None:
            return Padded(args.pad, shape, args.n)
        return Shape(shape, args.n)
    if args.first_col is not None or args.pad is not None or args.n is not None:
        raise UsageError("--first-col, --pad and --n need --shape")
    if required:
        raise UsageError("a family is required: --mn M,N or --shape P --n N")
    return None


def _read_input(args):
    if args.input is None:
        raise UsageError("--input FILE is required")
    with open(args.input) as fh:
        return json.load(fh)


def cmd_enumerate(args):
    tag = family_from_args(args)
    members = enumerate_family(tag)
    doc = {"family": ser.tag_to_json(tag), "count": len(members), "matrices": [ser.sign_matrix_to_json(M) for M in members]}
    if isinstance(tag, (Shape, ShapeFirstCol)):
        doc["tableaux"] = [ser.tableau_to_json(phi(M)) for M in members]
    return doc


def cmd_map(args):
    obj = _read_input(args)
    if "rows" in obj and "shape" in obj:
        T = ser.tableau_from_json(obj)
        M = phi_inv(T, args.pad)
        if args.format == "dot":
            return labeling_to_dot(M.entries)
        return {"tableau": ser.tableau_to_json(T), "matrix": ser.sign_matrix_to_json(M)}
    if args.format == "dot":
        return labeling_to_dot(ser.point_from_json(obj))
    M = ser.sign_matrix_from_json(obj if isinstance(obj, dict) else {"entries": obj})
    return {"matrix": ser.sign_matrix_to_json(M), "tableau": ser.tableau_to_json(phi(M))}


def cmd_check(args):
    tag = family_from_args(args)
    X = ser.point_from_json(_read_input(args))
    verdict = membership(X, tag)
    doc = {"family": ser.tag_to_json(tag), "member": verdict.member}
    if verdict.violation is not None:
        v = verdict.violation
        doc["violation"] = {"kind": v.kind, "i": v.i, "j": v.j, "value": ser.rational(v.value), "bound": ser.rational(v.bound)}
    return doc


def cmd_decompose(args):
    tag = family_from_args(args)
    X = ser.point_from_json(_read_input(args))
    stats: dict = {}
    combo = decompose(X, tag, stats)
    doc = ser.combination_to_json(combo)
    doc["family"] = ser.tag_to_json(tag)
    doc["meta"] = {
        "reconstructs": combo.point() == X,
        "total_weight": ser.rational(combo.total_weight()),
        "splits": stats["splits"],
        "widest_frontier": stats["widest"],
    }
    return doc


def cmd_vertex_cert(args):
    tag = family_from_args(args)
    members = enumerate_family(tag)
    targets = members
    if args.input is not None:
        targets = [ser.sign_matrix_from_json(_read_input(args))]
    out = []
    for M in targets:
        H = certificate(M, tag)
        out.append({"matrix": ser.sign_matrix_to_json(M), "hyperplane": ser.hyperplane_to_json(H), "separates": H.separates(M, members)})
    return {"family": ser.tag_to_json(tag), "certificates": out}


def cmd_facets(args):
    tag = family_from_args(args)
    equalities = facet_equalities_from_proof(tag) if args.source == "proof" else facet_equalities(tag)
    doc = {
        "family": ser.tag_to_json(tag),
        "count": facet_count(tag),
        "source": args.source,
        "equalities": [{"kind": e.kind, "i": e.i, "j": e.j, "text": str(e)} for e in equalities],
    }
    if args.verify:
        report = verify_facets(tag, equalities)
        doc["report"] = ser.facet_report_to_json(report)
        doc["computed_count"] = report.computed_facets
        doc["dimension"] = report.dimension
        doc["pass"] = report.passed
    return doc


def cmd_face_lattice(args):
    tag = family_from_args(args)
    L = face_lattice(tag, args.size_guard)
    if args.format == "dot":
        return L.to_dot()
    index = {M: t for t, M in enumerate(L.vertices)}
    return {
        "family": ser.tag_to_json(tag),
        "vertices": [ser.sign_matrix_to_json(M) for M in L.vertices],
        "elements": [
            dict(component_json(e), dimension=L.grade(e), atoms=sorted(index[M] for M in L.vertices_of(e)))
            for e in L.elements
        ],
        "covers": [list(c) for c in L.covers()],
    }


def cmd_verify(args):
    suite = SUITES[args.suite]
    kwargs = {}
    tag = family_from_args(args, required=False)
    if tag is not None:
        if args.suite not in ("vertices", "facets", "lattice"):
            raise UsageError(f"suite {args.suite!r} does not take a family")
        kwargs["tags"] = [tag]
    if args.suite in ("decomposition", "transport", "lattice-points"):
        kwargs["seed"] = args.seed
    result = suite(**kwargs)
    doc = result.as_json()
    return doc, (0 if result.passed else 1)


HANDLERS = {
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "check": cmd_check,
    "decompose": cmd_decompose,
    "vertex-cert": cmd_vertex_cert,
    "facets": cmd_facets,
    "face-lattice": cmd_face_lattice,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mn", metavar="M,N")
    common.add_argument("--shape", metavar="P1,P2,...")
    common.add_argument("--n", type=int)
    common.add_argument("--first-col", metavar="V1,V2,...")
    common.add_argument("--pad", type=int, metavar="M")
    common.add_argument("--input", metavar="FILE")
    common.add_argument("--output", metavar="FILE")
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--threads", type=int, default=1, help="accepted; work runs in one thread")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="signpoly", description="Sign matrix polytopes: enumeration, decomposition, facets, faces.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "facets":
            p.add_argument("--source", choices=("printed", "proof"), default="printed")
            p.add_argument("--verify", action="store_true")
        if name == "face-lattice":
            p.add_argument("--size-guard", type=int, default=10**6)
        if name == "verify":
            p.add_argument("suite", choices=sorted(SUITES))
    return parser


def _emit(doc, args, stdout):
    text = doc if isinstance(doc, str) else ser.dumps(doc)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        stderr.write("signpoly: --threads must be positive\n")
        return 2
    try:
        out = HANDLERS[args.command](args)
    except UsageError as exc:
        stderr.write(f"signpoly {args.command}: {exc}\n")
        return 2
    except (ValueError, ArithmeticError, RuntimeError, KeyError, OSError, json.JSONDecodeError) as exc:
        stdout.write(ser.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1
    code = 0
    if isinstance(out, tuple):
        out, code = out
    _emit(out, args, stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
