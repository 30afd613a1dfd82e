"""Command-line front end: object definition files in, relation listings,
criterion verdicts and reports out.

Objects are JSON documents with rationals written as strings ("5/9") so
round-trips stay exact.  Exit codes: 0 all checks passed, 1 checks ran and
failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bialgebra import (
    WrongShape,
    coassociativity_check,
    composable_triple,
    comultiplication_check,
    counit_check,
    determinant_2x2,
    determinant_multiplicativity,
)
from .homs import (
    ComponentCountMismatch,
    derive_relations_general,
    derive_relations_sudbery,
    spans_equal,
)
from .linalg import NotComplementary
from .pbw import TooLarge, pbw_criterion, pbw_extract_constant
from .rewrite import build_rewrite_system, confluence_check, failed_overlaps, format_poly
from .rmatrix import normalized_B, yang_baxter_check
from .graded import space_of
from .spaces import (
    BadParameters,
    QuantumObject,
    make_classical,
    make_general,
    make_normalized,
    make_sudbery,
)

FORMAT = "quantum-object/1"


class ObjectSpecError(Exception):
    """Input file does not describe a valid object; message carries the
    offending field path and the violated condition."""


def _rat(value, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ObjectSpecError(f"{path}: expected a rational string, got {value!r}")
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ObjectSpecError(f"{path}: not a rational: {value!r} ({exc})") from exc


def _rat_matrix(value, path: str, n: int):
    if not isinstance(value, list) or len(value) != n:
        raise ObjectSpecError(f"{path}: expected {n} rows")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != n:
            raise ObjectSpecError(f"{path}[{i}]: expected {n} entries")
        out.append(tuple(_rat(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(out)


def load_object(path: str) -> QuantumObject:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ObjectSpecError(f"{path}: cannot read: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ObjectSpecError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ObjectSpecError(f"{path}: document must be an object")
    if doc.get("format") != FORMAT:
        raise ObjectSpecError(f'{path}: format: must be "{FORMAT}"')
    name = doc.get("name", "")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ObjectSpecError(f"{path}: dim: must be a positive integer")
    parities = doc.get("parities", [0] * dim)
    if (
        not isinstance(parities, list)
        or len(parities) != dim
        or any(p not in (0, 1) for p in parities)
    ):
        raise ObjectSpecError(f"{path}: parities: must be {dim} bits")
    space = space_of(parities)
    kind = doc.get("kind")
    params = doc.get("params", {})
    try:
        if kind == "classical":
            return make_classical(space, name)
        if kind == "sudbery":
            q = _rat_matrix(params.get("q"), "params.q", dim)
            p = _rat_matrix(params.get("p"), "params.p", dim)
            return make_sudbery(space, q, p, name)
        if kind == "normalized":
            q = _rat_matrix(params.get("q"), "params.q", dim)
            eps = params.get("eps")
            if eps not in (1, -1):
                raise ObjectSpecError(f"{path}: params.eps: must be 1 or -1")
            lam = _rat(params.get("lam"), "params.lam")
            return make_normalized(space, q, eps, lam, name)
        if kind == "general":
            comps = params.get("components")
            if not isinstance(comps, list) or len(comps) < 2:
                raise ObjectSpecError(
                    f"{path}: params.components: need at least two component spans"
                )
            parsed = []
            for k, comp in enumerate(comps):
                vecs = []
                for i, vec in enumerate(comp):
                    if not isinstance(vec, list) or len(vec) != dim * dim:
                        raise ObjectSpecError(
                            f"{path}: params.components[{k}][{i}]: expected {dim*dim} coordinates"
                        )
                    vecs.append(
                        tuple(
                            _rat(x, f"params.components[{k}][{i}][{j}]")
                            for j, x in enumerate(vec)
                        )
                    )
                parsed.append(tuple(vecs))
            return make_general(space, parsed, name)
    except BadParameters as exc:
        raise ObjectSpecError(f"{path}: parameter condition violated: {exc}") from exc
    except NotComplementary as exc:
        raise ObjectSpecError(
            f"{path}: complementarity violated (components must span the tensor square): {exc}"
        ) from exc
    raise ObjectSpecError(
        f"{path}: kind: must be classical, sudbery, normalized or general"
    )


def object_to_json(obj: QuantumObject) -> dict:
    doc: dict = {
        "format": FORMAT,
        "name": obj.name,
        "dim": obj.space.dim,
        "parities": list(obj.space.parities),
        "kind": obj.kind,
    }
    if obj.kind in ("sudbery", "classical") and obj.qp is not None:
        q, p = obj.qp
        doc["params"] = {
            "q": [[str(x) for x in row] for row in q],
            "p": [[str(x) for x in row] for row in p],
        }
    elif obj.kind == "normalized" and obj.normalized is not None:
        q, eps, lam = obj.normalized
        doc["params"] = {
            "q": [[str(x) for x in row] for row in q],
            "eps": eps,
            "lam": str(lam),
        }
    else:
        doc["params"] = {
            "components": [
                [[str(x) for x in vec] for vec in comp] for comp in obj.components
            ]
        }
    return doc


def _poly_json(poly) -> list:
    return [
        {"word": list(word), "coeff": str(coeff)}
        for word, coeff in poly.sorted_terms()
    ]


def _relations_json(rels) -> list:
    return [{"terms": _poly_json(p)} for p in rels.polys]


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _parity_signature(space) -> str:
    return f"({space.even_count}|{space.odd_count})"


def cmd_object(args) -> int:
    obj = load_object(args.file)
    dims = obj.component_dims()
    if args.json:
        _emit(
            {
                "object": object_to_json(obj),
                "component_dims": list(dims),
                "parity_signature": _parity_signature(obj.space),
                "valid": True,
            }
        )
        return 0
    print(f"object {obj.name or args.file}: kind={obj.kind} dim={obj.space.dim} "
          f"parity {_parity_signature(obj.space)}")
    if obj.s == 2:
        print(f"dim I={dims[0]}, dim J={dims[1]}")
    else:
        print("component dims: " + " ".join(str(d) for d in dims))
    print("valid: yes")
    return 0


def cmd_hom(args) -> int:
    src = load_object(args.source)
    tgt = load_object(args.target)
    report: dict = {}
    failures = 0
    rels_by_form = {}
    forms = ["general", "sudbery"] if args.form == "both" else [args.form]
    for form in forms:
        if form == "general":
            rels_by_form[form] = derive_relations_general(src, tgt)
        else:
            if src.qp is None or tgt.qp is None:
                raise ObjectSpecError(
                    "sudbery form needs two-parameter objects on both sides"
                )
            rels_by_form[form] = derive_relations_sudbery(src, tgt)
    if args.form == "both":
        equal = spans_equal(rels_by_form["general"], rels_by_form["sudbery"])
        report["spans_equal"] = equal
        if not equal:
            failures += 1
    primary = rels_by_form[forms[0]]
    report["relations"] = _relations_json(primary)
    report["span_dim"] = primary.span_dim
    if args.json:
        _emit(report)
    else:
        print(f"relations ({forms[0]}): {len(primary.polys)}, span dim {primary.span_dim}")
        for p in primary.polys:
            print(f"  {format_poly(p)} = 0")
        if args.form == "both":
            print(f"general and closed-form spans equal: {'yes' if report['spans_equal'] else 'NO'}")
    return 1 if failures else 0


def cmd_pbw(args) -> int:
    src = load_object(args.source)
    tgt = load_object(args.target)
    degree = args.degree if args.oracle else None
    verdict = pbw_criterion(src, tgt, oracle_degree=degree)
    rels = derive_relations_general(src, tgt)
    system = build_rewrite_system(rels)
    overlaps = confluence_check(system)
    failed = failed_overlaps(overlaps)
    doc = {
        "criterion_holds": verdict.criterion_holds,
        "constant_source": None if verdict.constant_source is None else str(verdict.constant_source),
        "constant_target": None if verdict.constant_target is None else str(verdict.constant_target),
        "ordering_source": None if verdict.ordering_source is None else list(verdict.ordering_source),
        "ordering_target": None if verdict.ordering_target is None else list(verdict.ordering_target),
        "rewrite_complete": system.complete,
        "overlaps": len(overlaps),
        "overlaps_failed": len(failed),
        "oracle": [
            {"degree": d, "dim": dim, "classical": cl}
            for d, dim, cl in verdict.oracle_dims
        ],
    }
    if args.json:
        _emit(doc)
    else:
        print(f"PBW: {'YES' if verdict.criterion_holds else 'NO'}")
        if verdict.constant_source is not None:
            print(f"constant source: {verdict.constant_source} "
                  f"(ordering {' '.join(map(str, verdict.ordering_source))})")
        else:
            print("constant source: none (no consistent ratio constant)")
        if verdict.constant_target is not None:
            print(f"constant target: {verdict.constant_target} "
                  f"(ordering {' '.join(map(str, verdict.ordering_target))})")
        else:
            print("constant target: none (no consistent ratio constant)")
        print(f"confluence: {len(overlaps)} overlaps, {len(failed)} failed")
        for d, dim, cl in verdict.oracle_dims:
            print(f"oracle degree {d}: dim {dim} classical {cl}")
    return 0 if verdict.criterion_holds else 1


def cmd_yb(args) -> int:
    obj = load_object(args.file)
    if obj.qp is None and args.lam is None:
        raise ObjectSpecError("yb needs a two-parameter object or an explicit --lam")
    candidates = []
    if args.lam is not None:
        candidates.append(Fraction(args.lam))
    else:
        extraction = pbw_extract_constant(obj)
        if extraction is not None:
            c = extraction.constant
            candidates = [c] if c == 1 else [c, 1 / c]
        else:
            q, p = obj.qp
            n = obj.space.dim
            seen = set()
            for a in range(n):
                for b in range(n):
                    if a != b:
                        r = p[a][b] / q[a][b]
                        seen.update({r, 1 / r})
            candidates = sorted(seen)
    results = []
    for lam in candidates:
        ok = yang_baxter_check(normalized_B(obj, lam))
        results.append((lam, ok))
    doc = {"checks": [{"lam": str(lam), "passes": ok} for lam, ok in results]}
    if args.json:
        _emit(doc)
    else:
        for lam, ok in results:
            print(f"braid relation with P1 - ({lam}) P2: {'pass' if ok else 'FAIL'}")
    return 0 if all(ok for _, ok in results) else 1


def cmd_bialgebra(args) -> int:
    objs = [load_object(f) for f in args.files]
    checks = []
    for i in range(len(objs) - 2):
        triple = composable_triple(objs[i], objs[i + 1], objs[i + 2])
        checks.append((f"comultiplication({i},{i+1},{i+2})", comultiplication_check(triple)))
    if len(objs) >= 4:
        for i in range(len(objs) - 3):
            ok = coassociativity_check(objs[i], objs[i + 1], objs[i + 2], objs[i + 3])
            checks.append((f"coassociativity({i},{i+1},{i+2},{i+3})", ok))
    else:
        ok = coassociativity_check(objs[0], objs[1], objs[2], objs[2])
        checks.append(("coassociativity(0,1,2,2)", ok))
    for i, obj in enumerate(objs):
        checks.append((f"counit({i})", counit_check(obj)))
    if args.json:
        _emit({"checks": [{"name": n, "passes": ok} for n, ok in checks]})
    else:
        for n, ok in checks:
            print(f"{n}: {'pass' if ok else 'FAIL'}")
    return 0 if all(ok for _, ok in checks) else 1


def cmd_det(args) -> int:
    objs = [load_object(f) for f in args.files]
    checks = []
    dets = []
    for i in range(len(objs) - 1):
        det = determinant_2x2(objs[i], objs[i + 1])
        dets.append((f"det({i},{i+1})", det))
    mults = []
    for i in range(len(objs) - 2):
        triple = composable_triple(objs[i], objs[i + 1], objs[i + 2])
        mults.append(
            (f"multiplicative({i},{i+1},{i+2})", determinant_multiplicativity(triple))
        )
    if args.json:
        _emit(
            {
                "determinants": [
                    {"name": n, "terms": _poly_json(d)} for n, d in dets
                ],
                "multiplicativity": [{"name": n, "passes": ok} for n, ok in mults],
            }
        )
    else:
        for n, d in dets:
            print(f"{n} = {format_poly(d)}")
        for n, ok in mults:
            print(f"{n}: {'yes' if ok else 'NO'}")
    return 0 if all(ok for _, ok in mults) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlincat",
        description="Exact checks for quantum linear superspaces and their matrix algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("object", help="validate and describe an object file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_object)

    p = sub.add_parser("hom", help="derive the relations between two objects")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--form", choices=["general", "sudbery", "both"], default="general")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("pbw", help="classical-dimension criterion and confluence")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--oracle", action="store_true",
                   help="also compute exact dimensions up to --degree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pbw)

    p = sub.add_parser("yb", help="braid-relation check for the normalized projector combination")
    p.add_argument("file")
    p.add_argument("--lam", help="explicit coefficient (rational string)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_yb)

    p = sub.add_parser("bialgebra", help="coalgebra axioms along a chain of objects")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bialgebra)

    p = sub.add_parser("det", help="2x2 determinants and multiplicativity along a chain")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_det)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bialgebra" and len(args.files) < 3:
        print("bialgebra needs at least three object files", file=sys.stderr)
        return 2
    if args.command == "det" and len(args.files) < 2:
        print("det needs at least two object files", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ObjectSpecError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (BadParameters, NotComplementary, ComponentCountMismatch, WrongShape) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
