"""Command-line interface: check, construct, analyze, roundtrip, forms.

All reports are canonical JSON (sorted keys, fixed indentation), so two
runs on the same input produce identical bytes.  Exit codes: 0 = clean,
1 = mathematical violation found, 2 = input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Tuple

from .documents import (
    AlgebraDocument,
    DocumentError,
    algebra_document_to_json,
    construct_from_json,
    dumps_canonical,
    loads_document,
    matrix_to_json,
    vector_to_json,
)
from .exactla import Subspace, unit_vector
from .liealg import (
    center,
    check_jacobi,
    derived_subalgebra,
    is_nilpotent,
    is_solvable,
)
from .quadform import check_invariant_metric, invariant_symmetric_forms
from .structure import (
    DecomposableVerdict,
    ExtendedHeisenbergVerdict,
    HeisenbergIdealData,
    complement_from_quotient_metric,
    find_heisenberg_ideal,
    has_invariant_quotient_metric,
    nilradical,
    radical,
    recognize_extended_heisenberg,
    recover_structure,
    verify_nilradical_theorem,
)

EXIT_CLEAN = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _subspace_to_json(S: Subspace) -> dict:
    return {"dim": S.dim, "basis": [vector_to_json(v) for v in S.vectors()]}


def _heisenberg_to_json(h: HeisenbergIdealData) -> dict:
    return {
        "m": h.m,
        "hbar": vector_to_json(h.hbar),
        "v_basis": [vector_to_json(v) for v in h.v_basis],
        "omega": matrix_to_json(h.omega),
    }


def cmd_check(doc: AlgebraDocument) -> Tuple[dict, int]:
    """Jacobi and metric checks plus basic structure flags."""
    g = doc.algebra
    jacobi = check_jacobi(g)
    report = {
        "name": doc.name,
        "dim": g.dim,
        "jacobi_violations": [
            {"i": v.i, "j": v.j, "k": v.k, "residual": vector_to_json(v.residual)}
            for v in jacobi
        ],
        "center_dim": center(g).dim,
        "derived_dim": derived_subalgebra(g).dim,
        "solvable": is_solvable(g),
        "nilpotent": is_nilpotent(g),
    }
    clean = not jacobi
    if doc.metric is not None:
        metric_violations = check_invariant_metric(g, doc.metric)
        report["metric_violations"] = [
            {"kind": v.kind, "indices": list(v.indices)} for v in metric_violations
        ]
        clean = clean and not metric_violations
    return report, EXIT_CLEAN if clean else EXIT_VIOLATION


def cmd_construct(data) -> Tuple[AlgebraDocument, int]:
    """Run a construction document; precondition failures become input errors."""
    doc = construct_from_json(data)
    return doc, EXIT_CLEAN


def _candidate_from_indices(doc: AlgebraDocument, indices: List[int]) -> Subspace:
    g = doc.algebra
    for i in indices:
        if not 0 <= i < g.dim:
            raise DocumentError(f"ideal index {i} out of range", "ideal")
    return Subspace.from_vectors(g.dim, [unit_vector(g.dim, i) for i in indices])


def cmd_analyze(
    doc: AlgebraDocument, ideal: Optional[List[int]] = None, seed: int = 0
) -> Tuple[dict, int]:
    """Full structure report on a quadratic algebra document."""
    g = doc.algebra
    if doc.metric is None:
        raise DocumentError("analyze requires a metric", "metric")
    jacobi = check_jacobi(g)
    metric_violations = check_invariant_metric(g, doc.metric)
    if jacobi or metric_violations:
        report = {
            "name": doc.name,
            "dim": g.dim,
            "jacobi_violations": len(jacobi),
            "metric_violations": [
                {"kind": v.kind, "indices": list(v.indices)}
                for v in metric_violations
            ],
        }
        return report, EXIT_VIOLATION
    q = doc.quadratic()

    rad = radical(g)
    nil = nilradical(g)
    report = {
        "name": doc.name,
        "dim": g.dim,
        "radical": _subspace_to_json(rad),
        "nilradical": _subspace_to_json(nil),
    }

    if ideal is not None:
        source = "given"
        h = find_heisenberg_ideal(g, _candidate_from_indices(doc, ideal))
    else:
        source = "nilradical"
        h = find_heisenberg_ideal(g, nil)
        if h is None:
            source = "derived"
            h = find_heisenberg_ideal(g, derived_subalgebra(g))
    if h is None:
        report["heisenberg_ideal"] = {"found": False, "source": source}
    else:
        data = _heisenberg_to_json(h)
        data.update({"found": True, "source": source})
        report["heisenberg_ideal"] = data

    verdict = recognize_extended_heisenberg(q)
    if isinstance(verdict, ExtendedHeisenbergVerdict):
        report["recognizer"] = {
            "verdict": "extended_heisenberg",
            "m": verdict.recovered.heis.m,
            "base_change": matrix_to_json(verdict.base_change),
            "phi": matrix_to_json(verdict.recovered.sigmaD.matrix),
        }
    elif isinstance(verdict, DecomposableVerdict):
        report["recognizer"] = {
            "verdict": "decomposable",
            "ideal": _subspace_to_json(verdict.ideal),
            "factor_dims": [f.dim for f in verdict.factors],
        }
    else:
        report["recognizer"] = {
            "verdict": "not_applicable",
            "reason": verdict.reason,
        }

    if h is not None:
        rec = recover_structure(q, h)
        report["recovery"] = {
            "s_dim": rec.s_basis.dim,
            "d": vector_to_json(rec.d),
            "sigmaD": matrix_to_json(rec.sigmaD.matrix),
            "D": matrix_to_json(rec.D.matrix),
            "base_change": matrix_to_json(rec.base_change),
            "round_trip_exact": True,
        }
        quotient_form = has_invariant_quotient_metric(q, h, seed=seed)
        if quotient_form is None:
            report["quotient_metric"] = {"exists": False}
            report["complement"] = {"exists": False}
        else:
            report["quotient_metric"] = {
                "exists": True,
                "gram": matrix_to_json(quotient_form.gram),
            }
            witness = complement_from_quotient_metric(q, h, quotient_form)
            report["complement"] = {
                "exists": True,
                "basis": [vector_to_json(v) for v in witness.complement.vectors()],
                "c": vector_to_json(witness.c),
            }

    theorem = verify_nilradical_theorem(q)
    report["nilradical_theorem"] = {
        "applicable": theorem.applicable,
        "clauses": {name: ok for name, ok in theorem.clauses},
        "whole_algebra": theorem.whole_algebra,
        "passed": theorem.passed,
    }
    return report, EXIT_CLEAN


def cmd_roundtrip(doc: AlgebraDocument, ideal: List[int]) -> Tuple[dict, int]:
    """Recover the structure over the given ideal and rebuild exactly."""
    if doc.metric is None:
        raise DocumentError("roundtrip requires a metric", "metric")
    jacobi = check_jacobi(doc.algebra)
    metric_violations = check_invariant_metric(doc.algebra, doc.metric)
    if jacobi or metric_violations:
        report = {
            "name": doc.name,
            "jacobi_violations": len(jacobi),
            "metric_violations": [
                {"kind": v.kind, "indices": list(v.indices)}
                for v in metric_violations
            ],
        }
        return report, EXIT_VIOLATION
    q = doc.quadratic()
    candidate = _candidate_from_indices(doc, ideal)
    h = find_heisenberg_ideal(doc.algebra, candidate)
    if h is None:
        raise DocumentError(
            "the given indices do not span a Heisenberg ideal", "ideal"
        )
    rec = recover_structure(q, h)
    core_doc = AlgebraDocument(
        f"{doc.name}.core", rec.core.algebra, rec.core.metric
    )
    report = {
        "name": doc.name,
        "equal": True,  # recover_structure verifies the rebuild exactly
        "m": h.m,
        "s_dim": rec.s_basis.dim,
        "base_change": matrix_to_json(rec.base_change),
        "core": algebra_document_to_json(core_doc),
        "D": matrix_to_json(rec.D.matrix),
        "sigmaD": matrix_to_json(rec.sigmaD.matrix),
        "omega": matrix_to_json(rec.heis.omega),
    }
    return report, EXIT_CLEAN


def cmd_forms(doc: AlgebraDocument) -> Tuple[dict, int]:
    """Basis of the invariant symmetric bilinear forms of the algebra."""
    forms = invariant_symmetric_forms(doc.algebra)
    report = {
        "name": doc.name,
        "dim": doc.algebra.dim,
        "count": len(forms),
        "forms": [matrix_to_json(f.gram) for f in forms],
    }
    return report, EXIT_CLEAN


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_ideal(arg: Optional[str]) -> Optional[List[int]]:
    if arg is None:
        return None
    try:
        return [int(part) for part in arg.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise DocumentError(f"bad ideal index list: {arg!r}", "ideal") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadlie",
        description="Exact computations with quadratic Lie algebras "
        "containing a Heisenberg ideal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="verify Jacobi and metric axioms")
    p_check.add_argument("input", help="algebra document (JSON), or - for stdin")
    p_check.add_argument("--out", help="write the report to a file")

    p_construct = sub.add_parser("construct", help="run a construction document")
    p_construct.add_argument("input", help="construction document (JSON)")
    p_construct.add_argument("--out", help="write the algebra document to a file")

    p_analyze = sub.add_parser("analyze", help="full structure analysis")
    p_analyze.add_argument("input", help="algebra document with metric (JSON)")
    p_analyze.add_argument("--ideal", help="comma-separated basis indices")
    p_analyze.add_argument("--seed", type=int, default=0,
                           help="seed for randomized probing")
    p_analyze.add_argument("--out", help="write the report to a file")

    p_round = sub.add_parser("roundtrip", help="recover and rebuild exactly")
    p_round.add_argument("input", help="algebra document with metric (JSON)")
    p_round.add_argument("--ideal", required=True,
                         help="comma-separated basis indices of the ideal")
    p_round.add_argument("--out", help="write the report to a file")

    p_forms = sub.add_parser("forms", help="invariant symmetric form space")
    p_forms.add_argument("input", help="algebra document (JSON)")
    p_forms.add_argument("--out", help="write the report to a file")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            import json as _json

            try:
                data = _json.loads(_read_input(args.input))
            except ValueError as exc:
                raise DocumentError(f"invalid JSON: {exc}") from exc
            try:
                doc, code = cmd_construct(data)
            except ValueError as exc:
                raise DocumentError(str(exc)) from exc
            _emit(dumps_canonical(algebra_document_to_json(doc)), args.out)
            return code

        doc = loads_document(_read_input(args.input))
        if args.command == "check":
            report, code = cmd_check(doc)
        elif args.command == "analyze":
            report, code = cmd_analyze(
                doc, _parse_ideal(args.ideal), seed=args.seed
            )
        elif args.command == "roundtrip":
            ideal = _parse_ideal(args.ideal)
            report, code = cmd_roundtrip(doc, ideal)
        else:
            report, code = cmd_forms(doc)
        _emit(dumps_canonical(report), args.out)
        return code
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
