"""Command-line interface.

Subcommands: analyze (normal forms), mvalue (classifier report), witness
(synthesize and verify), verify (re-check a witness file), oracle
(brute-force class scan with agreement flags), stable (stable-layer
report).  Exit codes: 0 success, 1 usage or input errors, 2 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify_m_general, classify_m_n3
from .errors import ClassprodError, ParseError, SynthesisFailed
from .fields import field_from_string, field_to_string
from .matrix import Matrix
from .oracle import DEFAULT_CAP, all_classes, minimal_m_search
from .serialization import (analysis_to_json, matrix_from_json,
                            matrix_to_json, mreport_to_json, stable_to_json,
                            witness_from_json, witness_to_json)
from .stable import StableElement, stable_m
from .witness import synthesize_witness, verify_witness


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _load_matrix(args) -> Matrix:
    field = field_from_string(args.field) if args.field else None
    return matrix_from_json(_load_json(args.matrix), field)


def _emit(args, payload: dict, renderer=None) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = renderer(payload) if renderer else _render_generic(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_generic(payload: dict, indent: str = "") -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_render_generic(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(_render_generic(item, indent + "  ").rstrip())
                lines.append("")
        else:
            lines.append(f"{indent}{key}: {json.dumps(value)}")
    return "\n".join(line for line in lines if line is not None) + "\n"


def _classify(sigma: Matrix):
    return classify_m_n3(sigma) if sigma.n == 3 else classify_m_general(sigma)


def cmd_analyze(args) -> int:
    sigma = _load_matrix(args)
    _emit(args, analysis_to_json(sigma))
    return 0


def cmd_mvalue(args) -> int:
    sigma = _load_matrix(args)
    _emit(args, mreport_to_json(_classify(sigma)))
    return 0


def cmd_witness(args) -> int:
    sigma = _load_matrix(args)
    try:
        w = synthesize_witness(sigma)
    except SynthesisFailed as exc:
        _emit(args, {"verified": False, "error": "synthesis-failed",
                     "detail": str(exc)})
        return 2
    _emit(args, witness_to_json(w))
    return 0


def cmd_verify(args) -> int:
    sigma = _load_matrix(args)
    w = witness_from_json(_load_json(args.witness), sigma)
    ok = verify_witness(w)
    _emit(args, {"verified": ok, "length": w.length,
                 "signs": list(w.signs)})
    return 0 if ok else 2


def cmd_stable(args) -> int:
    sigma = _load_matrix(args)
    element = StableElement.from_matrix(sigma)
    verdict = stable_m(element)
    if not verify_witness(verdict.witness):
        return 2
    _emit(args, stable_to_json(verdict, element))
    return 0


def _oracle_row(cls, classifier_report) -> dict:
    from .oracle import OracleVerdict  # noqa: F401  (documentation import)
    ctx = cls.context
    sigma = ctx.to_matrix(cls.representative)
    verdict = minimal_m_search(sigma, cap=ctx.cap)
    report = mreport_to_json(classifier_report)
    v = report["verdict"]
    if v["kind"] == "exact":
        agree = (verdict.m_min == v["m"]
                 and tuple(v["sign_pattern"]) in verdict.realizing_patterns)
    else:
        excluded = {tuple(p) for p in v["excluded_patterns"]}
        agree = (v["lower"] <= verdict.m_min <= v["upper"]
                 and not any(tuple(p) in excluded
                             for p in verdict.realizing_patterns))
    chi = sigma.charpoly_minors()
    return {
        "representative": [[str(x) for x in row] for row in sigma.rows],
        "characteristic_polynomial": [str(c) for c in chi.coeffs],
        "determinant": str(sigma.det()),
        "class_size": cls.size,
        "m_min": verdict.m_min,
        "realizing_patterns": [list(p) for p in verdict.realizing_patterns],
        "classifier": report,
        "agree": agree,
    }


def cmd_oracle(args) -> int:
    field = field_from_string(args.field) if args.field else None
    rows = []
    if args.matrix:
        sigma = matrix_from_json(_load_json(args.matrix), field)
        from .oracle import enumerate_E_class
        cls = enumerate_E_class(sigma, cap=args.cap)
        rows.append(_oracle_row(cls, _classify(sigma)))
    else:
        if field is None or args.dim is None:
            raise ParseError("scan mode needs --field F<p> and --dim")
        for cls in all_classes(field, args.dim, cap=args.cap):
            sigma = cls.context.to_matrix(cls.representative)
            if sigma.is_scalar():
                continue
            rows.append(_oracle_row(cls, _classify(sigma)))
    payload = {"rows": rows, "all_agree": all(r["agree"] for r in rows)}
    if args.format == "csv":
        import csv
        import io
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["representative", "charpoly", "det", "class_size",
                         "m_min", "patterns", "classifier", "agree"])
        for r in rows:
            writer.writerow([
                json.dumps(r["representative"]),
                json.dumps(r["characteristic_polynomial"]),
                r["determinant"], r["class_size"], r["m_min"],
                json.dumps(r["realizing_patterns"]),
                json.dumps(r["classifier"]), r["agree"]])
        text = buf.getvalue()
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(args, payload)
    return 0 if payload["all_agree"] else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="classprod",
        description="Exact conjugacy-class product analysis over Q and F_p")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix_required=True):
        p.add_argument("--matrix", required=matrix_required,
                       help="path to a matrix JSON file")
        p.add_argument("--field", help='field tag: "Q" or "F<p>"')
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=["json", "text", "csv"],
                       default="json")

    p = sub.add_parser("analyze", help="normal-form report")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mvalue", help="minimal product-length report")
    common(p)
    p.set_defaults(func=cmd_mvalue)

    p = sub.add_parser("witness", help="synthesize a verified witness")
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="re-check a witness file")
    common(p)
    p.add_argument("--witness", required=True, help="path to a witness JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force scan with agreement flags")
    common(p, matrix_required=False)
    p.add_argument("--dim", type=int, help="scan dimension (with --field)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="max enumerated set size")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("stable", help="stable-layer report")
    common(p)
    p.set_defaults(func=cmd_stable)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ClassprodError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
