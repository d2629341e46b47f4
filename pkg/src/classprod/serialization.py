"""JSON encoding/decoding for matrices, polynomials, reports and witnesses.

Scalars travel as strings ("3/4", "-2" over Q; a canonical residue over
F_p), polynomials as coefficient arrays with the constant term first, and
matrices as {"field": ..., "entries": [[...]]}.  Encoders keep key order
fixed so equal inputs always serialize to identical bytes.
"""

from __future__ import annotations

from .classify import Bounds, Exact, MReport
from .errors import ParseError
from .fields import Field, field_from_string, field_to_string
from .matrix import Matrix
from .poly import Poly
from .stable import StableVerdict
from .witness import Witness


def poly_to_json(p: Poly) -> list:
    return [str(c) for c in p.coeffs]


def poly_from_json(field: Field, data) -> Poly:
    if not isinstance(data, list):
        raise ParseError("polynomial must be a coefficient array")
    return Poly(field, [field.scalar(str(c)) for c in data])


def matrix_to_json(m: Matrix) -> dict:
    return {"field": field_to_string(m.field),
            "entries": [[str(x) for x in row] for row in m.rows]}


def matrix_from_json(data, field: Field | None = None) -> Matrix:
    if not isinstance(data, dict) or "entries" not in data:
        raise ParseError("matrix object needs an 'entries' array")
    file_field = None
    if "field" in data:
        file_field = field_from_string(str(data["field"]))
    if field is not None and file_field is not None and field != file_field:
        raise ParseError(f"field {field_to_string(field)} from the command "
                         f"line conflicts with {data['field']} in the file")
    use = file_field or field
    if use is None:
        raise ParseError("no field given on the command line or in the file")
    entries = data["entries"]
    try:
        return Matrix(use, [[use.scalar(str(x)) for x in row]
                            for row in entries])
    except Exception as exc:  # normalize construction failures
        raise ParseError(f"bad matrix entries: {exc}") from exc


def mreport_to_json(r: MReport) -> dict:
    v = r.verdict
    if isinstance(v, Exact):
        verdict = {"kind": "exact", "m": v.m,
                   "sign_pattern": list(v.sign_pattern)}
    elif isinstance(v, Bounds):
        verdict = {"kind": "bounds", "lower": v.lower, "upper": v.upper,
                   "excluded_patterns": [list(p) for p in v.excluded_patterns],
                   "irreducibility_unknown": v.irreducibility_unknown}
    else:
        raise TypeError(f"unknown verdict {v!r}")
    return {"verdict": verdict, "case": r.case_tag, "rationale": r.rationale}


def witness_to_json(w: Witness) -> dict:
    return {"signs": [s for s, _ in w.factors],
            "conjugators": [matrix_to_json(g) for _, g in w.factors],
            "verified": True,
            "case": w.case_tag}


def witness_from_json(data, sigma: Matrix) -> Witness:
    if not isinstance(data, dict):
        raise ParseError("witness must be an object")
    try:
        signs = [int(s) for s in data["signs"]]
        conjugators = [matrix_from_json(g, sigma.field)
                       for g in data["conjugators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed witness: {exc}") from exc
    if len(signs) != len(conjugators):
        raise ParseError("signs and conjugators differ in length")
    if any(s not in (1, -1) for s in signs):
        raise ParseError("signs must be 1 or -1")
    factors = tuple(zip(signs, conjugators))
    return Witness(sigma, factors, str(data.get("case", "unknown")))


def analysis_to_json(sigma: Matrix) -> dict:
    """Normal-form report: invariant factors, characteristic polynomial,
    Frobenius data and, when factorization lands, elementary divisors and
    the Jordan form."""
    from .errors import FactorizationUnavailable
    from .normalforms import elementary_divisors, frobenius_form, jordan_form

    fd = frobenius_form(sigma)
    chi = fd.invariant_factors[0]
    for p in fd.invariant_factors[1:]:
        chi = chi * p
    out = {
        "field": field_to_string(sigma.field),
        "dimension": sigma.n,
        "determinant": str(sigma.det()),
        "trace": str(sigma.trace()),
        "characteristic_polynomial": poly_to_json(chi),
        "invariant_factors": [poly_to_json(p) for p in fd.invariant_factors],
        "frobenius_form": matrix_to_json(fd.form),
        "frobenius_transform": matrix_to_json(fd.transform),
    }
    try:
        divisors = elementary_divisors(sigma)
        jd = jordan_form(sigma)
        out["elementary_divisors"] = [
            {"irreducible": poly_to_json(p), "power": q} for p, q in divisors]
        out["jordan_form"] = matrix_to_json(jd.form)
        out["jordan_transform"] = matrix_to_json(jd.transform)
    except FactorizationUnavailable as exc:
        out["elementary_divisors"] = None
        out["factorization_note"] = str(exc)
    return out


def stable_to_json(v: StableVerdict, element) -> dict:
    return {
        "field": field_to_string(element.field),
        "n_min": element.n_min,
        "minimal_representative": matrix_to_json(element.rep),
        "stable_invariant_factors": [poly_to_json(p)
                                     for p in v.stable_form.invariant_factors],
        "stabilization_index": v.stable_form.stabilization_index,
        "report": mreport_to_json(v.report),
        "witness_dimension": v.witness_dim,
        "witness": witness_to_json(v.witness),
    }
