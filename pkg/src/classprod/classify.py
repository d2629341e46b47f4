"""Class descriptors and minimal-product-length verdicts.

For dimension 3 the verdict is always exact, decided by a five-way case
split on transvection-class membership, roots of the characteristic
polynomial and the multiplicative order of the determinant.  For general
dimension the verdict is exact in the proven regimes (transvection class,
root case, and the irreducible case with determinant of order > 3) and a
bounds interval with an explicit exclusion list otherwise.

Verdicts depend only on the conjugacy class: every input is reduced to
invariant-factor data first.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import CentralMatrix, DimensionTooSmall, Singular, WrongDimension
from .fields import Field, Scalar
from .matrix import Matrix
from .normalforms import invariant_factors
from .poly import Poly, irreducibility, roots_in_field

PLUS = 1
MINUS = -1

ALL_LENGTH3_PATTERNS = tuple(
    (a, b, c) for a in (PLUS, MINUS) for b in (PLUS, MINUS) for c in (PLUS, MINUS))


@dataclass(frozen=True)
class ClassDescriptor:
    """Conjugacy-class invariants of a noncentral matrix."""

    n: int
    field: Field
    invariant_factors: tuple
    charpoly: Poly
    det: Scalar
    trace: Scalar
    is_transvection_class: bool


@dataclass(frozen=True)
class Exact:
    m: int
    sign_pattern: tuple

    kind = "exact"


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int
    excluded_patterns: tuple = ()
    irreducibility_unknown: bool = False

    kind = "bounds"


@dataclass(frozen=True)
class MReport:
    """Classifier verdict with its case tag and a short justification."""

    verdict: object  # Exact | Bounds
    case_tag: str
    rationale: str


def describe_class(sigma: Matrix) -> ClassDescriptor:
    """Class invariants; rejects singular, scalar and small matrices."""
    if sigma.n < 3:
        raise DimensionTooSmall("class analysis needs dimension >= 3")
    if sigma.det().is_zero():
        raise Singular("matrix is not invertible")
    if sigma.is_scalar():
        raise CentralMatrix("scalar matrices have no class-product verdict")
    facs = tuple(invariant_factors(sigma))
    chi = facs[0]
    for p in facs[1:]:
        chi = chi * p
    lin = Poly.linear(sigma.field, 1)
    is_t = all(p == lin for p in facs[:-1]) and facs[-1] == lin * lin
    return ClassDescriptor(n=sigma.n, field=sigma.field,
                           invariant_factors=facs, charpoly=chi,
                           det=sigma.det(), trace=sigma.trace(),
                           is_transvection_class=is_t)


def _det_orders(det: Scalar):
    one = det.field.one
    return det * det == one, det * det * det == one


def classify_m_n3(sigma: Matrix) -> MReport:
    """Exact verdict for 3x3 matrices."""
    if sigma.n != 3:
        raise WrongDimension("this classifier is specific to dimension 3")
    desc = describe_class(sigma)
    if desc.is_transvection_class:
        return MReport(Exact(1, (PLUS,)), "n3-i",
                       "member of the transvection class")
    roots = roots_in_field(desc.charpoly)
    if roots:
        return MReport(Exact(2, (PLUS, MINUS)), "n3-ii",
                       f"characteristic polynomial has the root {roots[0]}")
    square_one, cube_one = _det_orders(desc.det)
    if square_one:
        return MReport(Exact(2, (PLUS, PLUS)), "n3-iii",
                       "no root and the determinant squares to 1")
    if cube_one:
        return MReport(Exact(3, (PLUS, PLUS, PLUS)), "n3-iv",
                       "no root and the determinant cubes to 1")
    return MReport(Exact(4, (PLUS, MINUS, PLUS, MINUS)), "n3-v",
                   "no root and the determinant has order above 3")


def classify_m_general(sigma: Matrix) -> MReport:
    """Verdict for any dimension >= 3: exact where proven, bounds with an
    exclusion list otherwise."""
    desc = describe_class(sigma)
    if desc.is_transvection_class:
        return MReport(Exact(1, (PLUS,)), "gen-t",
                       "member of the transvection class")
    roots = roots_in_field(desc.charpoly)
    if roots:
        return MReport(Exact(2, (PLUS, MINUS)), "gen-root",
                       f"characteristic polynomial has the root {roots[0]}")
    irr = irreducibility(desc.charpoly)
    square_one, cube_one = _det_orders(desc.det)
    if irr.is_irreducible and not square_one and not cube_one:
        return MReport(Exact(4, (PLUS, MINUS, PLUS, MINUS)), "gen-eisenstein-4",
                       "irreducible characteristic polynomial and determinant "
                       "of order above 3")
    excluded = []
    reasons = []
    if irr.is_irreducible:
        excluded += [(PLUS, MINUS), (MINUS, PLUS)]
        reasons.append("mixed-sign length-2 products need a reducible "
                       "characteristic polynomial")
    if not square_one:
        excluded += [(PLUS, PLUS), (MINUS, MINUS)]
        reasons.append("determinant squared is not 1")
    if not cube_one:
        excluded += list(ALL_LENGTH3_PATTERNS)
        reasons.append("determinant cubed is not 1")
    if irr.is_unknown:
        reasons.append("irreducibility undecided at this degree over Q")
    return MReport(Bounds(2, 4, tuple(excluded), irr.is_unknown), "gen-bounds",
                   "; ".join(reasons) if reasons else
                   "no exact case applies; generic bounds")
