"""Dense univariate polynomials over an exact field.

Coefficients are stored constant term first with no trailing zeros, so the
zero polynomial is the empty tuple and ``degree() == len(coeffs) - 1`` for
nonzero polynomials.  All operations are exact and pure.

Root finding is exhaustive over F_p and uses the rational root theorem
over Q.  Irreducibility is decided completely for degree <= 3 (root test),
by trial division against sieved irreducibles over F_p in higher degree,
and over Q in higher degree only when a rational root or an Eisenstein
prime settles it; otherwise the answer is UNKNOWN and downstream consumers
must propagate the gap.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (BothZero, ConstantPolynomial, DivisionByZeroPoly,
                     FieldMismatch, NonIntegerCoefficients, NotMonic,
                     NotPrime, ZeroConstantTerm, ZeroPolynomial)
from .fields import Field, Scalar, is_prime


class Poly:
    """Immutable dense polynomial over a fixed field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = [field.scalar(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # --- constructors ---

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, [1])

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def linear(cls, field: Field, root) -> "Poly":
        """The monic linear polynomial X - root."""
        return cls(field, [-field.scalar(root), 1])

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Poly":
        p = cls.one(field)
        for r in roots:
            p = p * cls.linear(field, r)
        return p

    # --- basic queries ---

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def leading(self) -> Scalar:
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    # --- arithmetic ---

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field,
                    [self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field,
                    [self.coefficient(k) - other.coefficient(k) for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Scalar) or isinstance(other, int):
            s = self.field.scalar(other)
            return Poly(self.field, [c * s for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by X**k."""
        if self.is_zero():
            return self
        return Poly(self.field, [0] * k + list(self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead.is_one():
            return self
        inv = lead.inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def evaluate(self, point) -> Scalar:
        """Horner evaluation at a scalar."""
        x = self.field.scalar(point)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        _, r = poly_divmod(other, self)
        return r.is_zero()

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self.coefficient(k)
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c))
            else:
                xk = "X" if k == 1 else f"X^{k}"
                parts.append(xk if c.is_one() else f"{c}*{xk}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly[{self.field}]({self})"

    def sort_key(self):
        """Total order: by degree, then coefficient values from the top."""
        return (self.degree(),
                tuple(c.sort_key() for c in reversed(self.coeffs)))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Exact division with remainder: a = q*b + r with deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    if a.degree() < b.degree():
        return Poly.zero(a.field), a
    field = a.field
    rem = list(a.coeffs)
    db = b.degree()
    lead_inv = b.leading().inverse()
    q = [field.zero] * (len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        c = rem[k + db] * lead_inv
        if c.is_zero():
            continue
        q[k] = c
        for j, bc in enumerate(b.coeffs):
            rem[k + j] = rem[k + j] - c * bc
    return Poly(field, q), Poly(field, rem[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a._check(b)
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    return a.monic()


def reciprocal(p: Poly) -> Poly:
    """Coefficient-reversed polynomial; an involution when the constant
    term is nonzero."""
    if p.is_zero() or p.coefficient(0).is_zero():
        raise ZeroConstantTerm("reciprocal requires a nonzero constant term")
    return Poly(p.field, list(reversed(p.coeffs)))


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def roots_in_field(p: Poly) -> list[Scalar]:
    """All roots of p lying in its coefficient field, once each, in a
    deterministic ascending order.

    F_p: exhaustive evaluation over all residues.  Q: rational root theorem
    over divisors of the (integerized) constant and leading coefficients.
    """
    if p.is_zero():
        raise ZeroPolynomial("every point is a root of the zero polynomial")
    field = p.field
    if p.is_constant():
        return []
    if field.kind == "Fp":
        found = [field.scalar(a) for a in range(field.p)
                 if p.evaluate(a).is_zero()]
        return found
    # integerize: common denominator does not change the root set
    denoms = [c.value.denominator for c in p.coeffs]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [c.value.numerator * (lcm // c.value.denominator) for c in p.coeffs]
    # strip powers of X: zero is a root iff the constant term vanishes
    shift = 0
    while ints[shift] == 0:
        shift += 1
    roots = set()
    if shift > 0:
        roots.add(field.zero)
    a0, an = ints[shift], ints[-1]
    for num in _int_divisors(a0):
        for den in _int_divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                sc = field.scalar(cand)
                if sc not in roots and p.evaluate(sc).is_zero():
                    roots.add(sc)
    return sorted(roots, key=lambda s: s.sort_key())


@dataclass(frozen=True)
class Irreducibility:
    """Outcome of an irreducibility test."""

    status: str  # "irreducible" | "reducible" | "unknown"
    factor: Poly | None = None  # a proper divisor when reducible, if known

    @property
    def is_irreducible(self) -> bool:
        return self.status == "irreducible"

    @property
    def is_reducible(self) -> bool:
        return self.status == "reducible"

    @property
    def is_unknown(self) -> bool:
        return self.status == "unknown"


def _all_monic(field, degree):
    """Yield every monic polynomial of the given degree over F_p, in
    lexicographic coefficient order (constant term fastest)."""
    for tail in itertools.product(range(field.p), repeat=degree):
        yield Poly(field, list(tail) + [1])


@functools.lru_cache(maxsize=None)
def monic_irreducibles(field, degree: int) -> tuple[Poly, ...]:
    """All monic irreducible polynomials of exactly this degree over F_p,
    sieved by trial division against lower-degree irreducibles."""
    assert field.kind == "Fp"
    out = []
    lower = [q for d in range(1, degree // 2 + 1)
             for q in monic_irreducibles(field, d)]
    for cand in _all_monic(field, degree):
        if degree > 1 and cand.coefficient(0).is_zero():
            continue  # divisible by X
        if any(q.divides(cand) for q in lower):
            continue
        out.append(cand)
    return tuple(out)


def irreducibility(p: Poly) -> Irreducibility:
    """Decide irreducibility of a monic polynomial of degree >= 1.

    Degrees 2 and 3 reduce to the root test over any field.  Higher degrees
    are decided by exhaustive trial division over F_p and, over Q, only in
    the directions the root test and Eisenstein's criterion can certify.
    """
    if p.is_constant():
        raise ConstantPolynomial("irreducibility needs degree >= 1")
    if not p.is_monic():
        raise NotMonic("irreducibility test expects a monic polynomial")
    deg = p.degree()
    if deg == 1:
        return Irreducibility("irreducible")
    roots = roots_in_field(p)
    if roots:
        return Irreducibility("reducible", Poly.linear(p.field, roots[0]))
    if deg <= 3:
        # a reducible quadratic or cubic must have a linear factor
        return Irreducibility("irreducible")
    if p.field.kind == "Fp":
        for d in range(2, deg // 2 + 1):
            for q in monic_irreducibles(p.field, d):
                if q.divides(p):
                    return Irreducibility("reducible", q)
        return Irreducibility("irreducible")
    # rationals, degree >= 4, no rational root
    for q in _eisenstein_candidates(p):
        if eisenstein_test(p, q):
            return Irreducibility("irreducible")
    return Irreducibility("unknown")


def _integer_coefficients(p: Poly) -> list[int]:
    vals = []
    for c in p.coeffs:
        if c.value.denominator != 1:
            raise NonIntegerCoefficients(f"coefficient {c} is not an integer")
        vals.append(c.value.numerator)
    return vals


def _eisenstein_candidates(p: Poly) -> list[int]:
    """Primes dividing every non-leading coefficient, found by factoring
    their gcd by trial division."""
    try:
        ints = _integer_coefficients(p)
    except NonIntegerCoefficients:
        return []
    g = 0
    for v in ints[:-1]:
        g = gcd(g, v)
    g = abs(g)
    primes = []
    d = 2
    while d * d <= g:
        if g % d == 0:
            primes.append(d)
            while g % d == 0:
                g //= d
        d += 1
    if g > 1:
        primes.append(g)
    return primes


def eisenstein_test(p: Poly, q: int) -> bool:
    """Eisenstein's criterion at the prime q; True certifies irreducibility
    of a monic integer polynomial over Q."""
    if p.field.kind != "Q":
        raise FieldMismatch("Eisenstein test applies to rational polynomials")
    if not p.is_monic():
        raise NotMonic("Eisenstein test expects a monic polynomial")
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    ints = _integer_coefficients(p)
    if ints[-1] % q == 0:
        return False
    if any(c % q != 0 for c in ints[:-1]):
        return False
    return ints[0] % (q * q) != 0


def strip_root(p: Poly, root) -> tuple[Poly, int]:
    """Factor out the highest power of (X - root); returns (cofactor, power)."""
    field = p.field
    lin = Poly.linear(field, root)
    k = 0
    while True:
        q, r = poly_divmod(p, lin)
        if not r.is_zero():
            return p, k
        p = q
        k += 1


def factor_completely(p: Poly) -> list[tuple[Poly, int]]:
    """Factor a monic polynomial into monic irreducibles with multiplicity.

    Always succeeds over F_p; over Q succeeds when root stripping leaves
    factors of degree <= 3 or an Eisenstein-certified factor, otherwise
    raises FactorizationUnavailable.
    """
    from .errors import FactorizationUnavailable

    if not p.is_monic():
        raise NotMonic("factorization expects a monic polynomial")
    field = p.field
    factors: dict[Poly, int] = {}
    stack = [p]
    while stack:
        cur = stack.pop()
        if cur.is_one():
            continue
        roots = roots_in_field(cur)
        if roots:
            cof, k = strip_root(cur, roots[0])
            lin = Poly.linear(field, roots[0])
            factors[lin] = factors.get(lin, 0) + k
            if not cof.is_one():
                stack.append(cof)
            continue
        if cur.degree() <= 3:
            factors[cur] = factors.get(cur, 0) + 1
            continue
        if field.kind == "Fp":
            hit = None
            for d in range(2, cur.degree() // 2 + 1):
                for q in monic_irreducibles(field, d):
                    if q.divides(cur):
                        hit = q
                        break
                if hit is not None:
                    break
            if hit is None:
                factors[cur] = factors.get(cur, 0) + 1
            else:
                quot, _ = poly_divmod(cur, hit)
                factors[hit] = factors.get(hit, 0) + 1
                stack.append(quot)
            continue
        verdict = irreducibility(cur)
        if verdict.is_irreducible:
            factors[cur] = factors.get(cur, 0) + 1
            continue
        raise FactorizationUnavailable(
            f"cannot factor rational polynomial of degree {cur.degree()}: {cur}")
    return sorted(factors.items(), key=lambda kv: kv[0].sort_key())
