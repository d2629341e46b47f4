import random

import pytest

from classprod.errors import (BothZero, ConstantPolynomial, DivisionByZeroPoly,
                              NonIntegerCoefficients, NotPrime,
                              ZeroConstantTerm, ZeroPolynomial)
from classprod.fields import GF, QQ
from classprod.poly import (Poly, eisenstein_test, factor_completely,
                            irreducibility, monic_irreducibles, poly_divmod,
                            poly_gcd, reciprocal, roots_in_field, strip_root)

F2, F5 = GF(2), GF(5)


def rand_poly(field, rng, max_deg=6):
    deg = rng.randrange(max_deg + 1)
    if field.kind == "Q":
        return Poly(field, [rng.randint(-5, 5) for _ in range(deg + 1)])
    return Poly(field, [rng.randrange(field.p) for _ in range(deg + 1)])


def test_divmod_examples():
    q, r = poly_divmod(Poly(QQ, [-1, 0, 1]), Poly(QQ, [-1, 1]))
    assert q == Poly(QQ, [1, 1]) and r.is_zero()

    q, r = poly_divmod(Poly(QQ, [2, 0, 0, 1]), Poly.x(QQ))
    assert q == Poly(QQ, [0, 0, 1]) and r == Poly.constant(QQ, 2)

    # quartic over F_2: verified by multiplying back
    a = Poly(F2, [1, 0, 1, 0, 1])
    b = Poly(F2, [1, 1, 1])
    q, r = poly_divmod(a, b)
    assert r.is_zero()
    assert q * b == a
    assert q == b


def test_divmod_round_trip_random():
    rng = random.Random(5)
    for field in (QQ, F2, F5):
        for _ in range(120):
            a = rand_poly(field, rng)
            b = rand_poly(field, rng)
            if b.is_zero():
                continue
            q, r = poly_divmod(a, b)
            assert q * b + r == a
            assert r.degree() < b.degree()


def test_divmod_errors():
    with pytest.raises(DivisionByZeroPoly):
        poly_divmod(Poly.one(QQ), Poly.zero(QQ))


def _resultant(a, b):
    """Sylvester-matrix resultant, used as an independent coprimality check."""
    from classprod.matrix import Matrix
    m, n = a.degree(), b.degree()
    rows = []
    for i in range(n):
        row = [a.field.zero] * (m + n)
        for k in range(m + 1):
            row[i + k] = a.coefficient(m - k)
        rows.append(row)
    for i in range(m):
        row = [a.field.zero] * (m + n)
        for k in range(n + 1):
            row[i + k] = b.coefficient(n - k)
        rows.append(row)
    return Matrix(a.field, rows).det()


def test_gcd_examples():
    lin = Poly(QQ, [-1, 1])
    assert poly_gcd(lin, lin * lin) == lin

    a, b = Poly(QQ, [2, 0, 0, 1]), Poly(QQ, [1, 0, 1])
    assert not _resultant(a, b).is_zero()  # coprime by the resultant
    assert poly_gcd(a, b).is_one()

    assert poly_gcd(Poly.zero(QQ), Poly(QQ, [3, 1])) == Poly(QQ, [3, 1])
    with pytest.raises(BothZero):
        poly_gcd(Poly.zero(QQ), Poly.zero(QQ))


def test_gcd_divides_both_random():
    rng = random.Random(6)
    for _ in range(80):
        a, b = rand_poly(F5, rng), rand_poly(F5, rng)
        if a.is_zero() and b.is_zero():
            continue
        g = poly_gcd(a, b)
        assert g.is_monic()
        assert g.divides(a) and g.divides(b)


def test_reciprocal():
    assert reciprocal(Poly(QQ, [2, 0, 0, 1])) == Poly(QQ, [1, 0, 0, 2])
    assert reciprocal(Poly(QQ, [-1, 1])) == Poly(QQ, [1, -1])
    p = Poly(QQ, [2, 3, 1])
    assert reciprocal(p) == Poly(QQ, [1, 3, 2])
    assert reciprocal(reciprocal(p)) == p
    with pytest.raises(ZeroConstantTerm):
        reciprocal(Poly.x(QQ))


def test_roots_examples():
    assert roots_in_field(Poly(F5, [2, -1, 0, 1])) == []
    assert roots_in_field(Poly(QQ, [1, -2, 1])) == [QQ.scalar(1)]
    # direct evaluation at both points of F_2
    quartic = Poly(F2, [1, 0, 1, 0, 1])
    assert quartic.evaluate(0) == F2.one and quartic.evaluate(1) == F2.one
    assert roots_in_field(quartic) == []
    with pytest.raises(ZeroPolynomial):
        roots_in_field(Poly.zero(QQ))


def test_roots_exhaustive_agreement_fp():
    rng = random.Random(7)
    for _ in range(60):
        p = rand_poly(F5, rng)
        if p.is_zero():
            continue
        expect = [F5.scalar(a) for a in range(5) if p.evaluate(a).is_zero()]
        assert roots_in_field(p) == expect


def test_roots_on_linear_products_q():
    rng = random.Random(8)
    for _ in range(40):
        roots = sorted({rng.randint(-4, 4) for _ in range(rng.randrange(1, 4))})
        extra = Poly(QQ, [1, 0, 1])  # rootless factor
        p = Poly.from_roots(QQ, roots) * extra * rng.randint(1, 3)
        assert roots_in_field(p) == [QQ.scalar(r) for r in roots]


def test_irreducibility_examples():
    assert irreducibility(Poly(F5, [2, -1, 0, 1])).is_irreducible
    res = irreducibility(Poly(F2, [1, 0, 1, 0, 1]))
    assert res.is_reducible and res.factor == Poly(F2, [1, 1, 1])
    assert res.factor * res.factor == Poly(F2, [1, 0, 1, 0, 1])
    assert irreducibility(Poly(QQ, [2, 0, 0, 1])).is_irreducible
    # degree >= 4 over Q without a root or an Eisenstein prime stays undecided
    assert irreducibility(Poly(QQ, [1, 0, 1, 0, 1])).is_unknown


def test_irreducibility_sanity():
    rng = random.Random(9)
    for _ in range(60):
        p = rand_poly(F5, rng, max_deg=5)
        if p.degree() < 1:
            continue
        p = p.monic()
        verdict = irreducibility(p)
        roots = roots_in_field(p)
        if verdict.is_irreducible:
            assert not roots or p.degree() == 1
        if verdict.is_reducible:
            assert verdict.factor.divides(p)
            assert 1 <= verdict.factor.degree() < p.degree()


def test_irreducibility_errors():
    from classprod.errors import NotMonic
    with pytest.raises(ConstantPolynomial):
        irreducibility(Poly.one(QQ))
    with pytest.raises(NotMonic):
        irreducibility(Poly(QQ, [1, 2]))


def test_monic_irreducibles_f2():
    assert [str(p) for p in monic_irreducibles(F2, 1)] == ["X", "X + 1"]
    assert [str(p) for p in monic_irreducibles(F2, 2)] == ["X^2 + X + 1"]
    # count check: 2^3 - products; degree-3 irreducibles over F_2 number 2
    assert len(monic_irreducibles(F2, 3)) == 2


def test_eisenstein():
    assert eisenstein_test(Poly(QQ, [2, 0, 0, 1]), 2) is True
    assert eisenstein_test(Poly(QQ, [-1, 0, 1]), 2) is False
    assert eisenstein_test(Poly(QQ, [4, 0, 1]), 2) is False
    with pytest.raises(NotPrime):
        eisenstein_test(Poly(QQ, [2, 0, 0, 1]), 4)
    with pytest.raises(NonIntegerCoefficients):
        eisenstein_test(Poly(QQ, ["1/2", "0", "1"]), 2)


def test_strip_root_and_factor():
    p = Poly.from_roots(QQ, [1, 1, 2])
    cof, k = strip_root(p, 1)
    assert k == 2 and cof == Poly(QQ, [-2, 1])
    facs = factor_completely(p)
    assert facs == [(Poly(QQ, [-1, 1]), 2), (Poly(QQ, [-2, 1]), 1)]
    fac2 = factor_completely(Poly(F2, [1, 0, 1, 0, 1]))
    assert fac2 == [(Poly(F2, [1, 1, 1]), 2)]


def test_factor_unavailable_over_q():
    from classprod.errors import FactorizationUnavailable
    with pytest.raises(FactorizationUnavailable):
        factor_completely(Poly(QQ, [1, 0, 1, 0, 1]))
