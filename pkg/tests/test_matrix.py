import random

import pytest

from classprod.errors import (BadIndices, DimensionMismatch, FieldMismatch,
                              Singular, ZeroParameter)
from classprod.fields import GF, QQ
from classprod.matrix import (ElemGen, Matrix, commutator, diag_one,
                              diag_pair, perm, signed_perm, transvection,
                              transvection_normalizer)
from classprod.poly import Poly

from conftest import random_matrix

F2, F5, F7 = GF(2), GF(5), GF(7)


def test_constructors_and_errors():
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2], [3, 4], [5, 6]])
    with pytest.raises(FieldMismatch):
        Matrix(QQ, [[1]]) * Matrix(F5, [[1]])
    with pytest.raises(BadIndices):
        transvection(QQ, 3, 1, 1, 1)
    with pytest.raises(BadIndices):
        transvection(QQ, 3, 0, 2, 1)
    with pytest.raises(ZeroParameter):
        diag_one(QQ, 3, 1, 0)


def test_transvection_addition_rule():
    a, b = QQ.scalar(3), QQ.scalar("5/2")
    assert (transvection(QQ, 3, 1, 2, a) * transvection(QQ, 3, 1, 2, b)
            == transvection(QQ, 3, 1, 2, a + b))
    assert transvection(QQ, 3, 1, 2, 1) * transvection(QQ, 3, 1, 2, 1) \
        == transvection(QQ, 3, 1, 2, 2)


def test_generator_determinants():
    for field in (QQ, F5):
        assert transvection(field, 4, 2, 4, 3).det() == field.one
        assert diag_pair(field, 4, 1, 3, 2).det() == field.one
        assert signed_perm(field, 4, 2, 3).det() == field.one
        assert perm(field, 4, 2, 3).det() == -field.one
        assert diag_one(field, 4, 2, 3).det() == field.scalar(3)


def test_elemgen_wrapper():
    g = ElemGen("signed_perm", 3, 1, 2)
    assert g.matrix(QQ) == signed_perm(QQ, 3, 1, 2)
    g = ElemGen("transvection", 3, 1, 3, a=5)
    assert g.matrix(F7) == transvection(F7, 3, 1, 3, 5)


def test_inverse_and_det():
    rng = random.Random(3)
    for field in (QQ, F5):
        for _ in range(40):
            m = random_matrix(field, rng.randrange(1, 5), rng)
            inv = m.inverse()
            assert m * inv == Matrix.identity(field, m.n)
            assert inv * m == Matrix.identity(field, m.n)
            assert (m.det() * inv.det()).is_one()
    with pytest.raises(Singular):
        Matrix(QQ, [[1, 2], [2, 4]]).inverse()
    assert Matrix(QQ, [[1, 2], [2, 4]]).det().is_zero()


def test_det_multiplicative():
    rng = random.Random(4)
    for _ in range(30):
        a = random_matrix(QQ, 3, rng, invertible=False)
        b = random_matrix(QQ, 3, rng, invertible=False)
        assert (a * b).det() == a.det() * b.det()


def test_order_two_diag_pair():
    d = diag_pair(QQ, 3, 1, 3, -1)
    assert d.inverse() == d
    assert d * d == Matrix.identity(QQ, 3)


def test_commutator_relations_random():
    rng = random.Random(12)
    for field in (QQ, F5, F7):
        for _ in range(60):
            n = rng.randrange(3, 5)
            idx = list(range(1, n + 1))
            i, j = rng.sample(idx, 2)
            if field.kind == "Q":
                a, b = rng.randint(-4, 4), rng.randint(-4, 4)
            else:
                a, b = rng.randrange(field.p), rng.randrange(field.p)
            # R2: disjoint or chain-free slots commute
            hk = [(h, k) for h in idx for k in idx
                  if h != k and j != h and i != k and (h, k) != (i, j)]
            h, k = rng.choice(hk)
            assert commutator(transvection(field, n, i, j, a),
                              transvection(field, n, h, k, b)) \
                == Matrix.identity(field, n)
            # R3: chained slots produce the product parameter
            ks = [k for k in idx if k not in (i, j)]
            k = rng.choice(ks)
            assert commutator(transvection(field, n, i, j, a),
                              transvection(field, n, j, k, b)) \
                == transvection(field, n, i, k,
                                field.scalar(a) * field.scalar(b))


def test_commutator_identity():
    g = Matrix.companion(Poly(QQ, [2, 0, 0, 1]))
    e = Matrix.identity(QQ, 3)
    assert commutator(e, g) == e
    assert commutator(transvection(QQ, 4, 1, 2, 5),
                      transvection(QQ, 4, 3, 4, 7)) == Matrix.identity(QQ, 4)


def test_charpoly_examples():
    comp = Matrix.companion(Poly(QQ, [2, 0, 0, 1]))
    assert comp.charpoly_minors() == Poly(QQ, [2, 0, 0, 1])

    e4 = Matrix.identity(QQ, 4)
    assert e4.charpoly_minors() == Poly.from_roots(QQ, [1, 1, 1, 1])

    sigma = Matrix(F2, [[0, 1, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 0]])
    assert sigma.charpoly_minors() == Poly(F2, [1, 0, 1, 0, 1])


def test_charpoly_evaluates_to_zero_on_matrix():
    # Cayley-Hamilton as an independent sanity check
    from classprod.normalforms import poly_at_matrix
    rng = random.Random(13)
    for _ in range(20):
        m = random_matrix(F5, 3, rng, invertible=False)
        chi = m.charpoly_minors()
        assert poly_at_matrix(chi, m) == Matrix.zero(F5, 3)


def test_conjugation():
    rng = random.Random(14)
    m = random_matrix(QQ, 3, rng)
    g = random_matrix(QQ, 3, rng)
    assert m.conj(g) == g.inverse() * m * g
    assert m.conj(Matrix.identity(QQ, 3)) == m


def test_power_negative():
    m = Matrix.companion(Poly(F5, [2, -1, 0, 1]))
    assert m ** -2 == (m.inverse()) ** 2
    assert m ** 0 == Matrix.identity(F5, 3)


def test_transvection_normalizer_examples():
    eps = transvection_normalizer(QQ, 3, 1, 2, 1)
    assert eps == Matrix.identity(QQ, 3)

    eps = transvection_normalizer(QQ, 3, 3, 2, 1)
    assert transvection(QQ, 3, 3, 2, 1).conj(eps) == transvection(QQ, 3, 1, 2, 1)
    assert eps.det().is_one()

    eps = transvection_normalizer(F7, 3, 1, 2, 5)
    assert transvection(F7, 3, 1, 2, 5).conj(eps) == transvection(F7, 3, 1, 2, 1)
    assert eps.det().is_one()


def test_transvection_normalizer_random():
    rng = random.Random(15)
    for field in (QQ, F5, F7):
        for _ in range(60):
            n = rng.randrange(3, 6)
            i, j = rng.sample(range(1, n + 1), 2)
            if field.kind == "Q":
                a = rng.choice([x for x in range(-5, 6) if x])
            else:
                a = rng.randrange(1, field.p)
            eps = transvection_normalizer(field, n, i, j, a)
            assert eps.det().is_one()
            assert transvection(field, n, i, j, a).conj(eps) \
                == transvection(field, n, 1, 2, 1)
