import random

import pytest

from classprod.errors import FieldMismatch, NotPrime, ParseError
from classprod.fields import GF, QQ, PrimeField, Scalar, field_from_string, field_to_string


def test_prime_validation():
    GF(2)
    GF(97)
    with pytest.raises(NotPrime):
        PrimeField(1)
    with pytest.raises(NotPrime):
        PrimeField(6)
    with pytest.raises(NotPrime):
        PrimeField(2 ** 31 + 11)


def test_field_interning():
    assert GF(5) is GF(5)
    assert QQ is QQ


def test_rational_strings():
    assert str(QQ.scalar("3/4")) == "3/4"
    assert str(QQ.scalar("-2")) == "-2"
    assert str(QQ.scalar("4/8")) == "1/2"
    assert QQ.scalar("6/-4") == QQ.scalar("-3/2")
    with pytest.raises(ParseError):
        QQ.scalar("x")


def test_prime_field_strings():
    F7 = GF(7)
    assert str(F7.scalar("3")) == "3"
    assert str(F7.scalar(-1)) == "6"
    assert F7.scalar("10") == F7.scalar(3)


def test_field_tags_round_trip():
    for tag in ("Q", "F2", "F31"):
        assert field_to_string(field_from_string(tag)) == tag
    with pytest.raises(ParseError):
        field_from_string("R")


def test_mismatch_rejected():
    with pytest.raises(FieldMismatch):
        QQ.scalar(1) + GF(5).scalar(1)


@pytest.mark.parametrize("field", [QQ, GF(2), GF(5), GF(97)])
def test_field_axioms_random(field):
    rng = random.Random(11)

    def rand():
        if field.kind == "Q":
            return field.scalar(rng.randint(-20, 20)) / field.scalar(rng.randint(1, 9))
        return field.scalar(rng.randrange(field.p))

    for _ in range(200):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == field.zero
        if not a.is_zero():
            assert a * a.inverse() == field.one
            assert a ** 3 == a * a * a
            assert a ** -2 == (a.inverse()) ** 2


def test_scalar_int_coercion():
    a = GF(5).scalar(3)
    assert a + 4 == GF(5).scalar(2)
    assert 1 - a == GF(5).scalar(3)
    assert 2 * a == GF(5).scalar(1)


def test_sort_keys_order():
    vals = [QQ.scalar("1/2"), QQ.scalar("-3"), QQ.scalar(2), QQ.scalar("1/3")]
    ordered = sorted(vals, key=lambda s: s.sort_key())
    assert [str(v) for v in ordered] == ["-3", "1/3", "1/2", "2"]
