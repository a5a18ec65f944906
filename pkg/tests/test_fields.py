from fractions import Fraction

import pytest

from twosilt import QQ, PrimeField, field_from_spec


def test_rational_basics():
    assert QQ.of(2) + QQ.of(3) == Fraction(5)
    assert QQ.of(1) / QQ.of(3) == Fraction(1, 3)
    assert QQ.zero == 0 and QQ.one == 1


def test_prime_field_arithmetic():
    F = PrimeField(7)
    a = F.of(3)
    b = F.of(5)
    assert a + b == F.of(1)
    assert a * b == F.of(1)
    assert -a == F.of(4)
    assert (a / b) * b == a


def test_prime_field_inverse_everywhere():
    F = PrimeField(11)
    one = F.of(1)
    for k in range(1, 11):
        x = F.of(k)
        assert x * (one / x) == one


def test_prime_field_requires_prime():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_field_from_spec():
    assert field_from_spec("rat") is QQ
    assert field_from_spec("fp:5") == PrimeField(5)
    with pytest.raises(ValueError):
        field_from_spec("float")
