from fractions import Fraction

import pytest

from ratprime import Fp, PreconditionError, PrimeField, QQ, parse_field
from ratprime.errors import FieldMismatchError


def test_prime_field_rejects_composite():
    with pytest.raises(PreconditionError):
        PrimeField(6)
    with pytest.raises(PreconditionError):
        PrimeField(1)


def test_fp_arithmetic():
    F7 = PrimeField(7)
    a, b = F7(3), F7(5)
    assert a + b == F7(1)
    assert a - b == F7(5)
    assert a * b == F7(1)
    assert a / b == F7(3) * F7(3)  # 1/5 = 3 mod 7
    assert -a == F7(4)
    assert a ** -1 == F7(5)
    assert bool(F7(0)) is False and bool(a) is True


def test_fp_int_coercion():
    F5 = PrimeField(5)
    assert F5(2) + 4 == F5(1)
    assert 3 * F5(4) == F5(2)
    assert F5(7) == 2


def test_fp_mismatched_moduli():
    with pytest.raises(FieldMismatchError):
        PrimeField(5)(1) + PrimeField(7)(1)


def test_rationals_construct_fractions():
    assert QQ(3) == Fraction(3)
    assert QQ(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ.char == 0 and PrimeField(5).char == 5


def test_prime_field_maps_fractions():
    F5 = PrimeField(5)
    assert F5(Fraction(1, 2)) == F5(3)  # 2 * 3 = 1 mod 5
    with pytest.raises(ZeroDivisionError):
        F5(Fraction(1, 5))


def test_parse_field():
    assert parse_field("Q") is QQ or parse_field("Q") == QQ
    assert parse_field("F5") == PrimeField(5)
    with pytest.raises(PreconditionError):
        parse_field("F6")
    with pytest.raises(PreconditionError):
        parse_field("R")


def test_field_elements_enumeration():
    assert [e.value for e in PrimeField(3).elements()] == [0, 1, 2]
