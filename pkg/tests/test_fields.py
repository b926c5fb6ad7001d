import random
from fractions import Fraction

import pytest

from symlab.fields import (
    ExtensionField,
    FieldError,
    GF,
    PrimeField,
    QQ,
    parse_field_spec,
    primitive_cube_root,
    rationals_with_cube_root,
)


def sample_fields():
    return [QQ, GF(5), GF(7), GF(2, 2), GF(3, 2), rationals_with_cube_root()]


def random_element(field, rng):
    if field.size() is not None:
        elems = list(field.elements())
        return elems[rng.randrange(len(elems))]
    if isinstance(field, ExtensionField):
        g = field.generator()
        return field.coerce(Fraction(rng.randint(-9, 9), rng.randint(1, 9))) + g * rng.randint(-9, 9)
    return field.coerce(Fraction(rng.randint(-50, 50), rng.randint(1, 50)))


def test_inversion_examples():
    assert GF(7).coerce(3).inverse() == GF(7).coerce(5)
    f4 = GF(2, 2)
    y = f4.generator()
    assert y.inverse() == y + 1
    assert QQ.coerce(Fraction(2, 3)).inverse() == QQ.coerce(Fraction(3, 2))
    with pytest.raises(ZeroDivisionError):
        QQ.zero.inverse()


def test_field_axioms_randomized():
    rng = random.Random(20240)
    for field in sample_fields():
        for _ in range(1000):
            a, b, c = (random_element(field, rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a and a * b == b * a
            if not a.is_zero():
                assert a * a.inverse() == field.one
            assert a + (-a) == field.zero


def test_frobenius_in_characteristic_p():
    rng = random.Random(7)
    for field in [GF(5), GF(7), GF(2, 2), GF(3, 2), GF(2, 3)]:
        p = field.characteristic()
        for _ in range(200):
            a, b = random_element(field, rng), random_element(field, rng)
            assert (a + b) ** p == a**p + b**p


def test_characteristic():
    assert QQ.characteristic() == 0
    assert rationals_with_cube_root().characteristic() == 0
    assert GF(2, 2).characteristic() == 2
    assert GF(7).characteristic() == 7


def test_primitive_cube_root_examples():
    assert primitive_cube_root(GF(7)) == GF(7).coerce(2)  # 2^3 = 8 = 1 mod 7
    assert primitive_cube_root(GF(5)) is None  # multiplicative group has order 4
    f4 = GF(2, 2)
    assert primitive_cube_root(f4) == f4.generator()
    assert primitive_cube_root(QQ) is None
    qz = rationals_with_cube_root()
    z = primitive_cube_root(qz)
    assert z == qz.generator() and z**3 == qz.one and z != qz.one


def test_cube_root_absent_iff_no_order_3_element():
    # exhaustive cross-check on finite fields up to size 49
    fields = [GF(p) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)]
    fields += [GF(2, 2), GF(2, 3), GF(3, 2), GF(3, 3), GF(5, 2), GF(7, 2)]
    for field in fields:
        assert field.size() <= 49
        brute = [
            x
            for x in field.elements()
            if x != field.one and x * x * x == field.one
        ]
        got = primitive_cube_root(field)
        assert (got is None) == (not brute)
        if brute:
            assert got in brute


def test_extension_construction_rejects_bad_moduli():
    with pytest.raises(FieldError):
        ExtensionField(PrimeField(2), [1, 0, 1])  # (Y+1)^2 over F2
    with pytest.raises(FieldError):
        ExtensionField(QQ, [-1, 0, 1])  # Y^2 - 1 over Q
    with pytest.raises(FieldError):
        ExtensionField(QQ, [1, 0, 0, 1])  # only Y^2+Y+1 is supported over Q
    with pytest.raises(FieldError):
        ExtensionField(PrimeField(2), [1, 1])  # degree 1
    with pytest.raises(FieldError):
        ExtensionField(PrimeField(2), [1, 1, 0, 0, 1])  # degree 4 unsupported
    with pytest.raises(FieldError):
        ExtensionField(QQ, [1, 1, 2])  # not monic
    with pytest.raises(FieldError):
        PrimeField(6)


def test_prime_field_fraction_coercion():
    f7 = GF(7)
    assert f7.coerce(Fraction(1, 3)) == f7.coerce(5)
    with pytest.raises(FieldError):
        f7.coerce(Fraction(1, 7))


def test_mixed_field_arithmetic_raises():
    with pytest.raises(FieldError):
        GF(5).one + GF(7).one


def test_descriptor_equality_and_sharing():
    assert GF(7) == GF(7)
    assert GF(2, 2) == GF(2, 2)
    assert GF(5) != GF(7)
    # elements of independently built descriptors interoperate
    assert GF(7).coerce(3) + GF(7).coerce(5) == GF(7).coerce(1)


def test_parse_field_spec():
    assert parse_field_spec("Q") == QQ
    assert parse_field_spec("Fp(7)") == GF(7)
    assert parse_field_spec("F(2,2)") == GF(2, 2)
    assert parse_field_spec("Qzeta3") == rationals_with_cube_root()
    with pytest.raises(FieldError):
        parse_field_spec("R")
    with pytest.raises(FieldError):
        parse_field_spec("Fp(6)")


def test_finite_field_sizes_and_element_counts():
    for field, size in [(GF(5), 5), (GF(2, 2), 4), (GF(3, 2), 9), (GF(2, 3), 8)]:
        assert field.size() == size
        elems = list(field.elements())
        assert len(elems) == size
        assert len({e.sort_key() for e in elems}) == size
