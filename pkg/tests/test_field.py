import random
from fractions import Fraction

import pytest

from modules.core.field import (
    CYCLOTOMIC5,
    EISENSTEIN,
    GAUSSIAN,
    RATIONALS,
    FieldDescriptor,
    field_add,
    field_inv,
    field_mul,
)
from modules.core.groups import soundness_cap
from modules.custom_errors import (
    FieldMismatchError,
    NonInvertibleElementError,
    PolynomialError,
    ZeroInversionError,
)


def test_eisenstein_generator_is_a_cube_root_of_unity(t):
    assert t ** 3 == 1
    assert t ** 2 + t + 1 == 0
    assert t.inverse() == t ** 2
    assert -t ** 2 == t + 1


def test_gaussian_arithmetic(i):
    assert i * i == -1
    assert (1 + i) / (1 - i) == i
    assert field_inv(i) == -i


def test_operation_level_api(t):
    a = EISENSTEIN.element([1, 2])
    b = EISENSTEIN.element(["1/2", -1])
    assert field_add(a, b) == EISENSTEIN.element(["3/2", 1])
    assert field_mul(a, a.inverse()) == 1
    assert field_mul(b, field_inv(b)) == EISENSTEIN.one


def test_coefficients_are_reduced_modulo_the_minimal_polynomial():
    # t^2 = -t - 1
    assert EISENSTEIN.element([0, 0, 1]) == EISENSTEIN.element([-1, -1])
    # t^4 = -1 - t - t^2 - t^3
    assert CYCLOTOMIC5.gen ** 5 == 1
    assert CYCLOTOMIC5.element([0, 0, 0, 0, 1]) == CYCLOTOMIC5.element([-1, -1, -1, -1])


def test_rational_coercion_and_equality():
    half = RATIONALS.coerce("1/2")
    assert half == Fraction(1, 2)
    assert half * 2 == 1
    assert hash(EISENSTEIN.scalar(2)) == hash(2)
    assert EISENSTEIN.coerce([1, "2/4"]).coeffs == (Fraction(1), Fraction(1, 2))


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInversionError):
        EISENSTEIN.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        GAUSSIAN.one / 0


def test_mixing_fields_is_rejected(t, i):
    with pytest.raises(FieldMismatchError):
        t + i
    with pytest.raises(FieldMismatchError):
        EISENSTEIN.coerce(i)


def test_reducible_polynomial_detected_lazily():
    # t^2 - 1 = (t - 1)(t + 1)
    split = FieldDescriptor((-1, 0, 1))
    assert split.gen * split.gen == 1
    with pytest.raises(NonInvertibleElementError):
        (split.gen - 1).inverse()


@pytest.mark.parametrize("poly", [(1,), (1, 2), (1, 0, 3)])
def test_malformed_polynomials(poly):
    with pytest.raises(PolynomialError):
        FieldDescriptor(poly)


def test_json_encoding(t):
    assert EISENSTEIN.scalar(3).to_json() == 3
    assert (2 * t + 1).to_json() == [1, 2]
    assert RATIONALS.coerce("-3/4").to_json() == ["-3/4"]
    assert str(t ** 2) == "-t - 1"


@pytest.mark.parametrize("field, bound", [(RATIONALS, 6), (EISENSTEIN, 12), (GAUSSIAN, 12), (CYCLOTOMIC5, 30)])
def test_root_of_unity_bound(field, bound):
    assert field.root_of_unity_bound() == bound
    assert soundness_cap(field) == 60


def test_complex_root_matches_generator():
    root = EISENSTEIN.complex_root()
    assert abs(root ** 3 - 1) < 1e-9
    assert root.imag > 0
    assert abs(GAUSSIAN.complex_root() - 1j) < 1e-9


def random_element(rng, field):
    return field.element([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(field.degree)])


@pytest.mark.parametrize("field", [EISENSTEIN, GAUSSIAN, CYCLOTOMIC5])
def test_field_laws_on_random_elements(field):
    rng = random.Random(2024)
    for _ in range(200):
        a, b, c = (random_element(rng, field) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == field.one


@pytest.mark.parametrize("field", [EISENSTEIN, GAUSSIAN, CYCLOTOMIC5])
def test_arithmetic_agrees_with_the_complex_embedding(field):
    rng = random.Random(99)
    root = field.complex_root()
    for _ in range(200):
        a, b = random_element(rng, field), random_element(rng, field)
        assert abs((a * b).to_complex(root) - a.to_complex(root) * b.to_complex(root)) < 1e-9
        assert abs((a + b).to_complex(root) - (a.to_complex(root) + b.to_complex(root))) < 1e-9
        if not b.is_zero():
            assert abs((a / b).to_complex(root) * b.to_complex(root) - a.to_complex(root)) < 1e-8
