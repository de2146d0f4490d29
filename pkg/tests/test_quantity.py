import math

import pytest
from pydantic import ValidationError

from isq_units.exceptions import DimensionMismatchError, MagnitudeRangeError, UnitsZeroDivisionError
from isq_units.models import dimension as dv
from isq_units.models.dimension import DIMENSIONLESS
from isq_units.models.quantity import (
    Quantity,
    q_add,
    q_div,
    q_inv,
    q_less,
    q_mul,
    q_neg,
    q_pow,
    q_same_magnitude,
    q_sub,
    q_unit,
    scaleQ,
)


def test_unit_quantities():
    assert q_unit(dv.AREA) == Quantity(1, dv.AREA)
    assert q_unit(DIMENSIONLESS) == Quantity(1)
    assert q_unit(dv.PRESSURE).dim.exponents()[:3] == (-1, 1, -2)


def test_magnitude_must_be_finite():
    with pytest.raises(ValidationError):
        Quantity(math.nan, dv.LENGTH)
    with pytest.raises(ValidationError):
        Quantity(math.inf)


def test_multiplication():
    assert q_mul(Quantity(2, dv.LENGTH), Quantity(3, dv.FREQUENCY)) == Quantity(6, dv.VELOCITY)
    assert q_mul(Quantity(2, dv.LENGTH), Quantity(1)) == Quantity(2, dv.LENGTH)
    assert q_mul(q_unit(dv.PRESSURE), q_unit(dv.VOLUME)) == q_unit(dv.ENERGY)
    assert Quantity(2, dv.LENGTH) * 3 == Quantity(6, dv.LENGTH)
    assert 3 * Quantity(2, dv.LENGTH) == Quantity(6, dv.LENGTH)


def test_division():
    assert q_div(Quantity(10, dv.LENGTH), Quantity(2, dv.TIME)) == Quantity(5, dv.VELOCITY)
    assert q_div(Quantity(4, dv.AREA), Quantity(4, dv.AREA)) == Quantity(1)
    assert q_div(Quantity(6, dv.ENERGY), Quantity(3, dv.VOLUME)) == Quantity(2, dv.PRESSURE)


def test_division_by_zero():
    with pytest.raises(UnitsZeroDivisionError):
        q_div(Quantity(1, dv.LENGTH), Quantity(0, dv.TIME))
    with pytest.raises(ZeroDivisionError):
        q_inv(Quantity(0, dv.TIME))


def test_inversion():
    assert q_inv(Quantity(2, dv.TIME)) == Quantity(0.5, dv.FREQUENCY)
    assert q_inv(Quantity(1)) == Quantity(1)
    q = Quantity(4, dv.ENERGY)
    assert q_inv(q_inv(q)) == q


def test_addition_and_subtraction():
    assert q_add(Quantity(2, dv.LENGTH), Quantity(3, dv.LENGTH)) == Quantity(5, dv.LENGTH)
    assert q_sub(Quantity(2, dv.LENGTH), Quantity(3, dv.LENGTH)) == Quantity(-1, dv.LENGTH)
    q = Quantity(7, dv.FORCE)
    assert q_add(q, q_neg(q)) == Quantity(0, dv.FORCE)
    assert -q == Quantity(-7, dv.FORCE)


def test_addition_dimension_mismatch():
    with pytest.raises(DimensionMismatchError) as excinfo:
        q_add(Quantity(2, dv.LENGTH), Quantity(3, dv.TIME))
    assert excinfo.value.left == dv.LENGTH
    assert excinfo.value.right == dv.TIME
    with pytest.raises(ValueError):
        Quantity(2, dv.LENGTH) - Quantity(3, dv.TIME)


def test_replication():
    assert q_pow(Quantity(2, dv.LENGTH), 3) == Quantity(8, dv.VOLUME)
    assert q_pow(Quantity(5, dv.ENERGY), 0) == Quantity(1)
    assert q_pow(Quantity(1, dv.TIME), 2) == Quantity(1, dv.TIME ** 2)
    assert q_pow(Quantity(2, dv.TIME), -1) == Quantity(0.5, dv.FREQUENCY)
    with pytest.raises(UnitsZeroDivisionError):
        q_pow(Quantity(0, dv.TIME), -2)


def test_scaling():
    assert scaleQ(3, Quantity(2, dv.LENGTH)) == Quantity(6, dv.LENGTH)
    q = Quantity(2.5, dv.CHARGE)
    assert scaleQ(1, q) == q
    assert scaleQ(0, q) == Quantity(0, dv.CHARGE)


def test_ordering():
    assert q_less(Quantity(1, dv.LENGTH), Quantity(2, dv.LENGTH))
    assert not q_less(Quantity(2, dv.LENGTH), Quantity(2, dv.LENGTH))
    assert Quantity(1, dv.LENGTH) < Quantity(2, dv.LENGTH)
    assert Quantity(2, dv.LENGTH) >= Quantity(2, dv.LENGTH)
    with pytest.raises(DimensionMismatchError):
        q_less(Quantity(1, dv.LENGTH), Quantity(2, dv.TIME))


def test_equality_is_structural():
    assert Quantity(1, dv.LENGTH) != Quantity(1, dv.TIME)
    assert q_same_magnitude(Quantity(1, dv.LENGTH), Quantity(1, dv.TIME))


def test_magnitudes_outside_the_float_range():
    with pytest.raises(MagnitudeRangeError):
        q_pow(Quantity(1000.0, dv.LENGTH), 110)
    with pytest.raises(MagnitudeRangeError):
        q_pow(Quantity(0.01, dv.LENGTH), 200)
    with pytest.raises(MagnitudeRangeError):
        q_mul(Quantity(1e200, dv.LENGTH), Quantity(1e200, dv.LENGTH))
    with pytest.raises(ArithmeticError):
        q_div(Quantity(1e-200), Quantity(1e200))
    with pytest.raises(MagnitudeRangeError):
        scaleQ(1e300, Quantity(1e300))


def test_exact_zero_is_not_a_range_error():
    assert q_add(Quantity(2.0, dv.LENGTH), Quantity(-2.0, dv.LENGTH)) == Quantity(0.0, dv.LENGTH)
    assert q_mul(Quantity(0.0), Quantity(5.0, dv.TIME)) == Quantity(0.0, dv.TIME)
    assert q_pow(Quantity(0.0, dv.LENGTH), 3) == Quantity(0.0, dv.VOLUME)
