import math

import pytest
from pydantic import ValidationError

from isq_units.catalog.bis import BIS, BIS_MILE_PER_HOUR, BIS_UNIT, YARD
from isq_units.catalog.cgs import CGS
from isq_units.catalog.granularity import hour
from isq_units.catalog.prefixes import kilo
from isq_units.catalog.si import KILOGRAM, METRE, SECOND, SI, SI_UNIT
from isq_units.exceptions import DimensionMismatchError, MagnitudeRangeError, ZeroScaleError
from isq_units.models import dimension as dv
from isq_units.models.dimension import DIMENSIONLESS, Dimension, dv_pow
from isq_units.models.measurement import CONV_ID, ConversionSchema, MeasurementSystem, cs_make
from isq_units.models.quantity import Quantity
from isq_units.services.conversion import (
    cs_compose,
    cs_inv,
    cs_scale,
    ms_add,
    ms_conv,
    ms_div,
    ms_inv,
    ms_itself_n,
    ms_quant_conv,
    ms_sub,
    ms_times,
    quant_conv,
    scaleMS,
    schema_label,
)


class TestSchemas:
    def test_defaults_to_identity(self):
        assert cs_make() == CONV_ID
        assert all(f == 1.0 for f in CONV_ID.factors())
        assert cs_make({Dimension.LENGTH: 2})[Dimension.MASS] == 1.0

    def test_rejects_zero_and_non_finite_factors(self):
        with pytest.raises(ValidationError):
            cs_make({Dimension.LENGTH: 0})
        with pytest.raises(ValidationError):
            ConversionSchema(mass=math.inf)

    def test_negative_factor_is_allowed(self):
        assert cs_make({Dimension.TEMPERATURE: -272.15}).temperature == -272.15

    def test_inverse(self):
        assert cs_inv(SI) == SI
        assert math.isclose(cs_inv(BIS)[Dimension.LENGTH], 1.0936139, rel_tol=1e-6)
        twice = cs_inv(cs_inv(BIS))
        assert all(math.isclose(a, b, rel_tol=1e-15) for a, b in zip(twice.factors(), BIS.factors()))

    def test_compose(self):
        assert cs_compose(BIS, SI) == BIS
        identity = cs_compose(BIS, cs_inv(BIS))
        assert all(math.isclose(f, 1.0, rel_tol=1e-15) for f in identity.factors())
        assert cs_compose(cs_make({Dimension.LENGTH: 2}), cs_make({Dimension.LENGTH: 3})) == cs_make({Dimension.LENGTH: 6})

    def test_scale(self):
        assert cs_scale(0.01, SI, Dimension.LENGTH)[Dimension.LENGTH] == 0.01
        assert cs_scale(1, BIS, Dimension.MASS) == BIS
        assert cs_scale(2, cs_scale(0.5, BIS, "Time"), "Time") == BIS

    def test_scale_by_zero(self):
        with pytest.raises(ZeroScaleError):
            cs_scale(0, SI, Dimension.LENGTH)


class TestQuantConv:
    def test_identity_schema(self):
        assert quant_conv(SI, dv.ENERGY) == 1.0

    def test_bis(self):
        assert quant_conv(BIS, dv.LENGTH) == 0.9143993
        assert quant_conv(BIS, dv.VELOCITY) == 0.9143993

    def test_duplicate_factors_are_all_counted(self):
        cs = cs_make({Dimension.LENGTH: 2, Dimension.MASS: 2})
        assert quant_conv(cs, dv.LENGTH * dv.MASS) == 4.0

    def test_ms_quant_conv(self):
        assert ms_quant_conv(SI, METRE) == METRE
        assert ms_quant_conv(BIS, YARD).magnitude == 0.9143993
        assert ms_quant_conv(BIS, YARD).dim == dv.LENGTH
        area = MeasurementSystem(Quantity(2, dv.AREA), BIS, BIS_UNIT)
        assert math.isclose(ms_quant_conv(BIS, area).magnitude, 2 * 0.9143993 ** 2, rel_tol=1e-12)

    def test_out_of_float_range(self):
        with pytest.raises(MagnitudeRangeError):
            quant_conv(CGS, dv_pow(dv.LENGTH, 200))
        with pytest.raises(MagnitudeRangeError):
            quant_conv(cs_inv(CGS), dv_pow(dv.LENGTH, 200))
        with pytest.raises(MagnitudeRangeError):
            ms_conv(ms_itself_n(METRE, 200), CGS)


class TestMsConv:
    def test_yard_to_si(self):
        metres = ms_conv(YARD, SI, SI_UNIT)
        assert metres.magnitude == 0.9143993
        assert metres.schema == SI
        assert metres.unit == "SI"

    def test_si_to_si_is_unchanged(self):
        assert ms_conv(METRE, SI, SI_UNIT) == METRE

    def test_metre_to_bis(self):
        assert math.isclose(ms_conv(METRE, BIS, BIS_UNIT).magnitude, 1.0936139, rel_tol=1e-6)

    def test_label_defaults_to_registered_name(self):
        assert ms_conv(METRE, BIS).unit == "BIS"
        assert schema_label(SI) == "SI"

    def test_unregistered_schema_needs_a_label(self):
        with pytest.raises(ValueError):
            ms_conv(METRE, cs_make({Dimension.LENGTH: 7}))


class TestOperators:
    def test_pressure_scenario(self):
        pascal = ms_div(KILOGRAM, ms_times(METRE, ms_itself_n(SECOND, 2)))
        assert pascal.dim == dv.PRESSURE
        assert (pascal.schema, pascal.unit) == (SI, SI_UNIT)

    def test_leading_operand_rule(self):
        mixed = ms_times(YARD, METRE)
        assert mixed.schema == BIS
        assert mixed.unit == "BIS"
        assert math.isclose(mixed.magnitude, 1 / 0.9143993)
        assert ms_times(METRE, YARD).magnitude == 0.9143993

    def test_mph_plus_kmh(self):
        mph_20 = scaleMS(20, BIS_MILE_PER_HOUR())
        kmh_20 = scaleMS(20, ms_div(kilo(METRE), hour(SI, SI_UNIT)))
        total = ms_add(mph_20, kmh_20)
        assert total.schema == BIS
        assert math.isclose(total.magnitude / BIS_MILE_PER_HOUR().magnitude, 32.43, rel_tol=1e-3)

    def test_sum_of_mismatched_dimensions(self):
        with pytest.raises(DimensionMismatchError):
            ms_add(METRE, SECOND)
        with pytest.raises(DimensionMismatchError):
            ms_sub(YARD, KILOGRAM)

    def test_inverse_and_scaling(self):
        assert ms_inv(SECOND).dim == dv.FREQUENCY
        assert scaleMS(0.9144, METRE).magnitude == 0.9144
        assert scaleMS(3, YARD).schema == BIS

    def test_operator_overloads(self):
        assert METRE * METRE == ms_itself_n(METRE, 2)
        assert 2 * METRE == scaleMS(2, METRE)
        assert (METRE / SECOND).dim == dv.VELOCITY
        assert (YARD + METRE).unit == "BIS"
        assert (-METRE).magnitude == -1.0

    def test_dimensionless_measurement(self):
        one = MeasurementSystem(Quantity(1.0), SI, SI_UNIT)
        assert ms_div(one, SECOND).dim == dv.FREQUENCY
        assert one.dim == DIMENSIONLESS

    def test_empty_unit_label_is_rejected(self):
        with pytest.raises(ValidationError):
            MeasurementSystem(Quantity(1.0, dv.LENGTH), SI, "")
