import pytest
from pydantic import ValidationError

from isq_units.catalog.si import SI_PASCAL
from isq_units.exceptions import BareMagnitudeError, UnknownUnitError, UnitSyntaxError
from isq_units.models import dimension as dv
from isq_units.models.dimension import DIMENSIONLESS, dv_make, Dimension
from isq_units.models.quantity import Quantity, q_unit
from isq_units.services.expression import (
    BIS_DIMENSION_NAMES,
    SI_DIMENSION_NAMES,
    DimensionNames,
    One,
    Power,
    Product,
    Quotient,
    Symbol,
    dim_view,
    expr_to_dv,
    parse_unit,
    si_dim_view,
)

MASS_OVER_ACCELERATION = dv_make({Dimension.LENGTH: -1, Dimension.MASS: 1, Dimension.TIME: 2})


class TestDimView:
    def test_printed_strings(self):
        assert dim_view(SI_DIMENSION_NAMES, dv.ENERGY) == "kg * (m**2) / (s**2)"
        assert dim_view(SI_DIMENSION_NAMES, dv.PRESSURE) == "kg / m * (s**2)"
        assert dim_view(SI_DIMENSION_NAMES, MASS_OVER_ACCELERATION) == "kg * (s**2) / m"

    def test_si_dim_view(self):
        assert si_dim_view(SI_PASCAL()) == "kg / m * (s**2)"
        assert si_dim_view(q_unit(DIMENSIONLESS)) == "1"
        assert si_dim_view(Quantity(3, dv.VELOCITY)) == "m / s"

    def test_si_dim_view_rejects_bare_magnitudes(self):
        with pytest.raises(BareMagnitudeError):
            si_dim_view(2.0)

    def test_empty_numerator(self):
        assert dim_view(SI_DIMENSION_NAMES, dv.FREQUENCY) == "1 / s"

    def test_bis_names(self):
        assert dim_view(BIS_DIMENSION_NAMES, dv.ENERGY) == "lb * (yd**2) / (s**2)"

    def test_names_must_be_distinct_identifiers(self):
        with pytest.raises(ValidationError):
            DimensionNames(length="kg")
        with pytest.raises(ValidationError):
            DimensionNames(length="°R")


class TestParser:
    def test_tree_shape(self):
        tree = parse_unit("kg / m * (s**2)")
        assert isinstance(tree, Quotient)
        assert tree.numerator == Symbol("kg", 0)
        assert isinstance(tree.denominator, Product)
        assert tree.denominator.factors[1] == Power(Symbol("s", 10), 2)

    def test_printed_strings_parse(self):
        assert expr_to_dv(parse_unit("kg * (m**2) / (s**2)")) == dv.ENERGY
        assert expr_to_dv(parse_unit("1")) == DIMENSIONLESS
        assert expr_to_dv(parse_unit("m / s")) == dv.VELOCITY
        assert parse_unit("1") == One(0)

    def test_parenthesised_denominator(self):
        assert expr_to_dv(parse_unit("kg/(m*(s**2))")) == dv.PRESSURE
        assert expr_to_dv(parse_unit("kg*(s**2)/m")) == MASS_OVER_ACCELERATION

    def test_alternative_operators(self):
        assert expr_to_dv(parse_unit("m^2")) == dv.AREA
        assert expr_to_dv(parse_unit("kg·m")) == dv.MASS * dv.LENGTH
        assert expr_to_dv(parse_unit("s**-1")) == dv.FREQUENCY

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("", 0),
            ("m /", 3),
            ("m / s / s", 6),
            ("m ** 0", 5),
            ("m ** x", 5),
            ("2 * m", 0),
            ("(m", 2),
            ("m $", 2),
            ("m)", 1),
        ],
    )
    def test_syntax_errors_report_offsets(self, text, offset):
        with pytest.raises(UnitSyntaxError) as excinfo:
            parse_unit(text)
        assert excinfo.value.offset == offset
        assert excinfo.value.text == text

    def test_offsets_are_in_bytes(self):
        with pytest.raises(UnitSyntaxError) as excinfo:
            parse_unit("kg·m $")
        assert excinfo.value.offset == 6

    def test_unknown_dimension_symbol(self):
        with pytest.raises(UnknownUnitError) as excinfo:
            expr_to_dv(parse_unit("furlong"))
        assert excinfo.value.symbol == "furlong"
        assert "kg" in excinfo.value.known
