"""Prefixes scale every Prefix variant the same way."""
import math

from hypothesis import given, strategies as st

from isq_units.catalog.prefixes import centi, kilo, mag, mega, micro, milli
from isq_units.models.measurement import MeasurementSystem
from isq_units.models.quantity import Quantity

from .strategies import magnitudes, measurement_systems, quantities

prefixables = st.one_of(magnitudes(), quantities(), measurement_systems())


class TestPrefixLaws:
    @given(prefixables)
    def test_kilo_undoes_milli(self, x):
        assert math.isclose(mag(kilo(milli(x))), mag(x), rel_tol=1e-12)

    @given(prefixables)
    def test_mega_undoes_micro(self, x):
        assert math.isclose(mag(mega(micro(x))), mag(x), rel_tol=1e-12)

    @given(prefixables)
    def test_prefix_keeps_the_variant(self, x):
        scaled = centi(x)
        assert type(scaled) is type(x)
        if isinstance(x, (Quantity, MeasurementSystem)):
            assert scaled.dim == x.dim
        if isinstance(x, MeasurementSystem):
            assert (scaled.schema, scaled.unit) == (x.schema, x.unit)
