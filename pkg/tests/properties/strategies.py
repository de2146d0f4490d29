"""Hypothesis strategies for the value types."""
from hypothesis import strategies as st

from isq_units.catalog.bis import BIS
from isq_units.catalog.cgs import CGS
from isq_units.catalog.mhc import MHC
from isq_units.catalog.si import SI
from isq_units.models.dimension import Dimension, DimensionVector
from isq_units.models.measurement import ConversionSchema, MeasurementSystem
from isq_units.models.quantity import Quantity


def exponents(bound: int = 4):
    return st.integers(min_value=-bound, max_value=bound)


def dimension_vectors(bound: int = 4):
    return st.builds(
        lambda xs: DimensionVector(**{d.field: x for d, x in zip(Dimension, xs)}),
        st.tuples(*[exponents(bound)] * len(Dimension)),
    )


def factors():
    return st.floats(min_value=0.1, max_value=10.0, allow_nan=False, allow_infinity=False)


def schemas():
    random = st.builds(
        lambda xs: ConversionSchema(**{d.field: x for d, x in zip(Dimension, xs)}),
        st.tuples(*[factors()] * len(Dimension)),
    )
    return st.sampled_from([SI, BIS, CGS]) | random


def magnitudes():
    """Zero, or 1e-9 <= |x| <= 1e6 so products stay inside the float range"""
    return st.one_of(
        st.just(0.0),
        st.floats(min_value=1e-9, max_value=1e6),
        st.floats(min_value=-1e6, max_value=-1e-9),
    )


def non_zero_magnitudes():
    return magnitudes().filter(lambda x: abs(x) > 1e-6)


def quantities(dims=None, mags=None):
    return st.builds(Quantity, mags if mags is not None else magnitudes(), dims if dims is not None else dimension_vectors())


def unit_labels():
    return st.sampled_from(["SI", "BIS", "CGS", "LAB"])


def measurement_systems(dims=None, mags=None, schema_strategy=None):
    return st.builds(
        MeasurementSystem,
        quantities(dims, mags),
        schema_strategy if schema_strategy is not None else schemas(),
        unit_labels(),
    )


def any_schema():
    """Catalog schemas including MHC, which has a negative factor"""
    return schemas() | st.just(MHC)
