"""dim_view output parses back to the vector it renders."""
import string

from hypothesis import assume, given, strategies as st

from isq_units.models.dimension import Dimension
from isq_units.services.expression import (
    BIS_DIMENSION_NAMES,
    SI_DIMENSION_NAMES,
    DimensionNames,
    dim_view,
    expr_to_dv,
    parse_unit,
)

from .strategies import dimension_vectors


def dimension_names():
    identifiers = st.builds(
        str.__add__,
        st.sampled_from(string.ascii_letters + "_"),
        st.text(alphabet=string.ascii_letters + string.digits + "_", max_size=5),
    )
    return st.lists(identifiers, min_size=len(Dimension), max_size=len(Dimension), unique=True).map(
        lambda symbols: DimensionNames(**{d.field: s for d, s in zip(Dimension, symbols)})
    )


class TestDimView:
    @given(dimension_vectors())
    def test_round_trip_with_si_names(self, dv):
        assert expr_to_dv(parse_unit(dim_view(SI_DIMENSION_NAMES, dv))) == dv

    @given(dimension_vectors())
    def test_round_trip_with_bis_names(self, dv):
        text = dim_view(BIS_DIMENSION_NAMES, dv)
        assert expr_to_dv(parse_unit(text), BIS_DIMENSION_NAMES) == dv

    @given(dimension_names(), dimension_vectors())
    def test_round_trip_with_any_names(self, names, dv):
        assert expr_to_dv(parse_unit(dim_view(names, dv)), names) == dv

    @given(dimension_vectors(), dimension_vectors())
    def test_injective(self, a, b):
        assume(a != b)
        assert dim_view(SI_DIMENSION_NAMES, a) != dim_view(SI_DIMENSION_NAMES, b)
