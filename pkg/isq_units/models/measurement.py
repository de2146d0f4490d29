# Copyright (C) 2025 ISQ Units contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Conversion schemas and measurement systems

A conversion schema gives, for every base dimension, the non-zero factor that
turns one unit of the system into SI. Omitted dimensions default to 1 (unlike
dimension vectors, which default to 0).

A measurement system is a quantity tagged with a schema and a unit-system label.
"""

import numbers
from typing import Annotated, Iterator, Mapping, Tuple

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, FiniteFloat

from isq_units.models.dimension import (
    Dimension,
    DimensionKey,
    DimensionVector,
    as_dimension,
)
from isq_units.models.quantity import Quantity


def _non_zero(value: float) -> float:
    if value == 0:
        raise ValueError("Conversion factor must be non-zero")
    return value


Factor = Annotated[FiniteFloat, AfterValidator(_non_zero)]


class ConversionSchema(BaseModel):
    """
    Total mapping Dimension -> non-zero real factor relative to SI

    Negative factors are allowed (see the MHC temperature entry).
    """
    model_config = ConfigDict(frozen=True)

    length: Factor = 1.0
    mass: Factor = 1.0
    time: Factor = 1.0
    current: Factor = 1.0
    temperature: Factor = 1.0
    amount: Factor = 1.0
    luminosity: Factor = 1.0

    def __getitem__(self, dimension: DimensionKey) -> float:
        return getattr(self, as_dimension(dimension).field)

    def items(self) -> Iterator[Tuple[Dimension, float]]:
        for dimension in Dimension:
            yield dimension, getattr(self, dimension.field)

    def factors(self) -> Tuple[float, ...]:
        return tuple(factor for _, factor in self.items())


def cs_make(partial: Mapping[DimensionKey, float] | None = None) -> ConversionSchema:
    """Build a total schema from a partial mapping; unlisted dimensions map to 1"""
    partial = partial or {}
    return ConversionSchema(**{as_dimension(k).field: v for k, v in partial.items()})


# Identity schema: every factor is 1
CONV_ID = ConversionSchema()


class MeasurementSystem(BaseModel):
    """
    A quantity expressed in a named conversion schema

    Attributes:
        quantity: Magnitude and dimension vector
        schema: Conversion schema the magnitude is expressed in
        unit: Unit-system label ("SI", "BIS", "CGS", "MHC", ...)

    Example:
        YARD = MeasurementSystem(Quantity(1, LENGTH), BIS, "BIS")
    """
    model_config = ConfigDict(frozen=True)

    quantity: Quantity
    schema_: ConversionSchema = Field(alias="schema")
    unit: str = Field(min_length=1)

    def __init__(
        self,
        quantity: Quantity,
        schema: ConversionSchema = CONV_ID,
        unit: str = "SI",
        **data,
    ):
        super().__init__(quantity=quantity, schema=schema, unit=unit, **data)

    @property
    def schema(self) -> ConversionSchema:
        return self.schema_

    @property
    def magnitude(self) -> float:
        return self.quantity.magnitude

    @property
    def dim(self) -> DimensionVector:
        return self.quantity.dim

    def __mul__(self, other):
        from isq_units.services.conversion import ms_times, scale_ms

        if isinstance(other, MeasurementSystem):
            return ms_times(self, other)
        if isinstance(other, numbers.Real):
            return scale_ms(float(other), self)
        return NotImplemented

    def __rmul__(self, other):
        from isq_units.services.conversion import scale_ms

        if isinstance(other, numbers.Real):
            return scale_ms(float(other), self)
        return NotImplemented

    def __truediv__(self, other: "MeasurementSystem") -> "MeasurementSystem":
        from isq_units.services.conversion import ms_div

        return ms_div(self, other)

    def __pow__(self, n: int) -> "MeasurementSystem":
        from isq_units.services.conversion import ms_itself_n

        return ms_itself_n(self, n)

    def __add__(self, other: "MeasurementSystem") -> "MeasurementSystem":
        from isq_units.services.conversion import ms_add

        return ms_add(self, other)

    def __sub__(self, other: "MeasurementSystem") -> "MeasurementSystem":
        from isq_units.services.conversion import ms_sub

        return ms_sub(self, other)

    def __neg__(self) -> "MeasurementSystem":
        from isq_units.services.conversion import ms_neg

        return ms_neg(self)
