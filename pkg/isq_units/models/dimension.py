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
Base dimensions and dimension vectors

A dimension vector assigns an integer exponent to each of the seven ISQ base
dimensions. Vectors form an abelian group under multiplication (exponents add),
with the all-zero (dimensionless) vector as identity.

Usage:
    from isq_units.models.dimension import Dimension, dv_make, dv_mul, LENGTH, TIME

    pascal = dv_make({Dimension.LENGTH: -1, Dimension.MASS: 1, Dimension.TIME: -2})
    velocity = dv_mul(LENGTH, dv_inv(TIME))     # or LENGTH / TIME
"""

from enum import Enum
from typing import Dict, Iterator, Mapping, Tuple, Union

from pydantic import BaseModel, ConfigDict, StrictInt


class Dimension(str, Enum):
    """The seven ISQ base dimensions, in canonical order"""
    LENGTH = "Length"
    MASS = "Mass"
    TIME = "Time"
    CURRENT = "Current"
    TEMPERATURE = "Temperature"
    AMOUNT_OF_SUBSTANCE = "AmountOfSubstance"
    LUMINOUS_INTENSITY = "LuminousIntensity"

    @property
    def field(self) -> str:
        """Model field name holding this dimension's entry"""
        return _FIELDS[self]

    @property
    def symbol(self) -> str:
        """Conventional ISQ dimension symbol (L, M, T, I, Θ, N, J)"""
        return _SYMBOLS[self]


_FIELDS: Dict[Dimension, str] = {
    Dimension.LENGTH: "length",
    Dimension.MASS: "mass",
    Dimension.TIME: "time",
    Dimension.CURRENT: "current",
    Dimension.TEMPERATURE: "temperature",
    Dimension.AMOUNT_OF_SUBSTANCE: "amount",
    Dimension.LUMINOUS_INTENSITY: "luminosity",
}

_SYMBOLS: Dict[Dimension, str] = {
    Dimension.LENGTH: "L",
    Dimension.MASS: "M",
    Dimension.TIME: "T",
    Dimension.CURRENT: "I",
    Dimension.TEMPERATURE: "Θ",
    Dimension.AMOUNT_OF_SUBSTANCE: "N",
    Dimension.LUMINOUS_INTENSITY: "J",
}

DimensionKey = Union[Dimension, str]


def as_dimension(key: DimensionKey) -> Dimension:
    """Accept a Dimension or its name ("Length", "Mass", ...)"""
    if isinstance(key, Dimension):
        return key
    return Dimension(key)


class DimensionVector(BaseModel):
    """
    Total mapping Dimension -> integer exponent

    Omitted dimensions default to 0. Instances are immutable and hashable;
    equality is componentwise.

    Examples:
        DimensionVector()                              # dimensionless
        DimensionVector(length=-1, mass=1, time=-2)    # pressure
    """
    model_config = ConfigDict(frozen=True)

    length: StrictInt = 0
    mass: StrictInt = 0
    time: StrictInt = 0
    current: StrictInt = 0
    temperature: StrictInt = 0
    amount: StrictInt = 0
    luminosity: StrictInt = 0

    def __getitem__(self, dimension: DimensionKey) -> int:
        return getattr(self, as_dimension(dimension).field)

    def items(self) -> Iterator[Tuple[Dimension, int]]:
        """(dimension, exponent) pairs in canonical order, zeros included"""
        for dimension in Dimension:
            yield dimension, getattr(self, dimension.field)

    def exponents(self) -> Tuple[int, ...]:
        return tuple(exponent for _, exponent in self.items())

    def is_dimensionless(self) -> bool:
        return not any(self.exponents())

    def signature(self) -> str:
        """Compact ISQ signature, e.g. "L^-1 M T^-2"; "1" when dimensionless"""
        terms = []
        for dimension, exponent in self.items():
            if exponent == 1:
                terms.append(dimension.symbol)
            elif exponent:
                terms.append(f"{dimension.symbol}^{exponent}")
        return " ".join(terms) or "1"

    def __mul__(self, other: "DimensionVector") -> "DimensionVector":
        return dv_mul(self, other)

    def __truediv__(self, other: "DimensionVector") -> "DimensionVector":
        return dv_div(self, other)

    def __pow__(self, n: int) -> "DimensionVector":
        return dv_pow(self, n)

    def __invert__(self) -> "DimensionVector":
        return dv_inv(self)


def _from_exponents(exponents: Tuple[int, ...]) -> DimensionVector:
    return DimensionVector(**{d.field: e for d, e in zip(Dimension, exponents)})


def dv_make(partial: Mapping[DimensionKey, int] | None = None) -> DimensionVector:
    """
    Build a total vector from a partial mapping; unlisted dimensions map to 0

    Args:
        partial: Mapping from Dimension (or its name) to integer exponent

    Returns:
        DimensionVector defined on all seven dimensions
    """
    partial = partial or {}
    return DimensionVector(**{as_dimension(k).field: v for k, v in partial.items()})


def dv_mul(a: DimensionVector, b: DimensionVector) -> DimensionVector:
    """Product of units: exponents add"""
    return _from_exponents(tuple(x + y for x, y in zip(a.exponents(), b.exponents())))


def dv_inv(a: DimensionVector) -> DimensionVector:
    """Inverse unit: exponents negate"""
    return _from_exponents(tuple(-x for x in a.exponents()))


def dv_div(a: DimensionVector, b: DimensionVector) -> DimensionVector:
    return dv_mul(a, dv_inv(b))


def dv_pow(a: DimensionVector, n: int) -> DimensionVector:
    """Integer power: exponents scale by n"""
    return _from_exponents(tuple(x * n for x in a.exponents()))


def dv_is_dimensionless(a: DimensionVector) -> bool:
    return a.is_dimensionless()


def dv_items(a: DimensionVector) -> Tuple[Tuple[Dimension, int], ...]:
    """Non-zero (dimension, exponent) pairs in canonical order"""
    return tuple((d, e) for d, e in a.items() if e)


# ============================================================================
# Predefined dimension vectors (7 base + 15 coherent derived)
# ============================================================================

DIMENSIONLESS = DimensionVector()

LENGTH = dv_make({Dimension.LENGTH: 1})
MASS = dv_make({Dimension.MASS: 1})
TIME = dv_make({Dimension.TIME: 1})
CURRENT = dv_make({Dimension.CURRENT: 1})
TEMP = dv_make({Dimension.TEMPERATURE: 1})
AMOUNT = dv_make({Dimension.AMOUNT_OF_SUBSTANCE: 1})
LUMINOSITY = dv_make({Dimension.LUMINOUS_INTENSITY: 1})

AREA = dv_pow(LENGTH, 2)
VOLUME = dv_pow(LENGTH, 3)
FREQUENCY = dv_inv(TIME)
VELOCITY = dv_div(LENGTH, TIME)
ACCELERATION = dv_div(VELOCITY, TIME)
FORCE = dv_mul(MASS, ACCELERATION)
ENERGY = dv_mul(FORCE, LENGTH)
POWER = dv_div(ENERGY, TIME)
PRESSURE = dv_div(FORCE, AREA)
CHARGE = dv_mul(CURRENT, TIME)
POTENTIAL_DIFFERENCE = dv_div(POWER, CURRENT)
CAPACITANCE = dv_div(CHARGE, POTENTIAL_DIFFERENCE)
RADIAN = dv_div(LENGTH, LENGTH)
STERADIAN = dv_div(AREA, AREA)
# Same vector as POWER; both names are kept
WATTAGE = dv_div(dv_mul(AREA, MASS), dv_pow(TIME, 3))

BASE_VECTORS: Dict[str, DimensionVector] = {
    "LENGTH": LENGTH,
    "MASS": MASS,
    "TIME": TIME,
    "CURRENT": CURRENT,
    "TEMP": TEMP,
    "AMOUNT": AMOUNT,
    "LUMINOSITY": LUMINOSITY,
}

DERIVED_VECTORS: Dict[str, DimensionVector] = {
    "AREA": AREA,
    "VOLUME": VOLUME,
    "FREQUENCY": FREQUENCY,
    "VELOCITY": VELOCITY,
    "ACCELERATION": ACCELERATION,
    "ENERGY": ENERGY,
    "POWER": POWER,
    "FORCE": FORCE,
    "PRESSURE": PRESSURE,
    "CHARGE": CHARGE,
    "POTENTIAL_DIFFERENCE": POTENTIAL_DIFFERENCE,
    "CAPACITANCE": CAPACITANCE,
    "RADIAN": RADIAN,
    "STERADIAN": STERADIAN,
    "WATTAGE": WATTAGE,
}

PREDEFINED_VECTORS: Dict[str, DimensionVector] = {**BASE_VECTORS, **DERIVED_VECTORS}
