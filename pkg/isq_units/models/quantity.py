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
Quantities - magnitudes attached to dimension vectors

Arithmetic composes dimensions: multiplication adds exponents, division
subtracts them, addition/subtraction/ordering require equal vectors.

Equality is structural (magnitude AND dimension vector). Use
q_same_magnitude() for the magnitude-only relation.
"""

import math
import numbers

from pydantic import BaseModel, ConfigDict, FiniteFloat

from isq_units.exceptions import DimensionMismatchError, MagnitudeRangeError, UnitsZeroDivisionError
from isq_units.models.dimension import (
    DIMENSIONLESS,
    DimensionVector,
    dv_div,
    dv_inv,
    dv_mul,
    dv_pow,
)


class Quantity(BaseModel):
    """
    A finite real magnitude paired with a dimension vector

    Attributes:
        magnitude: Finite real magnitude
        dim: Dimension vector (defaults to dimensionless)

    Examples:
        Quantity(2, LENGTH)
        Quantity(magnitude=9.81, dim=ACCELERATION)
    """
    model_config = ConfigDict(frozen=True)

    magnitude: FiniteFloat
    dim: DimensionVector = DIMENSIONLESS

    def __init__(self, magnitude: float = 1.0, dim: DimensionVector = DIMENSIONLESS, **data):
        super().__init__(magnitude=magnitude, dim=dim, **data)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return q_mul(self, other)
        if isinstance(other, numbers.Real):
            return scale_q(float(other), self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return scale_q(float(other), self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            return q_div(self, other)
        if isinstance(other, numbers.Real):
            return q_div(self, Quantity(float(other)))
        return NotImplemented

    def __pow__(self, n: int) -> "Quantity":
        return q_pow(self, n)

    def __neg__(self) -> "Quantity":
        return q_neg(self)

    def __add__(self, other: "Quantity") -> "Quantity":
        return q_add(self, other)

    def __sub__(self, other: "Quantity") -> "Quantity":
        return q_sub(self, other)

    def __lt__(self, other: "Quantity") -> bool:
        return q_less(self, other)

    def __gt__(self, other: "Quantity") -> bool:
        return q_less(other, self)

    def __le__(self, other: "Quantity") -> bool:
        return not q_less(other, self)

    def __ge__(self, other: "Quantity") -> bool:
        return not q_less(self, other)


def _checked(value: float, operation: str, *operands: float) -> float:
    """value, unless it left the float range (inf, or 0 from non-zero operands)"""
    if not math.isfinite(value) or (value == 0 and operands and all(operands)):
        raise MagnitudeRangeError(f"Magnitude out of float range in {operation}: {operands}")
    return value


def q_unit(dv: DimensionVector) -> Quantity:
    """Unit quantity (magnitude 1) of the given dimension vector"""
    return Quantity(1.0, dv)


def q_mul(a: Quantity, b: Quantity) -> Quantity:
    return Quantity(_checked(a.magnitude * b.magnitude, "multiplication", a.magnitude, b.magnitude), dv_mul(a.dim, b.dim))


def q_div(a: Quantity, b: Quantity) -> Quantity:
    """
    Divide quantities

    Raises:
        UnitsZeroDivisionError: If b has zero magnitude
    """
    if b.magnitude == 0:
        raise UnitsZeroDivisionError(f"Cannot divide by zero-magnitude quantity ({b.dim.signature()})")
    return Quantity(_checked(a.magnitude / b.magnitude, "division", a.magnitude, b.magnitude), dv_div(a.dim, b.dim))


def q_inv(a: Quantity) -> Quantity:
    if a.magnitude == 0:
        raise UnitsZeroDivisionError(f"Cannot invert zero-magnitude quantity ({a.dim.signature()})")
    return Quantity(_checked(1.0 / a.magnitude, "inversion", a.magnitude), dv_inv(a.dim))


def _require_same_dim(a: Quantity, b: Quantity, operation: str):
    if a.dim != b.dim:
        raise DimensionMismatchError(a.dim, b.dim, operation)


def q_add(a: Quantity, b: Quantity) -> Quantity:
    """
    Sum of two quantities of the same dimension vector

    Raises:
        DimensionMismatchError: If a.dim != b.dim
    """
    _require_same_dim(a, b, "addition")
    return Quantity(_checked(a.magnitude + b.magnitude, "addition"), a.dim)


def q_sub(a: Quantity, b: Quantity) -> Quantity:
    _require_same_dim(a, b, "subtraction")
    return Quantity(_checked(a.magnitude - b.magnitude, "subtraction"), a.dim)


def q_neg(a: Quantity) -> Quantity:
    return Quantity(-a.magnitude, a.dim)


def q_pow(a: Quantity, n: int) -> Quantity:
    """
    Replication: magnitude ** n, exponents times n

    Raises:
        UnitsZeroDivisionError: For negative powers of a zero magnitude
        MagnitudeRangeError: If magnitude ** n leaves the float range
    """
    if n < 0 and a.magnitude == 0:
        raise UnitsZeroDivisionError(f"Cannot raise zero-magnitude quantity to power {n}")
    try:
        magnitude = a.magnitude ** n
    except OverflowError:
        raise MagnitudeRangeError(f"Magnitude out of float range in power: {a.magnitude!r} ** {n}") from None
    return Quantity(_checked(magnitude, "power", a.magnitude), dv_pow(a.dim, n))


def scale_q(m: float, q: Quantity) -> Quantity:
    """Multiply the magnitude by m; the dimension vector is unchanged"""
    return Quantity(_checked(m * q.magnitude, "scaling", m, q.magnitude), q.dim)


def q_less(a: Quantity, b: Quantity) -> bool:
    """
    Strict ordering by magnitude within one dimension vector

    Raises:
        DimensionMismatchError: Comparing e.g. area with velocity
    """
    _require_same_dim(a, b, "comparison")
    return a.magnitude < b.magnitude


def q_same_magnitude(a: Quantity, b: Quantity) -> bool:
    """Magnitude-only equality, ignoring the dimension vector"""
    return a.magnitude == b.magnitude


scaleQ = scale_q
