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
Conversion kernel and measurement-system operators

quant_conv() is the heart of every conversion: the product, over all seven
dimensions, of the schema factor raised to the dimension exponent.

Binary measurement-system operators follow the leading-operand rule: the
second operand is converted into the first operand's schema, then the quantity
operation is applied, and the result carries the first operand's schema and
unit label.

Usage:
    from isq_units.services.conversion import ms_conv, ms_add, quant_conv

    metres = ms_conv(YARD, SI, "SI")            # magnitude 0.9143993
    total = ms_add(mph_20, kmh_20)              # expressed in miles per hour
"""

import math
from typing import Dict, Optional

from loguru import logger

from isq_units.exceptions import MagnitudeRangeError, ZeroScaleError
from isq_units.models.dimension import Dimension, DimensionKey, DimensionVector, as_dimension
from isq_units.models.measurement import CONV_ID, ConversionSchema, MeasurementSystem
from isq_units.models.quantity import (
    Quantity,
    q_add,
    q_div,
    q_inv,
    q_mul,
    q_neg,
    q_pow,
    q_sub,
    scale_q,
)
from isq_units.utils.numerics import product


# Catalog schemas register their label here so ms_conv can default it
_SCHEMA_LABELS: Dict[ConversionSchema, str] = {CONV_ID: "SI"}


def register_schema(label: str, schema: ConversionSchema):
    """
    Register a named conversion schema

    Args:
        label: Unit-system label used when converting into this schema
        schema: The conversion schema
    """
    if not label:
        raise ValueError("Schema label must be non-empty")
    _SCHEMA_LABELS.setdefault(schema, label)


def schema_label(schema: ConversionSchema) -> Optional[str]:
    """Registered label of a schema, or None when it is not a catalog schema"""
    return _SCHEMA_LABELS.get(schema)


# ============================================================================
# Conversion kernel
# ============================================================================

def quant_conv(cs: ConversionSchema, dv: DimensionVector) -> float:
    """
    Conversion magnitude of a dimension vector under a schema

    Multiplies cs(d) ** dv(d) over all seven dimensions in canonical order.
    Duplicate factor values are all counted; zero exponents contribute 1.

    Returns:
        Non-zero conversion magnitude

    Raises:
        MagnitudeRangeError: If the product overflows or underflows to zero
    """
    try:
        magnitude = product(cs[d] ** dv[d] for d in Dimension)
    except OverflowError:
        magnitude = math.inf
    if magnitude == 0 or not math.isfinite(magnitude):
        raise MagnitudeRangeError(f"Conversion magnitude of {dv.signature()} is out of float range")
    return magnitude


def ms_quant_conv(cs_conv: ConversionSchema, ms: MeasurementSystem) -> MeasurementSystem:
    """Scale ms's magnitude by quant_conv(cs_conv, dim); schema and label are kept"""
    return MeasurementSystem(scale_q(quant_conv(cs_conv, ms.dim), ms.quantity), ms.schema, ms.unit)


# ============================================================================
# Schema operators
# ============================================================================

def cs_inv(cs: ConversionSchema) -> ConversionSchema:
    return ConversionSchema(**{d.field: 1.0 / f for d, f in cs.items()})


def cs_compose(a: ConversionSchema, b: ConversionSchema) -> ConversionSchema:
    """Pointwise product of factors"""
    return ConversionSchema(**{d.field: a[d] * b[d] for d in Dimension})


def cs_ratio(a: ConversionSchema, b: ConversionSchema) -> ConversionSchema:
    """cs_compose(a, cs_inv(b)), computed as one division per factor"""
    return ConversionSchema(**{d.field: a[d] / b[d] for d in Dimension})


def cs_scale(m: float, cs: ConversionSchema, d: DimensionKey) -> ConversionSchema:
    """
    Multiply the factor at dimension d by m

    Raises:
        ZeroScaleError: If m is zero
    """
    if m == 0:
        raise ZeroScaleError(f"Cannot scale conversion schema by zero at {as_dimension(d).value}")
    dimension = as_dimension(d)
    return ConversionSchema(**{**cs.model_dump(), dimension.field: cs[dimension] * m})


# ============================================================================
# Measurement-system conversion
# ============================================================================

def ms_conv(
    ms: MeasurementSystem,
    target: ConversionSchema,
    target_unit: Optional[str] = None,
) -> MeasurementSystem:
    """
    Re-express a measurement system in another schema

    Args:
        ms: Measurement system to convert
        target: Target conversion schema
        target_unit: Target unit-system label; defaults to the registered label
            of the target schema

    Returns:
        Measurement system in the target schema and label

    Raises:
        ValueError: If target_unit is omitted and target is not a registered schema
    """
    if target_unit is None:
        target_unit = schema_label(target)
        if target_unit is None:
            raise ValueError("target_unit is required for a schema that is not registered in the catalog")

    if ms.schema == target:
        return MeasurementSystem(ms.quantity, target, target_unit)

    factor = quant_conv(cs_ratio(ms.schema, target), ms.dim)
    logger.debug(f"Converting {ms.unit} -> {target_unit} ({ms.dim.signature()}): factor {factor!r}")
    return MeasurementSystem(scale_q(factor, ms.quantity), target, target_unit)


def _lead(a: MeasurementSystem, b: MeasurementSystem) -> Quantity:
    """b's quantity expressed in a's schema"""
    if a.schema == b.schema:
        return b.quantity
    return ms_conv(b, a.schema, a.unit).quantity


def _tag(q: Quantity, like: MeasurementSystem) -> MeasurementSystem:
    return MeasurementSystem(q, like.schema, like.unit)


def ms_times(a: MeasurementSystem, b: MeasurementSystem) -> MeasurementSystem:
    return _tag(q_mul(a.quantity, _lead(a, b)), a)


def ms_div(a: MeasurementSystem, b: MeasurementSystem) -> MeasurementSystem:
    """
    Divide measurement systems (leading-operand rule)

    Raises:
        UnitsZeroDivisionError: If b has zero magnitude
    """
    return _tag(q_div(a.quantity, _lead(a, b)), a)


def ms_inv(a: MeasurementSystem) -> MeasurementSystem:
    return _tag(q_inv(a.quantity), a)


def ms_add(a: MeasurementSystem, b: MeasurementSystem) -> MeasurementSystem:
    """
    Sum in the leading operand's schema

    Example:
        ms_add(20 mile/hour, 20 km/hour) -> about 32.43 mile/hour, in BIS

    Raises:
        DimensionMismatchError: If the dimension vectors differ
    """
    return _tag(q_add(a.quantity, _lead(a, b)), a)


def ms_sub(a: MeasurementSystem, b: MeasurementSystem) -> MeasurementSystem:
    return _tag(q_sub(a.quantity, _lead(a, b)), a)


def ms_neg(a: MeasurementSystem) -> MeasurementSystem:
    return _tag(q_neg(a.quantity), a)


def ms_itself_n(a: MeasurementSystem, n: int) -> MeasurementSystem:
    """Replication: a multiplied by itself n times"""
    return _tag(q_pow(a.quantity, n), a)


def scale_ms(m: float, ms: MeasurementSystem) -> MeasurementSystem:
    """Scale the quantity by m; schema and unit are kept"""
    return _tag(scale_q(m, ms.quantity), ms)


scaleMS = scale_ms
ms_scale = scale_ms
