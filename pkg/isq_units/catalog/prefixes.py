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
Prefixes

A Prefix is any of a bare magnitude, a Quantity or a MeasurementSystem, so the
same scaling helper works on all three:

    kilo(10)        -> 10000.0
    kilo(METRE)     -> MeasurementSystem of 1000 m
    milli(UNIT_MASS) -> Quantity(0.001, MASS)
"""

import numbers
from typing import Union

from isq_units.catalog.bis import BIS_MILE_PER_HOUR
from isq_units.catalog.si import SI
from isq_units.models.measurement import MeasurementSystem
from isq_units.models.quantity import Quantity, scale_q
from isq_units.services.conversion import ms_conv, scale_ms

Prefix = Union[float, Quantity, MeasurementSystem]

PREFIX_GIGA = 1e9
PREFIX_MEGA = 1e6
PREFIX_KILO = 1e3
PREFIX_DECI = 1e-1
PREFIX_CENTI = 1e-2
PREFIX_MILLI = 1e-3
PREFIX_MICRO = 1e-6
PREFIX_NANO = 1e-9


def scale_prefix(x: Prefix, p: float) -> Prefix:
    """
    Scale whichever variant x is by p

    Raises:
        TypeError: If x is not a magnitude, quantity or measurement system
    """
    if isinstance(x, MeasurementSystem):
        return scale_ms(p, x)
    if isinstance(x, Quantity):
        return scale_q(p, x)
    if isinstance(x, numbers.Real) and not isinstance(x, bool):
        return float(x) * p
    raise TypeError(f"Not a prefix (magnitude, quantity or measurement system): {type(x).__name__}")


def giga(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_GIGA)


def mega(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_MEGA)


def kilo(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_KILO)


def deci(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_DECI)


def centi(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_CENTI)


def milli(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_MILLI)


def micro(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_MICRO)


def nano(x: Prefix) -> Prefix:
    return scale_prefix(x, PREFIX_NANO)


def mag(p: Prefix) -> float:
    """Magnitude of any Prefix variant"""
    if isinstance(p, MeasurementSystem):
        return p.quantity.magnitude
    if isinstance(p, Quantity):
        return p.magnitude
    if isinstance(p, numbers.Real) and not isinstance(p, bool):
        return float(p)
    raise TypeError(f"Not a prefix (magnitude, quantity or measurement system): {type(p).__name__}")


def metrify(ms: MeasurementSystem) -> Quantity:
    """Convert to SI and keep only the quantity"""
    return ms_conv(ms, SI).quantity


def mph2mps(mph: float) -> float:
    """Miles per hour to metres per second, through the BIS schema"""
    return mag(metrify(scale_ms(mph, BIS_MILE_PER_HOUR())))
