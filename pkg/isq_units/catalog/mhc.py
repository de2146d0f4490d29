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
Milligram-Hour-Celcius system for dosage schedules

Mass is viewed in milligrams, time in hours. The temperature factor -272.15 is
kept as published; a multiplicative factor cannot express the Kelvin/Celsius
offset, so temperature conversions under MHC are not physically meaningful.

Usage:
    from isq_units.catalog.mhc import hDAY, hMONTH, every_x_hours

    hDAY().quantity.magnitude          # 24 (hours)
    hMONTH("february")                 # 28 * 24 hours
    every_x_hours(3)                   # 8.0
"""

from functools import cache
from typing import Union

from isq_units.catalog.granularity import (
    DAYS_PER_MONTH,
    DAYS_PER_WEEK,
    DAYS_PER_YEAR,
    HOURS_PER_DAY,
    Month,
    as_month,
    hour,
)
from isq_units.catalog.prefixes import mag, milli
from isq_units.catalog.si import KILOGRAM, SI, SI_UNIT
from isq_units.models import dimension as dv
from isq_units.models.dimension import Dimension
from isq_units.models.measurement import MeasurementSystem, cs_make
from isq_units.models.quantity import q_unit
from isq_units.services.conversion import register_schema, scale_ms

MHC_UNIT = "MHC"

MHC = cs_make({
    Dimension.MASS: mag(milli(milli(KILOGRAM))),
    Dimension.TEMPERATURE: -272.15,
    Dimension.TIME: mag(hour(SI, SI_UNIT)),
})
register_schema(MHC_UNIT, MHC)

MGRAM = MeasurementSystem(q_unit(dv.MASS), MHC, MHC_UNIT)
MHOUR = MeasurementSystem(q_unit(dv.TIME), MHC, MHC_UNIT)
MCELCIUS = MeasurementSystem(q_unit(dv.TEMP), MHC, MHC_UNIT)


@cache
def hDAY() -> MeasurementSystem:
    return scale_ms(HOURS_PER_DAY, MHOUR)


@cache
def hWEEK() -> MeasurementSystem:
    return scale_ms(DAYS_PER_WEEK, hDAY())


@cache
def hYEAR() -> MeasurementSystem:
    return scale_ms(DAYS_PER_YEAR, hDAY())


def hMONTH(m: Union[Month, int, str]) -> MeasurementSystem:
    """
    Length of a (non-leap) month in MHC hours

    Raises:
        UnknownMonthError: If m is not a month designator
    """
    return scale_ms(DAYS_PER_MONTH[as_month(m)], hDAY())


def every_x_hours(times_a_day: int) -> float:
    """
    Interval in hours between doses taken `times_a_day` times a day

    Example:
        every_x_hours(3) -> 8.0
    """
    if times_a_day < 1:
        raise ValueError(f"times_a_day must be a positive integer, got {times_a_day}")
    return mag(scale_ms(1 / mag(scale_ms(times_a_day, MHOUR)), hDAY()))
