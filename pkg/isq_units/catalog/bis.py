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
British Imperial System

One BIS yard corresponds to 0.9143993 m, one pound to 0.453592338 kg and one
degree Rankine to 5/9 K. Every other dimension maps to 1.
"""

from functools import cache

from isq_units.catalog.granularity import hour
from isq_units.models import dimension as dv
from isq_units.models.dimension import Dimension
from isq_units.models.measurement import MeasurementSystem, cs_make
from isq_units.models.quantity import q_unit
from isq_units.services.conversion import ms_div, register_schema, scale_ms

BIS_UNIT = "BIS"

BIS = cs_make({
    Dimension.LENGTH: 0.9143993,
    Dimension.MASS: 0.453592338,
    Dimension.TEMPERATURE: 5 / 9,
})
register_schema(BIS_UNIT, BIS)

YARDS_PER_MILE = 1760
FEET_PER_YARD = 3
INCHES_PER_FOOT = 12

YARD = MeasurementSystem(q_unit(dv.LENGTH), BIS, BIS_UNIT)
BIS_POUND = MeasurementSystem(q_unit(dv.MASS), BIS, BIS_UNIT)
BIS_RANKINE = MeasurementSystem(q_unit(dv.TEMP), BIS, BIS_UNIT)
BIS_CUBIC_YARD = MeasurementSystem(q_unit(dv.VOLUME), BIS, BIS_UNIT)
BIS_YARD_PER_SECOND = MeasurementSystem(q_unit(dv.VELOCITY), BIS, BIS_UNIT)


@cache
def BIS_FOOT() -> MeasurementSystem:
    return scale_ms(1 / FEET_PER_YARD, YARD)


@cache
def BIS_INCH() -> MeasurementSystem:
    return scale_ms(1 / INCHES_PER_FOOT, BIS_FOOT())


@cache
def BIS_MILE() -> MeasurementSystem:
    return scale_ms(YARDS_PER_MILE, YARD)


@cache
def BIS_SQUARE_FOOT() -> MeasurementSystem:
    return BIS_FOOT() ** 2


@cache
def BIS_MILE_PER_HOUR() -> MeasurementSystem:
    """The BIS mile divided by the hour"""
    return ms_div(BIS_MILE(), hour(BIS, BIS_UNIT))
