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
Time granularities parameterised by conversion schema, and calendar constants

second(cs, u) is the unit of time in schema cs with label u; minute and hour
scale it. Calendar constants follow the non-leap Gregorian calendar.
"""

from enum import Enum
from typing import Dict, Union

from isq_units.exceptions import UnknownMonthError
from isq_units.models.measurement import ConversionSchema, MeasurementSystem
from isq_units.models.quantity import q_unit
from isq_units.models.dimension import TIME
from isq_units.services.conversion import scale_ms

SECONDS_PER_MINUTE = 60
MINUTES_PER_HOUR = 60
HOURS_PER_DAY = 24
DAYS_PER_WEEK = 7
DAYS_PER_YEAR = 365


class Month(int, Enum):
    JANUARY = 1
    FEBRUARY = 2
    MARCH = 3
    APRIL = 4
    MAY = 5
    JUNE = 6
    JULY = 7
    AUGUST = 8
    SEPTEMBER = 9
    OCTOBER = 10
    NOVEMBER = 11
    DECEMBER = 12


DAYS_PER_MONTH: Dict[Month, int] = {
    Month.JANUARY: 31,
    Month.FEBRUARY: 28,
    Month.MARCH: 31,
    Month.APRIL: 30,
    Month.MAY: 31,
    Month.JUNE: 30,
    Month.JULY: 31,
    Month.AUGUST: 31,
    Month.SEPTEMBER: 30,
    Month.OCTOBER: 31,
    Month.NOVEMBER: 30,
    Month.DECEMBER: 31,
}


def as_month(which: Union[Month, int, str]) -> Month:
    """
    Resolve a month designator

    Args:
        which: Month member, number 1-12, or name (case-insensitive, e.g. "february")

    Raises:
        UnknownMonthError: If the designator is not a month
    """
    if isinstance(which, Month):
        return which
    if isinstance(which, str):
        try:
            return Month[which.strip().upper()]
        except KeyError:
            raise UnknownMonthError(f"Unknown month: {which!r}") from None
    if isinstance(which, int) and not isinstance(which, bool):
        try:
            return Month(which)
        except ValueError:
            raise UnknownMonthError(f"Unknown month: {which!r} (expected 1-12)") from None
    raise UnknownMonthError(f"Unknown month: {which!r}")


def second(cs: ConversionSchema, u: str) -> MeasurementSystem:
    return MeasurementSystem(q_unit(TIME), cs, u)


def minute(cs: ConversionSchema, u: str) -> MeasurementSystem:
    return scale_ms(SECONDS_PER_MINUTE, second(cs, u))


def hour(cs: ConversionSchema, u: str) -> MeasurementSystem:
    return scale_ms(MINUTES_PER_HOUR, scale_ms(SECONDS_PER_MINUTE, second(cs, u)))
