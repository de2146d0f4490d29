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
A few SI defining constants (2019 redefinition values)
"""

from functools import cache

from isq_units.catalog.si import SI_HERTZ, SI_JOULE, SI_VELOCITY, SECOND
from isq_units.services.conversion import ms_times, scale_ms

SPEED_OF_LIGHT_VALUE = 299792458.0           # m/s
CAESIUM_FREQUENCY_VALUE = 9192631770.0       # Hz
PLANCK_VALUE = 6.62607015e-34                # J s


@cache
def SPEED_OF_LIGHT():
    return scale_ms(SPEED_OF_LIGHT_VALUE, SI_VELOCITY())


@cache
def CAESIUM_FREQUENCY():
    return scale_ms(CAESIUM_FREQUENCY_VALUE, SI_HERTZ())


@cache
def PLANCK():
    return scale_ms(PLANCK_VALUE, ms_times(SI_JOULE(), SECOND))
