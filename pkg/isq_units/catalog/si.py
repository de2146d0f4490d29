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
SI catalog

Unit quantities for the 22 predefined dimension vectors, the seven base
measurement systems as constants, and the coherent derived systems as lazily
evaluated, memoized constant functions.
"""

from functools import cache

from isq_units.models import dimension as dv
from isq_units.models.measurement import CONV_ID, MeasurementSystem
from isq_units.models.quantity import q_unit
from isq_units.services.conversion import scale_ms

SI = CONV_ID
SI_UNIT = "SI"

# ============================================================================
# Unit quantities (magnitude 1)
# ============================================================================

UNIT_LENGTH = q_unit(dv.LENGTH)
UNIT_MASS = q_unit(dv.MASS)
UNIT_TIME = q_unit(dv.TIME)
UNIT_CURRENT = q_unit(dv.CURRENT)
UNIT_TEMP = q_unit(dv.TEMP)
UNIT_AMOUNT = q_unit(dv.AMOUNT)
UNIT_LUMINOSITY = q_unit(dv.LUMINOSITY)

UNIT_AREA = q_unit(dv.AREA)
UNIT_VOLUME = q_unit(dv.VOLUME)
UNIT_FREQUENCY = q_unit(dv.FREQUENCY)
UNIT_VELOCITY = q_unit(dv.VELOCITY)
UNIT_ACCELERATION = q_unit(dv.ACCELERATION)
UNIT_ENERGY = q_unit(dv.ENERGY)
UNIT_POWER = q_unit(dv.POWER)
UNIT_FORCE = q_unit(dv.FORCE)
UNIT_PRESSURE = q_unit(dv.PRESSURE)
UNIT_CHARGE = q_unit(dv.CHARGE)
UNIT_POTENTIAL_DIFFERENCE = q_unit(dv.POTENTIAL_DIFFERENCE)
UNIT_CAPACITANCE = q_unit(dv.CAPACITANCE)
UNIT_RADIAN = q_unit(dv.RADIAN)
UNIT_STERADIAN = q_unit(dv.STERADIAN)
UNIT_WATTAGE = q_unit(dv.WATTAGE)

# ============================================================================
# Base measurement systems
# ============================================================================

METRE = MeasurementSystem(UNIT_LENGTH, SI, SI_UNIT)
KILOGRAM = MeasurementSystem(UNIT_MASS, SI, SI_UNIT)
SECOND = MeasurementSystem(UNIT_TIME, SI, SI_UNIT)
AMPERE = MeasurementSystem(UNIT_CURRENT, SI, SI_UNIT)
KELVIN = MeasurementSystem(UNIT_TEMP, SI, SI_UNIT)
MOLE = MeasurementSystem(UNIT_AMOUNT, SI, SI_UNIT)
CANDELA = MeasurementSystem(UNIT_LUMINOSITY, SI, SI_UNIT)

# ============================================================================
# Derived measurement systems (not computed at import time)
# ============================================================================


@cache
def SI_AREA() -> MeasurementSystem:
    return MeasurementSystem(UNIT_AREA, SI, SI_UNIT)


@cache
def SI_VOLUME() -> MeasurementSystem:
    return MeasurementSystem(UNIT_VOLUME, SI, SI_UNIT)


@cache
def SI_HERTZ() -> MeasurementSystem:
    return MeasurementSystem(UNIT_FREQUENCY, SI, SI_UNIT)


@cache
def SI_VELOCITY() -> MeasurementSystem:
    return MeasurementSystem(UNIT_VELOCITY, SI, SI_UNIT)


@cache
def SI_ACCELERATION() -> MeasurementSystem:
    return MeasurementSystem(UNIT_ACCELERATION, SI, SI_UNIT)


@cache
def SI_JOULE() -> MeasurementSystem:
    return MeasurementSystem(UNIT_ENERGY, SI, SI_UNIT)


@cache
def SI_WATT() -> MeasurementSystem:
    return MeasurementSystem(UNIT_POWER, SI, SI_UNIT)


@cache
def SI_NEWTON() -> MeasurementSystem:
    return MeasurementSystem(UNIT_FORCE, SI, SI_UNIT)


@cache
def SI_PASCAL() -> MeasurementSystem:
    return MeasurementSystem(UNIT_PRESSURE, SI, SI_UNIT)


@cache
def SI_COULOMB() -> MeasurementSystem:
    return MeasurementSystem(UNIT_CHARGE, SI, SI_UNIT)


@cache
def SI_VOLT() -> MeasurementSystem:
    return MeasurementSystem(UNIT_POTENTIAL_DIFFERENCE, SI, SI_UNIT)


@cache
def SI_FARAD() -> MeasurementSystem:
    return MeasurementSystem(UNIT_CAPACITANCE, SI, SI_UNIT)


@cache
def SI_RADIAN() -> MeasurementSystem:
    return MeasurementSystem(UNIT_RADIAN, SI, SI_UNIT)


@cache
def SI_STERADIAN() -> MeasurementSystem:
    return MeasurementSystem(UNIT_STERADIAN, SI, SI_UNIT)


@cache
def SI_WATTAGE() -> MeasurementSystem:
    return MeasurementSystem(UNIT_WATTAGE, SI, SI_UNIT)


# ============================================================================
# Imperial lengths expressed in SI
# ============================================================================


@cache
def SI_YARD() -> MeasurementSystem:
    return scale_ms(0.9144, METRE)


@cache
def SI_FOOT() -> MeasurementSystem:
    return scale_ms(1 / 3, SI_YARD())


@cache
def SI_INCH() -> MeasurementSystem:
    return scale_ms(1 / 12, SI_FOOT())


@cache
def SI_MILE() -> MeasurementSystem:
    return scale_ms(1760, SI_YARD())
