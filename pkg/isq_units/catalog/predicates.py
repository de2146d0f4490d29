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
Typed measurement-system predicates

SI-typed predicates hold when the dimension vector matches AND the schema is
SI AND the unit label is "SI". MHC application types only check the dimension
within the MHC schema. The magnitude never matters.

Usage:
    is_pressure(ms_div(KILOGRAM, SI_ACCELERATION()))   # False
    get_predicate("Pressure")(SI_PASCAL())              # True
"""

from typing import Callable, Dict

from isq_units.catalog.mhc import MHC
from isq_units.catalog.si import SI, SI_UNIT
from isq_units.exceptions import UnknownPredicateError
from isq_units.models import dimension as dv
from isq_units.models.dimension import DimensionVector
from isq_units.models.measurement import MeasurementSystem

Predicate = Callable[[MeasurementSystem], bool]


def _si_typed(vector: DimensionVector, name: str) -> Predicate:
    def predicate(ms: MeasurementSystem) -> bool:
        return ms.dim == vector and ms.schema == SI and ms.unit == SI_UNIT

    predicate.__name__ = f"is_{name}"
    predicate.__doc__ = f"SI measurement system of dimension {vector.signature()}"
    return predicate


def _mhc_typed(vector: DimensionVector, name: str) -> Predicate:
    def predicate(ms: MeasurementSystem) -> bool:
        return ms.schema == MHC and ms.dim == vector

    predicate.__name__ = f"is_{name}"
    predicate.__doc__ = f"MHC measurement system of dimension {vector.signature()}"
    return predicate


is_metre = _si_typed(dv.LENGTH, "metre")
is_kilogram = _si_typed(dv.MASS, "kilogram")
is_second = _si_typed(dv.TIME, "second")
is_ampere = _si_typed(dv.CURRENT, "ampere")
is_kelvin = _si_typed(dv.TEMP, "kelvin")
is_mole = _si_typed(dv.AMOUNT, "mole")
is_candela = _si_typed(dv.LUMINOSITY, "candela")

is_area = _si_typed(dv.AREA, "area")
is_volume = _si_typed(dv.VOLUME, "volume")
is_frequency = _si_typed(dv.FREQUENCY, "frequency")
is_velocity = _si_typed(dv.VELOCITY, "velocity")
is_acceleration = _si_typed(dv.ACCELERATION, "acceleration")
is_energy = _si_typed(dv.ENERGY, "energy")
is_power = _si_typed(dv.POWER, "power")
is_force = _si_typed(dv.FORCE, "force")
is_pressure = _si_typed(dv.PRESSURE, "pressure")
is_charge = _si_typed(dv.CHARGE, "charge")
is_potential_difference = _si_typed(dv.POTENTIAL_DIFFERENCE, "potential_difference")
is_capacitance = _si_typed(dv.CAPACITANCE, "capacitance")
is_radian = _si_typed(dv.RADIAN, "radian")
is_steradian = _si_typed(dv.STERADIAN, "steradian")
is_wattage = _si_typed(dv.WATTAGE, "wattage")

is_milligram = _mhc_typed(dv.MASS, "milligram")
is_hour = _mhc_typed(dv.TIME, "hour")
is_celcius = _mhc_typed(dv.TEMP, "celcius")


PREDICATES: Dict[str, Predicate] = {
    "Metre": is_metre,
    "Kilogram": is_kilogram,
    "Second": is_second,
    "Ampere": is_ampere,
    "Kelvin": is_kelvin,
    "Mole": is_mole,
    "Candela": is_candela,
    "Area": is_area,
    "Volume": is_volume,
    "Frequency": is_frequency,
    "Velocity": is_velocity,
    "Acceleration": is_acceleration,
    "Energy": is_energy,
    "Power": is_power,
    "Force": is_force,
    "Pressure": is_pressure,
    "Charge": is_charge,
    "PotentialDifference": is_potential_difference,
    "Capacitance": is_capacitance,
    "Radian": is_radian,
    "Steradian": is_steradian,
    "Wattage": is_wattage,
    "Milligram": is_milligram,
    "Hour": is_hour,
    "Celcius": is_celcius,
}


def get_predicate(name: str) -> Predicate:
    """
    Look up a typed predicate by name ("Pressure", "is_pressure", "pressure")

    Raises:
        UnknownPredicateError: If no predicate has that name
    """
    key = name.strip()
    if key.lower().startswith("is_"):
        key = key[3:]
    for candidate, predicate in PREDICATES.items():
        if candidate.lower() == key.replace("_", "").lower():
            return predicate
    raise UnknownPredicateError(name, PREDICATES)
