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
Catalog registry

Named measurement systems, the unit-name table used to resolve unit
expressions, and the JSON Lines registry file shared by the CLI and
user-defined systems.

Registry file format (one JSON object per line, keys in this order):

    {"name": "YARD", "unit": "BIS",
     "schema": {"Length": 0.9143993, "Mass": 0.453592338, ...},
     "dim": {"Length": 1, "Mass": 0, ...},
     "magnitude": 1.0}

Blank lines and lines starting with '#' are ignored.

Usage:
    catalog = UnitCatalog.from_registry_file("my_units.jsonl")
    ms = catalog.resolve("mile/hour")
"""

import json
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Optional, TextIO, Union

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from isq_units.catalog import bis, cgs, granularity, mhc, si
from isq_units.catalog.prefixes import centi, kilo, milli
from isq_units.exceptions import RegistryError, UnitsError, UnknownUnitError
from isq_units.models.dimension import Dimension, dv_make
from isq_units.models.measurement import MeasurementSystem, cs_make
from isq_units.models.quantity import Quantity
from isq_units.services.conversion import ms_div, ms_itself_n, ms_times, scale_ms
from isq_units.services.expression import Symbol, UnitExpr, fold_expr, parse_unit

SystemFactory = Callable[[], MeasurementSystem]


def _const(ms: MeasurementSystem) -> SystemFactory:
    return lambda: ms


SI_SYSTEMS: Dict[str, SystemFactory] = {
    "METRE": _const(si.METRE),
    "KILOGRAM": _const(si.KILOGRAM),
    "SECOND": _const(si.SECOND),
    "AMPERE": _const(si.AMPERE),
    "KELVIN": _const(si.KELVIN),
    "MOLE": _const(si.MOLE),
    "CANDELA": _const(si.CANDELA),
    "SI_AREA": si.SI_AREA,
    "SI_VOLUME": si.SI_VOLUME,
    "SI_HERTZ": si.SI_HERTZ,
    "SI_VELOCITY": si.SI_VELOCITY,
    "SI_ACCELERATION": si.SI_ACCELERATION,
    "SI_JOULE": si.SI_JOULE,
    "SI_WATT": si.SI_WATT,
    "SI_NEWTON": si.SI_NEWTON,
    "SI_PASCAL": si.SI_PASCAL,
    "SI_COULOMB": si.SI_COULOMB,
    "SI_VOLT": si.SI_VOLT,
    "SI_FARAD": si.SI_FARAD,
    "SI_RADIAN": si.SI_RADIAN,
    "SI_STERADIAN": si.SI_STERADIAN,
    "SI_WATTAGE": si.SI_WATTAGE,
}

BIS_SYSTEMS: Dict[str, SystemFactory] = {
    "YARD": _const(bis.YARD),
    "BIS_POUND": _const(bis.BIS_POUND),
    "BIS_RANKINE": _const(bis.BIS_RANKINE),
    "BIS_CUBIC_YARD": _const(bis.BIS_CUBIC_YARD),
    "BIS_YARD_PER_SECOND": _const(bis.BIS_YARD_PER_SECOND),
}

CGS_SYSTEMS: Dict[str, SystemFactory] = {
    "CGS_CENTIMETRE": _const(cgs.CGS_CENTIMETRE),
    "CGS_GRAM": _const(cgs.CGS_GRAM),
}

MHC_SYSTEMS: Dict[str, SystemFactory] = {
    "MGRAM": _const(mhc.MGRAM),
    "MHOUR": _const(mhc.MHOUR),
    "MCELCIUS": _const(mhc.MCELCIUS),
}

DERIVED_SYSTEMS: Dict[str, SystemFactory] = {
    "SI_YARD": si.SI_YARD,
    "SI_FOOT": si.SI_FOOT,
    "SI_INCH": si.SI_INCH,
    "SI_MILE": si.SI_MILE,
    "SI_MINUTE": lambda: granularity.minute(si.SI, si.SI_UNIT),
    "SI_HOUR": lambda: granularity.hour(si.SI, si.SI_UNIT),
    "BIS_FOOT": bis.BIS_FOOT,
    "BIS_INCH": bis.BIS_INCH,
    "BIS_MILE": bis.BIS_MILE,
    "BIS_SQUARE_FOOT": bis.BIS_SQUARE_FOOT,
    "BIS_MILE_PER_HOUR": bis.BIS_MILE_PER_HOUR,
    "MHC_DAY": mhc.hDAY,
    "MHC_WEEK": mhc.hWEEK,
    "MHC_YEAR": mhc.hYEAR,
}

BUILTIN_SYSTEMS: Dict[str, SystemFactory] = {
    **SI_SYSTEMS,
    **BIS_SYSTEMS,
    **CGS_SYSTEMS,
    **MHC_SYSTEMS,
    **DERIVED_SYSTEMS,
}


def _si_day() -> MeasurementSystem:
    return scale_ms(granularity.HOURS_PER_DAY, granularity.hour(si.SI, si.SI_UNIT))


# Short names accepted in unit expressions, next to every registry name
UNIT_ALIASES: Dict[str, SystemFactory] = {
    "m": _const(si.METRE),
    "metre": _const(si.METRE),
    "meter": _const(si.METRE),
    "kg": _const(si.KILOGRAM),
    "kilogram": _const(si.KILOGRAM),
    "s": _const(si.SECOND),
    "second": _const(si.SECOND),
    "A": _const(si.AMPERE),
    "K": _const(si.KELVIN),
    "mol": _const(si.MOLE),
    "cd": _const(si.CANDELA),
    "km": lambda: kilo(si.METRE),
    "cm": lambda: centi(si.METRE),
    "g": lambda: milli(si.KILOGRAM),
    "mg": lambda: milli(milli(si.KILOGRAM)),
    "J": si.SI_JOULE,
    "Pa": si.SI_PASCAL,
    "W": si.SI_WATT,
    "N": si.SI_NEWTON,
    "Hz": si.SI_HERTZ,
    "C": si.SI_COULOMB,
    "V": si.SI_VOLT,
    "F": si.SI_FARAD,
    "rad": si.SI_RADIAN,
    "sr": si.SI_STERADIAN,
    "yard": _const(bis.YARD),
    "yd": _const(bis.YARD),
    "foot": bis.BIS_FOOT,
    "ft": bis.BIS_FOOT,
    "inch": bis.BIS_INCH,
    "in": bis.BIS_INCH,
    "mile": bis.BIS_MILE,
    "mi": bis.BIS_MILE,
    "pound": _const(bis.BIS_POUND),
    "lb": _const(bis.BIS_POUND),
    "rankine": _const(bis.BIS_RANKINE),
    "R": _const(bis.BIS_RANKINE),
    "minute": lambda: granularity.minute(si.SI, si.SI_UNIT),
    "min": lambda: granularity.minute(si.SI, si.SI_UNIT),
    "hour": lambda: granularity.hour(si.SI, si.SI_UNIT),
    "h": lambda: granularity.hour(si.SI, si.SI_UNIT),
    "day": _si_day,
    "week": lambda: scale_ms(granularity.DAYS_PER_WEEK, _si_day()),
    "year": lambda: scale_ms(granularity.DAYS_PER_YEAR, _si_day()),
}


# ============================================================================
# Registry records
# ============================================================================

class RegistryRecord(BaseModel):
    """One line of the registry file"""
    name: str = Field(pattern=r"^[A-Za-z_][A-Za-z0-9_]*$")
    unit: str = Field(min_length=1)
    schema_: Dict[str, float] = Field(alias="schema")
    dim: Dict[str, int]
    magnitude: float

    @classmethod
    def from_system(cls, name: str, ms: MeasurementSystem) -> "RegistryRecord":
        return cls(
            name=name,
            unit=ms.unit,
            schema={d.value: f for d, f in ms.schema.items()},
            dim={d.value: e for d, e in ms.dim.items()},
            magnitude=ms.magnitude,
        )

    def to_system(self) -> MeasurementSystem:
        schema = cs_make({Dimension(k): v for k, v in self.schema_.items()})
        vector = dv_make({Dimension(k): v for k, v in self.dim.items()})
        return MeasurementSystem(Quantity(self.magnitude, vector), schema, self.unit)

    def to_line(self) -> str:
        return self.model_dump_json(by_alias=True)


def builtin_systems() -> Dict[str, MeasurementSystem]:
    """Every built-in named system, evaluated"""
    return {name: factory() for name, factory in BUILTIN_SYSTEMS.items()}


def registry_lines(systems: Optional[Mapping[str, MeasurementSystem]] = None) -> List[str]:
    systems = builtin_systems() if systems is None else systems
    return [RegistryRecord.from_system(name, ms).to_line() for name, ms in systems.items()]


def export_registry(
    target: Union[str, Path, TextIO],
    systems: Optional[Mapping[str, MeasurementSystem]] = None,
) -> int:
    """
    Write systems (default: all built-ins) as JSON Lines

    Args:
        target: File path or open text stream
        systems: name -> measurement system

    Returns:
        Number of records written
    """
    lines = registry_lines(systems)
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8") as f:
            f.writelines(line + "\n" for line in lines)
        logger.info(f"Registry exported to {target} ({len(lines)} systems)")
    else:
        target.writelines(line + "\n" for line in lines)
    return len(lines)


def parse_registry(text: str, source: str = "<registry>") -> Dict[str, MeasurementSystem]:
    """
    Parse registry JSON Lines

    Raises:
        RegistryError: With the source name and line number of a bad record
    """
    systems: Dict[str, MeasurementSystem] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            record = RegistryRecord.model_validate(json.loads(line))
            systems[record.name] = record.to_system()
        except json.JSONDecodeError as e:
            raise RegistryError(f"Invalid JSON: {e.msg}", source, number) from e
        except (ValidationError, ValueError) as e:
            raise RegistryError(f"Invalid record: {e}", source, number) from e
    return systems


def load_registry(path: Union[str, Path]) -> Dict[str, MeasurementSystem]:
    """
    Load a registry file

    Raises:
        RegistryError: If the file is missing or a record is malformed
    """
    registry_file = Path(path)
    if not registry_file.exists():
        raise RegistryError("Registry file not found", str(path))
    systems = parse_registry(registry_file.read_text(encoding="utf-8"), str(path))
    logger.debug(f"Loaded {len(systems)} systems from {path}")
    return systems


# ============================================================================
# Unit catalog (name resolution)
# ============================================================================

class UnitCatalog:
    """
    Name table for resolving unit expressions into measurement systems

    Registry names (built-in and user-supplied) and short aliases are
    accepted as symbols; user entries win over built-ins. Operators use the
    leading-operand rule, so "mile/hour" is expressed in BIS.
    """

    def __init__(self, extra: Optional[Mapping[str, MeasurementSystem]] = None):
        self._extra: Dict[str, MeasurementSystem] = dict(extra or {})
        self._table: Dict[str, SystemFactory] = {**UNIT_ALIASES, **BUILTIN_SYSTEMS}
        for name, ms in self._extra.items():
            self._table[name] = _const(ms)

    @classmethod
    def from_registry_file(cls, path: Optional[Union[str, Path]]) -> "UnitCatalog":
        if not path:
            return cls()
        return cls(load_registry(path))

    def names(self) -> List[str]:
        return sorted(self._table)

    def systems(self) -> Dict[str, MeasurementSystem]:
        """Registry entries (built-ins overlaid by user entries), without aliases"""
        return {**builtin_systems(), **self._extra}

    def lookup(self, name: str) -> MeasurementSystem:
        """
        Raises:
            UnknownUnitError: If name is neither an alias nor a registry name
        """
        factory = self._table.get(name)
        if factory is None:
            raise UnknownUnitError(name, self._table)
        return factory()

    def resolve(self, expression: Union[str, UnitExpr]) -> MeasurementSystem:
        """
        Measurement system denoted by a unit expression

        Raises:
            UnitSyntaxError: If the text does not parse
            UnknownUnitError: If a symbol is unknown
        """
        expr = parse_unit(expression) if isinstance(expression, str) else expression

        def leaf(symbol: Symbol) -> MeasurementSystem:
            return self.lookup(symbol.name)

        def one() -> MeasurementSystem:
            return MeasurementSystem(Quantity(1.0), si.SI, si.SI_UNIT)

        result = fold_expr(expr, leaf, one, ms_times, ms_div, ms_itself_n)
        logger.debug(f"Resolved {expression!r} in {result.unit}: magnitude {result.magnitude!r}, {result.dim.signature()}")
        return result


__all__ = [
    "BUILTIN_SYSTEMS",
    "UNIT_ALIASES",
    "RegistryRecord",
    "UnitCatalog",
    "UnitsError",
    "builtin_systems",
    "export_registry",
    "load_registry",
    "parse_registry",
    "registry_lines",
]
