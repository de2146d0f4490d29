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
unitc - command-line front end

Usage:
    unitc convert 20 "mile/hour" --to "m/s"
    unitc dim "Pa"
    unitc systems --structured > my_units.jsonl
    unitc check "kg/(m*(s**2))" Pressure

Exit codes:
    0  success
    1  unexpected error, usage error or magnitude out of float range
    2  unit expression does not parse
    3  dimension mismatch
    4  unknown unit, predicate or month

stdout carries results only; diagnostics go to stderr through loguru.
"""

import argparse
import math
import os
import sys
from typing import Callable, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from isq_units import __version__
from isq_units.catalog.predicates import get_predicate
from isq_units.catalog.registry import UnitCatalog, registry_lines
from isq_units.config import config_manager
from isq_units.config.manager import CONFIG_ENV, DEFAULT_CONFIG_PATH
from isq_units.config.schema import LOG_LEVELS, UnitcConfig
from isq_units.exceptions import (
    DimensionMismatchError,
    MagnitudeRangeError,
    UnitsError,
    UnitSyntaxError,
    UnknownMonthError,
    UnknownPredicateError,
    UnknownUnitError,
    UnitsZeroDivisionError,
)
from isq_units.services.conversion import ms_conv, scale_ms
from isq_units.services.expression import SI_DIMENSION_NAMES, dim_view

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_UNKNOWN = 4


# ============================================================================
# Structured output records
# ============================================================================

class ConvertRecord(BaseModel):
    """unitc convert --structured"""
    model_config = ConfigDict(populate_by_name=True)

    input: float = Field(..., description="Magnitude as given")
    from_: str = Field(..., alias="from", description="Source unit expression")
    to: str = Field(..., description="Target unit expression")
    output: float = Field(..., description="Converted magnitude in target units")
    dimension: str = Field(..., description="SI dimension string of both sides")
    factor: float = Field(..., description="Target units per one source unit")


class DimRecord(BaseModel):
    """unitc dim --structured"""
    expression: str
    dimension: str
    vector: Dict[str, int] = Field(..., description="Non-zero exponents by dimension name")


class CheckRecord(BaseModel):
    """unitc check --structured"""
    expression: str
    predicate: str
    result: bool


def _emit(record: BaseModel):
    print(record.model_dump_json(by_alias=True))


def format_magnitude(x: float, digits: int) -> str:
    """Human-mode number: up to `digits` significant digits, trailing zeros trimmed"""
    return f"{x:.{digits}g}"


# ============================================================================
# Commands
# ============================================================================

def cmd_convert(args: argparse.Namespace, catalog: UnitCatalog, settings: UnitcConfig) -> int:
    source = catalog.resolve(args.source)
    target = catalog.resolve(args.target)
    if source.dim != target.dim:
        raise DimensionMismatchError(source.dim, target.dim, "convert")
    if target.magnitude == 0:
        raise UnitsZeroDivisionError(f"Target unit {args.target!r} has zero magnitude")

    output = ms_conv(scale_ms(args.magnitude, source), target.schema, target.unit).magnitude / target.magnitude
    factor = ms_conv(source, target.schema, target.unit).magnitude / target.magnitude
    if not (math.isfinite(output) and math.isfinite(factor)):
        raise MagnitudeRangeError(f"Converting {args.source!r} to {args.target!r} leaves the float range")
    logger.debug(f"convert {args.source} -> {args.target}: factor {factor!r}")

    if _structured(args, settings):
        _emit(ConvertRecord(
            input=args.magnitude,
            from_=args.source,
            to=args.target,
            output=output,
            dimension=dim_view(SI_DIMENSION_NAMES, source.dim),
            factor=factor,
        ))
    else:
        print(f"{format_magnitude(output, settings.output.significant_digits)} {args.target}")
    return EXIT_OK


def cmd_dim(args: argparse.Namespace, catalog: UnitCatalog, settings: UnitcConfig) -> int:
    ms = catalog.resolve(args.expression)
    text = dim_view(SI_DIMENSION_NAMES, ms.dim)
    if _structured(args, settings):
        _emit(DimRecord(
            expression=args.expression,
            dimension=text,
            vector={d.value: e for d, e in ms.dim.items() if e},
        ))
    else:
        print(text)
    return EXIT_OK


def cmd_systems(args: argparse.Namespace, catalog: UnitCatalog, settings: UnitcConfig) -> int:
    systems = catalog.systems()
    if _structured(args, settings):
        for line in registry_lines(systems):
            print(line)
        return EXIT_OK

    digits = settings.output.significant_digits
    width = max(len(name) for name in systems)
    for name, ms in systems.items():
        magnitude = format_magnitude(ms.magnitude, digits)
        print(f"{name:<{width}}  {ms.unit:<4} {magnitude:>12}  {dim_view(SI_DIMENSION_NAMES, ms.dim)}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace, catalog: UnitCatalog, settings: UnitcConfig) -> int:
    predicate = get_predicate(args.predicate)
    result = predicate(catalog.resolve(args.expression))
    if _structured(args, settings):
        _emit(CheckRecord(expression=args.expression, predicate=args.predicate, result=result))
    else:
        print("true" if result else "false")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, UnitCatalog, UnitcConfig], int]] = {
    "convert": cmd_convert,
    "dim": cmd_dim,
    "systems": cmd_systems,
    "check": cmd_check,
}


def _structured(args: argparse.Namespace, settings: UnitcConfig) -> bool:
    return args.structured or settings.output.mode == "structured"


# ============================================================================
# Argument parsing
# ============================================================================

class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_ERROR; 2 is reserved for unit syntax errors"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"magnitude must be finite: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="unitc", description="Convert and inspect ISQ quantities")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help=f"Config file (default: ${CONFIG_ENV} or {DEFAULT_CONFIG_PATH})")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        help="loguru level for stderr diagnostics (default from config: WARNING)",
    )

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    convert = sub.add_parser("convert", help="Convert a magnitude between unit expressions")
    convert.add_argument("magnitude", type=_finite_float, help="Magnitude in source units")
    convert.add_argument("source", metavar="FROM", help='Source unit expression, e.g. "mile/hour"')
    convert.add_argument("--to", dest="target", required=True, metavar="TO", help='Target unit expression, e.g. "m/s"')

    dim = sub.add_parser("dim", help="Show the dimension of a unit expression")
    dim.add_argument("expression", metavar="EXPR")

    systems = sub.add_parser("systems", help="List the named measurement systems")

    check = sub.add_parser("check", help="Evaluate a typed predicate on a unit expression")
    check.add_argument("expression", metavar="EXPR")
    check.add_argument("predicate", metavar="PREDICATE", help="e.g. Pressure, Energy, Hour")

    for command in (convert, dim, systems, check):
        command.add_argument("--structured", action="store_true", help="Print one JSON record per line")

    return parser


def configure_logging(level: str):
    """Single stderr sink for the CLI"""
    logger.remove()
    logger.enable("isq_units")
    logger.add(sys.stderr, level=level.upper(), format="<level>{level}</level>: {message}")


# ============================================================================
# Entry point
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging("WARNING")

    try:
        config_manager.use(args.config or os.environ.get(CONFIG_ENV) or DEFAULT_CONFIG_PATH)
        settings = config_manager.config
        configure_logging(args.log_level or settings.logging.level)
        catalog = UnitCatalog.from_registry_file(settings.catalog.registry_path)
        return COMMANDS[args.command](args, catalog, settings)
    except UnitSyntaxError as e:
        logger.error(str(e))
        return EXIT_PARSE
    except DimensionMismatchError as e:
        logger.error(
            f"Dimension mismatch in {e.operation}: "
            f"'{dim_view(SI_DIMENSION_NAMES, e.left)}' vs '{dim_view(SI_DIMENSION_NAMES, e.right)}'"
        )
        return EXIT_DIMENSION
    except (UnknownUnitError, UnknownPredicateError, UnknownMonthError) as e:
        logger.error(str(e))
        return EXIT_UNKNOWN
    except (UnitsError, ValidationError, ValueError, ArithmeticError, OSError) as e:
        logger.error(str(e))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
