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
Error hierarchy

Every error raised by the library derives from UnitsError and from the closest
builtin exception, so callers can catch either.
"""

from typing import Iterable, Optional


class UnitsError(Exception):
    """Base class for all isq_units errors"""


class DimensionMismatchError(UnitsError, ValueError):
    """Operands live in different dimension vectors"""

    def __init__(self, left, right, operation: str = "operation"):
        self.left = left
        self.right = right
        self.operation = operation
        super().__init__(
            f"Dimension mismatch in {operation}: {left.signature()} vs {right.signature()}"
        )


class UnitsZeroDivisionError(UnitsError, ZeroDivisionError):
    """Division by (or inversion of) a zero magnitude"""


class MagnitudeRangeError(UnitsError, ArithmeticError):
    """Magnitude overflowed or underflowed the float range"""


class ZeroScaleError(UnitsError, ValueError):
    """Conversion schema scaled by zero"""


class UnknownUnitError(UnitsError, KeyError):
    """Symbol not found in the active name table"""

    def __init__(self, symbol: str, known: Iterable[str]):
        self.symbol = symbol
        self.known = sorted(known)
        super().__init__(symbol)

    def __str__(self) -> str:
        return f"Unknown unit '{self.symbol}'. Known units: {', '.join(self.known)}"


class UnitSyntaxError(UnitsError, ValueError):
    """Malformed unit expression"""

    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} at offset {offset} in '{text}'")


class UnknownMonthError(UnitsError, ValueError):
    """Month designator is neither a month name nor 1-12"""


class UnknownPredicateError(UnitsError, KeyError):
    """Typed predicate name not registered"""

    def __init__(self, name: str, known: Iterable[str]):
        self.name = name
        self.known = sorted(known)
        super().__init__(name)

    def __str__(self) -> str:
        return f"Unknown predicate '{self.name}'. Known predicates: {', '.join(self.known)}"


class BareMagnitudeError(UnitsError, TypeError):
    """A bare magnitude carries no dimension vector"""


class RegistryError(UnitsError, ValueError):
    """Malformed catalog registry record"""

    def __init__(self, message: str, source: str, line: Optional[int] = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
