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
Unit expressions: rendering dimension vectors and parsing unit strings

Rendering (dim_view) lists positive exponents, then " / " and the negated
negative exponents as a single denominator. Terms appear Mass first:

    energy   -> "kg * (m**2) / (s**2)"
    pressure -> "kg / m * (s**2)"          (kg per (m * s**2))

Parsing grammar:

    expr    := product ( "/" product )?
    product := factor ( "*" factor )*
    factor  := primary ( "**" int )?
    primary := symbol | "1" | "(" expr ")"

Every string dim_view emits parses back to the same vector.
"""

import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Optional, Tuple, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from isq_units.exceptions import BareMagnitudeError, UnitSyntaxError, UnknownUnitError
from isq_units.models.dimension import (
    DIMENSIONLESS,
    Dimension,
    DimensionVector,
    dv_div,
    dv_make,
    dv_mul,
    dv_pow,
)
from isq_units.models.measurement import MeasurementSystem
from isq_units.models.quantity import Quantity

# Display order of terms within numerator and denominator
VIEW_ORDER: Tuple[Dimension, ...] = (
    Dimension.MASS,
    Dimension.LENGTH,
    Dimension.TIME,
    Dimension.CURRENT,
    Dimension.TEMPERATURE,
    Dimension.AMOUNT_OF_SUBSTANCE,
    Dimension.LUMINOUS_INTENSITY,
)

_SYMBOL_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class DimensionNames(BaseModel):
    """Display symbol for each base dimension; symbols are distinct identifiers"""
    model_config = ConfigDict(frozen=True)

    length: str = Field(default="m", min_length=1)
    mass: str = Field(default="kg", min_length=1)
    time: str = Field(default="s", min_length=1)
    current: str = Field(default="A", min_length=1)
    temperature: str = Field(default="K", min_length=1)
    amount: str = Field(default="mol", min_length=1)
    luminosity: str = Field(default="cd", min_length=1)

    @model_validator(mode="after")
    def _check_symbols(self) -> "DimensionNames":
        symbols = [getattr(self, d.field) for d in Dimension]
        for symbol in symbols:
            if not _SYMBOL_PATTERN.match(symbol):
                raise ValueError(f"Dimension symbol must be an identifier: {symbol!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"Dimension symbols must be distinct: {symbols}")
        return self

    def __getitem__(self, dimension: Dimension) -> str:
        return getattr(self, dimension.field)

    def lookup(self) -> Dict[str, Dimension]:
        """symbol -> dimension"""
        return {getattr(self, d.field): d for d in Dimension}


SI_DIMENSION_NAMES = DimensionNames()
BIS_DIMENSION_NAMES = DimensionNames(length="yd", mass="lb", temperature="R")


# ============================================================================
# Rendering
# ============================================================================

def _term(symbol: str, exponent: int) -> str:
    return symbol if exponent == 1 else f"({symbol}**{exponent})"


def dim_view(names: DimensionNames, dv: DimensionVector) -> str:
    """
    Render a dimension vector with the given symbols

    Examples:
        dim_view(SI_DIMENSION_NAMES, ENERGY)   -> "kg * (m**2) / (s**2)"
        dim_view(SI_DIMENSION_NAMES, FREQUENCY) -> "1 / s"
        dim_view(SI_DIMENSION_NAMES, DIMENSIONLESS) -> "1"
    """
    numerator = [_term(names[d], dv[d]) for d in VIEW_ORDER if dv[d] > 0]
    denominator = [_term(names[d], -dv[d]) for d in VIEW_ORDER if dv[d] < 0]
    text = " * ".join(numerator) or "1"
    if denominator:
        text += " / " + " * ".join(denominator)
    return text


def si_dim_view(p: Union[Quantity, MeasurementSystem]) -> str:
    """
    dim_view with SI symbols for a quantity or measurement system

    Raises:
        BareMagnitudeError: For a bare number, which has no dimensions
    """
    if isinstance(p, MeasurementSystem):
        return dim_view(SI_DIMENSION_NAMES, p.dim)
    if isinstance(p, Quantity):
        return dim_view(SI_DIMENSION_NAMES, p.dim)
    raise BareMagnitudeError(f"A bare magnitude has no dimension vector: {p!r}")


# ============================================================================
# Syntax tree
# ============================================================================

@dataclass(frozen=True)
class Symbol:
    name: str
    offset: int


@dataclass(frozen=True)
class One:
    """The dimensionless literal "1" """
    offset: int


@dataclass(frozen=True)
class Power:
    base: "UnitExpr"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: Tuple["UnitExpr", ...]


@dataclass(frozen=True)
class Quotient:
    numerator: "UnitExpr"
    denominator: "UnitExpr"


UnitExpr = Union[Symbol, One, Power, Product, Quotient]

T = TypeVar("T")


def fold_expr(
    e: UnitExpr,
    leaf: Callable[[Symbol], T],
    one: Callable[[], T],
    times: Callable[[T, T], T],
    divide: Callable[[T, T], T],
    power: Callable[[T, int], T],
) -> T:
    """Evaluate a syntax tree bottom-up with the given algebra"""
    def go(node: UnitExpr) -> T:
        if isinstance(node, Symbol):
            return leaf(node)
        if isinstance(node, One):
            return one()
        if isinstance(node, Power):
            return power(go(node.base), node.exponent)
        if isinstance(node, Product):
            result = go(node.factors[0])
            for factor in node.factors[1:]:
                result = times(result, go(factor))
            return result
        if isinstance(node, Quotient):
            return divide(go(node.numerator), go(node.denominator))
        raise TypeError(f"Not a unit expression node: {node!r}")

    return go(e)


# ============================================================================
# Parsing
# ============================================================================

_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<pow>\*\*|\^)"
    r"|(?P<times>\*|·)"
    r"|(?P<div>/)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
    r"|(?P<int>[+-]?\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


class _Parser:
    """Recursive-descent parser over the token list"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = list(self._tokenize(text))
        self.index = 0

    def _byte_offset(self, char_offset: int) -> int:
        return len(self.text[:char_offset].encode("utf-8"))

    def error(self, message: str, char_offset: int) -> UnitSyntaxError:
        return UnitSyntaxError(message, self.text, self._byte_offset(char_offset))

    def _tokenize(self, text: str) -> Iterator[_Token]:
        position = 0
        while position < len(text):
            match = _TOKEN.match(text, position)
            if match is None:
                raise self.error(f"Unexpected character {text[position]!r}", position)
            if match.lastgroup != "ws":
                yield _Token(match.lastgroup, match.group(), position)
            position = match.end()

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> _Token:
        token = self.peek()
        if token is None:
            raise self.error(f"Expected {what} but the expression ended", len(self.text))
        if token.kind != kind:
            raise self.error(f"Expected {what}, found {token.text!r}", token.offset)
        return self.advance()

    def parse(self) -> UnitExpr:
        if not self.tokens:
            raise self.error("Empty unit expression", 0)
        expr = self.parse_expr()
        token = self.peek()
        if token is not None:
            if token.kind == "div":
                raise self.error("Only one '/' is allowed per expression; group the denominator with parentheses", token.offset)
            raise self.error(f"Unexpected {token.text!r}", token.offset)
        return expr

    def parse_expr(self) -> UnitExpr:
        numerator = self.parse_product()
        token = self.peek()
        if token is not None and token.kind == "div":
            self.advance()
            return Quotient(numerator, self.parse_product())
        return numerator

    def parse_product(self) -> UnitExpr:
        factors = [self.parse_factor()]
        while (token := self.peek()) is not None and token.kind == "times":
            self.advance()
            factors.append(self.parse_factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def parse_factor(self) -> UnitExpr:
        base = self.parse_primary()
        token = self.peek()
        if token is not None and token.kind == "pow":
            self.advance()
            exponent_token = self.expect("int", "an integer exponent")
            exponent = int(exponent_token.text)
            if exponent == 0:
                raise self.error("Exponent must be a non-zero integer", exponent_token.offset)
            return Power(base, exponent)
        return base

    def parse_primary(self) -> UnitExpr:
        token = self.peek()
        if token is None:
            raise self.error("Expected a unit symbol but the expression ended", len(self.text))
        if token.kind == "name":
            self.advance()
            return Symbol(token.text, self._byte_offset(token.offset))
        if token.kind == "int":
            if token.text != "1":
                raise self.error(f"Only the literal 1 may stand for a unit, found {token.text!r}", token.offset)
            self.advance()
            return One(self._byte_offset(token.offset))
        if token.kind == "lparen":
            self.advance()
            inner = self.parse_expr()
            self.expect("rparen", "')'")
            return inner
        raise self.error(f"Expected a unit symbol, found {token.text!r}", token.offset)


def parse_unit(text: str) -> UnitExpr:
    """
    Parse a unit expression

    Examples:
        parse_unit("kg * (m**2) / (s**2)")
        parse_unit("mile/hour")
        parse_unit("kg/(m*(s**2))")

    Raises:
        UnitSyntaxError: With the byte offset of the offending token
    """
    return _Parser(text).parse()


def expr_to_dv(e: UnitExpr, names: DimensionNames = SI_DIMENSION_NAMES) -> DimensionVector:
    """
    Dimension vector of an expression over dimension symbols

    Raises:
        UnknownUnitError: If a symbol is not one of the dimension names
    """
    table = names.lookup()

    def leaf(s: Symbol) -> DimensionVector:
        if s.name not in table:
            raise UnknownUnitError(s.name, table)
        return dv_make({table[s.name]: 1})

    return fold_expr(e, leaf, lambda: DIMENSIONLESS, dv_mul, dv_div, dv_pow)
