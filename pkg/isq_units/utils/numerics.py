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
Approximation utilities

approx() rounds half away from zero to a number of decimal places;
approx_eq() compares after rounding, so it is an equivalence relation for a
fixed order.
"""

import math
from decimal import ROUND_HALF_UP, Decimal, localcontext
from typing import Iterable


def _check_order(order: int):
    if order < 0:
        raise ValueError(f"Order must be a non-negative number of decimal places, got {order}")


def approx(x: float, order: int) -> float:
    """
    Round x half away from zero to `order` decimal places

    The shortest decimal representation of x is rounded, so approx(2.675, 2)
    is 2.68 as printed, not 2.67 as the binary value would suggest.
    The result is within 0.5 * 10 ** -order of the printed value of x; against
    the binary value that bound can be off by one ulp.

    Examples:
        >>> approx(3.14159, 2)
        3.14
        >>> approx(-2.5, 0)
        -3.0
    """
    _check_order(order)
    value = Decimal(repr(float(x)))
    with localcontext() as ctx:
        # quantize needs every integer digit plus `order` decimals
        ctx.prec = max(ctx.prec, value.adjusted() + order + 2)
        return float(value.quantize(Decimal(1).scaleb(-order), rounding=ROUND_HALF_UP))


def approx_eq(x: float, y: float, order: int) -> bool:
    """
    Equality after rounding both sides to `order` decimal places

    Examples:
        >>> approx_eq(math.pi, 3.14, 2)
        True
    """
    return approx(x, order) == approx(y, order)


def ceiling(r: float) -> int:
    """Smallest integer >= r"""
    return math.ceil(r)


def product(xs: Iterable[float]) -> float:
    """Product of every element (duplicates counted); empty -> 1"""
    return math.prod(xs, start=1.0)
