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
ISQ Units Services

- conversion: conversion kernel, schema operators, measurement-system algebra
- expression: dimension rendering and unit-expression parsing
"""

from isq_units.services.conversion import (
    ms_add,
    ms_conv,
    ms_div,
    ms_inv,
    ms_itself_n,
    ms_neg,
    ms_sub,
    ms_times,
    quant_conv,
    scale_ms,
)
from isq_units.services.expression import dim_view, parse_unit, si_dim_view

__all__ = [
    "quant_conv",
    "ms_conv",
    "ms_times",
    "ms_div",
    "ms_inv",
    "ms_add",
    "ms_sub",
    "ms_neg",
    "ms_itself_n",
    "scale_ms",
    "dim_view",
    "si_dim_view",
    "parse_unit",
]
