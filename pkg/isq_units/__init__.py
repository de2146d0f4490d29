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
ISQ Units - dimensional analysis over the International System of Quantities

Quantities carry a magnitude and a dimension vector; measurement systems add a
conversion schema (SI, BIS, CGS, MHC, ...) and a unit label. Mixed-system
arithmetic converts the second operand into the first one's system.

Usage:
    from isq_units import YARD, SI, ms_conv, si_dim_view
    from isq_units.catalog.si import SI_PASCAL

    ms_conv(YARD, SI).magnitude         # 0.9143993
    si_dim_view(SI_PASCAL())            # "kg / m * (s**2)"

Logging is disabled for library use; enable it with
    from loguru import logger; logger.enable("isq_units")
"""

from loguru import logger

from isq_units.catalog import BIS, CGS, MHC, SI, YARD, UnitCatalog, metrify, mph2mps
from isq_units.exceptions import DimensionMismatchError, UnitsError
from isq_units.models import ConversionSchema, Dimension, DimensionVector, MeasurementSystem, Quantity
from isq_units.services import ms_add, ms_conv, ms_div, ms_times, quant_conv, scale_ms, si_dim_view

__version__ = "0.1.0"

logger.disable("isq_units")

__all__ = [
    "Dimension",
    "DimensionVector",
    "Quantity",
    "ConversionSchema",
    "MeasurementSystem",
    "SI",
    "BIS",
    "CGS",
    "MHC",
    "YARD",
    "UnitCatalog",
    "metrify",
    "mph2mps",
    "quant_conv",
    "ms_conv",
    "ms_times",
    "ms_div",
    "ms_add",
    "scale_ms",
    "si_dim_view",
    "UnitsError",
    "DimensionMismatchError",
]
