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
ISQ Units Models

Immutable value types: dimension vectors, quantities, conversion schemas and
measurement systems.
"""

from isq_units.models.dimension import Dimension, DimensionVector, dv_make
from isq_units.models.measurement import CONV_ID, ConversionSchema, MeasurementSystem, cs_make
from isq_units.models.quantity import Quantity, q_unit

__all__ = [
    "Dimension",
    "DimensionVector",
    "dv_make",
    "Quantity",
    "q_unit",
    "ConversionSchema",
    "CONV_ID",
    "cs_make",
    "MeasurementSystem",
]
