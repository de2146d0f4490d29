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
Centimetre-gram-second system, derived from SI by schema scaling
"""

from isq_units.catalog.si import SI
from isq_units.models import dimension as dv
from isq_units.models.dimension import Dimension
from isq_units.models.measurement import MeasurementSystem
from isq_units.models.quantity import q_unit
from isq_units.services.conversion import cs_scale, register_schema

CGS_UNIT = "CGS"

CGS = cs_scale(0.001, cs_scale(0.01, SI, Dimension.LENGTH), Dimension.MASS)
register_schema(CGS_UNIT, CGS)

CGS_CENTIMETRE = MeasurementSystem(q_unit(dv.LENGTH), CGS, CGS_UNIT)
CGS_GRAM = MeasurementSystem(q_unit(dv.MASS), CGS, CGS_UNIT)
