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
ISQ Units Catalog

Named conversion schemas (SI, BIS, CGS, MHC) and their measurement systems,
decimal prefixes, time granularity, typed predicates and the registry file.
"""

from isq_units.catalog.bis import BIS, BIS_UNIT, YARD
from isq_units.catalog.cgs import CGS, CGS_UNIT
from isq_units.catalog.mhc import MHC, MHC_UNIT
from isq_units.catalog.prefixes import metrify, mph2mps
from isq_units.catalog.registry import UnitCatalog, export_registry, load_registry
from isq_units.catalog.si import SI, SI_UNIT

__all__ = [
    "SI",
    "SI_UNIT",
    "BIS",
    "BIS_UNIT",
    "CGS",
    "CGS_UNIT",
    "MHC",
    "MHC_UNIT",
    "YARD",
    "metrify",
    "mph2mps",
    "UnitCatalog",
    "export_registry",
    "load_registry",
]
