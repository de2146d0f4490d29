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
unitc Configuration System

Unified configuration management with Pydantic validation.

Usage:
    from isq_units.config import config_manager

    digits = config_manager.config.output.significant_digits
    config_manager.update({"output": {"mode": "structured"}})
    config_manager.save()
"""
from .loader import load_config_dict, save_config_dict
from .manager import CATALOG_ENV, CONFIG_ENV, ConfigManager
from .schema import CatalogConfig, LoggingConfig, OutputConfig, UnitcConfig

# Global singleton instance
config_manager = ConfigManager()

__all__ = [
    "UnitcConfig",
    "OutputConfig",
    "CatalogConfig",
    "LoggingConfig",
    "ConfigManager",
    "config_manager",
    "load_config_dict",
    "save_config_dict",
    "CONFIG_ENV",
    "CATALOG_ENV",
]
