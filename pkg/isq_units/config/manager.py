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
Configuration Manager - Singleton pattern

Provides unified access to configuration with automatic validation.
Environment overrides:
    UNITC_CONFIG   path of the YAML config file (default: unitc.yaml)
    UNITC_CATALOG  registry file path, wins over catalog.registry_path
"""
import os
from pathlib import Path
from typing import Any, Optional

from loguru import logger

from .loader import load_config_dict, save_config_dict
from .schema import UnitcConfig

DEFAULT_CONFIG_PATH = "unitc.yaml"
CONFIG_ENV = "UNITC_CONFIG"
CATALOG_ENV = "UNITC_CATALOG"


def _deep_merge(base: dict, updates: dict) -> dict:
    for key, value in updates.items():
        if key in base and isinstance(base[key], dict) and isinstance(value, dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
    return base


class ConfigManager:
    """
    Configuration Manager (Singleton)

    Provides unified access to configuration with automatic validation.
    """
    _instance: Optional["ConfigManager"] = None

    def __new__(cls, config_path: Optional[str] = None):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self, config_path: Optional[str] = None):
        # Only initialize once
        if hasattr(self, "_initialized"):
            return

        self.config_path = Path(config_path or os.environ.get(CONFIG_ENV) or DEFAULT_CONFIG_PATH)
        self._config: Optional[UnitcConfig] = None
        self._initialized = True

    @property
    def config(self) -> UnitcConfig:
        """Current configuration, loaded on first access"""
        if self._config is None:
            self._config = self._load()
        return self._config

    def _load(self) -> UnitcConfig:
        """Load configuration from file, then apply environment overrides"""
        data = load_config_dict(str(self.config_path))
        registry = os.environ.get(CATALOG_ENV)
        if registry:
            logger.debug(f"{CATALOG_ENV} overrides catalog.registry_path: {registry}")
            data = _deep_merge(data, {"catalog": {"registry_path": registry}})
        return UnitcConfig(**data)

    def use(self, config_path: str):
        """Switch to another config file and reload"""
        self.config_path = Path(config_path)
        self.reload()

    def reload(self):
        """Reload configuration from file"""
        self._config = self._load()
        logger.debug("Configuration reloaded")

    def save(self):
        """Save current configuration to file"""
        save_config_dict(self.config.to_dict(), str(self.config_path))

    def update(self, updates: dict):
        """
        Update configuration with new values

        Args:
            updates: Dictionary of updates (e.g., {"output": {"mode": "structured"}})
        """
        merged = _deep_merge(self.config.to_dict(), updates)
        self._config = UnitcConfig(**merged)

    def get(self, key: str, default: Any = None) -> Any:
        """Dict-like access to a top-level section"""
        return self.config.to_dict().get(key, default)
