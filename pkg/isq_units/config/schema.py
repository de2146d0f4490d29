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
Configuration schema with Pydantic models

Single source of truth for all configuration defaults and validation.
"""
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class OutputConfig(BaseModel):
    """unitc output configuration"""
    mode: Literal["human", "structured"] = Field(default="human", description="Default output mode")
    significant_digits: int = Field(default=10, ge=1, le=17, description="Significant digits in human mode (1-17)")


class CatalogConfig(BaseModel):
    """Catalog configuration"""
    registry_path: Optional[str] = Field(default=None, description="Extra registry file (JSON Lines), optional")


class LoggingConfig(BaseModel):
    """Logging configuration"""
    level: str = Field(default="WARNING", description="loguru level for the stderr sink")

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level: {value}. Use one of {', '.join(LOG_LEVELS)}")
        return level


class UnitcConfig(BaseModel):
    """unitc main configuration"""
    output: OutputConfig = Field(default_factory=OutputConfig)
    catalog: CatalogConfig = Field(default_factory=CatalogConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    def to_dict(self) -> dict:
        return self.model_dump()
