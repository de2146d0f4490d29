"""Test fixtures."""
import os
from datetime import timedelta

import pytest
from hypothesis import Verbosity, settings

from isq_units.config import CATALOG_ENV, CONFIG_ENV, config_manager

# Profiles for hypothesis; select with HYPOTHESIS_PROFILE
settings.register_profile("local", max_examples=50)
settings.register_profile("ci", max_examples=300, deadline=timedelta(milliseconds=1000))
settings.register_profile("dev", max_examples=20)
settings.register_profile("debug", max_examples=20, verbosity=Verbosity.verbose)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "local"))


@pytest.fixture
def isolated_config(tmp_path, monkeypatch):
    """Run in an empty directory with no unitc environment overrides."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.delenv(CATALOG_ENV, raising=False)
    config_manager.use(str(tmp_path / "unitc.yaml"))
    return tmp_path
