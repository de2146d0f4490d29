import pytest
import yaml
from pydantic import ValidationError

from isq_units.config import CATALOG_ENV, ConfigManager, UnitcConfig, config_manager, load_config_dict, save_config_dict


def test_defaults():
    config = UnitcConfig()
    assert config.output.mode == "human"
    assert config.output.significant_digits == 10
    assert config.catalog.registry_path is None
    assert config.logging.level == "WARNING"


def test_validation():
    with pytest.raises(ValidationError):
        UnitcConfig(output={"significant_digits": 18})
    with pytest.raises(ValidationError):
        UnitcConfig(output={"mode": "xml"})
    with pytest.raises(ValidationError):
        UnitcConfig(logging={"level": "LOUD"})
    assert UnitcConfig(logging={"level": "debug"}).logging.level == "DEBUG"


def test_missing_file_gives_defaults(tmp_path):
    assert load_config_dict(str(tmp_path / "absent.yaml")) == {}


def test_invalid_yaml(tmp_path):
    path = tmp_path / "unitc.yaml"
    path.write_text("output: [unclosed", encoding="utf-8")
    with pytest.raises(ValueError):
        load_config_dict(str(path))
    path.write_text("- just\n- a list\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_config_dict(str(path))


def test_save_and_reload(isolated_config):
    config_manager.update({"output": {"significant_digits": 4}})
    assert config_manager.config.output.mode == "human"
    config_manager.save()
    saved = yaml.safe_load((isolated_config / "unitc.yaml").read_text(encoding="utf-8"))
    assert saved["output"]["significant_digits"] == 4
    config_manager.reload()
    assert config_manager.config.output.significant_digits == 4
    assert config_manager.get("output")["significant_digits"] == 4


def test_singleton():
    assert ConfigManager() is config_manager


def test_catalog_env_overrides_file(isolated_config, monkeypatch):
    path = isolated_config / "unitc.yaml"
    save_config_dict({"catalog": {"registry_path": "from_file.jsonl"}}, str(path))
    config_manager.use(str(path))
    assert config_manager.config.catalog.registry_path == "from_file.jsonl"
    monkeypatch.setenv(CATALOG_ENV, "from_env.jsonl")
    config_manager.reload()
    assert config_manager.config.catalog.registry_path == "from_env.jsonl"
