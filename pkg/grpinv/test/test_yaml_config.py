#!/usr/bin/env py.test -v

import pytest
from yaml import YAMLError

from common_fixtures import input_path
from grpinv.core.yaml_config import YamlConfig


class TestYamlConfig:
    @pytest.fixture
    def yc(self):
        return YamlConfig(input_path("test_all.yml"))

    @pytest.fixture
    def sample_config(self):
        default_limits = {
            "element-cap": 1000000,
            "exact-gap-cap": 10080,
            "table-class-cap": 120,
        }
        return {
            "version": "1",
            "limits": {
                "default": default_limits,
                "small": {"element-cap": 5000, "orientation-samples": 4},
                "default-copy": default_limits,
            },
            "catalog": {"default": {"extra-files": ["inputs/extra.grp"]}},
            "core": {"setting": "ABCdef123"},
        }

    def test_no_filename_given(self):
        with pytest.raises(ValueError):
            yc = YamlConfig()

    def test_filename_wrong_type(self):
        with pytest.raises(ValueError):
            yc = YamlConfig(15)

    def test_load_config_non_existent_file(self):
        with pytest.raises(IOError):
            yc = YamlConfig("i_dont_exist.yml")

    def test_load_config_non_yaml_file(self):
        with pytest.raises((YAMLError, KeyError)):
            yc = YamlConfig(input_path("extra.grp"))

    def test_load_config_corrupt_yaml_file(self):
        with pytest.raises(YAMLError):
            yc = YamlConfig(input_path("corrupt_yaml.yml"))

    def test_load_config_no_version(self):
        with pytest.raises(KeyError):
            yc = YamlConfig(input_path("no_version.yml"))

    def test_load_config_wrong_version(self):
        with pytest.raises(ValueError):
            yc = YamlConfig(input_path("bad_version.yml"))

    def test_load_proper_config(self, sample_config):
        yc = YamlConfig(input_path("test_all.yml"))
        assert isinstance(yc, YamlConfig)
        assert yc.config == sample_config

    def test_get_no_parameter(self, yc):
        with pytest.raises(ValueError):
            yc.get()

    def test_get_non_string(self, yc):
        with pytest.raises(ValueError):
            yc.get(15)

    def test_get_non_existent_key(self, yc):
        with pytest.raises(KeyError):
            yc.get_service("not_exist")

    def test_get_value(self, yc, sample_config):
        assert yc.get(YamlConfig.VERSION) == sample_config[YamlConfig.VERSION]

    def test_get_object(self, yc, sample_config):
        assert yc.get(YamlConfig.LIMITS) == sample_config[YamlConfig.LIMITS]

    def test_get_service_no_parameters(self, yc):
        with pytest.raises(ValueError):
            yc.get_service()

    def test_get_service_non_string(self, yc):
        with pytest.raises(ValueError):
            yc.get_service(4)

    def test_get_service_non_existent(self, yc):
        with pytest.raises(KeyError):
            yc.get_service("bad-service")

    def test_get_service_no_section(self, yc, sample_config):
        assert (
            yc.get_service(YamlConfig.LIMITS)
            == sample_config[YamlConfig.LIMITS]["default"]
        )

    def test_get_service_section_non_string(self, yc):
        with pytest.raises(ValueError):
            yc.get_service(YamlConfig.LIMITS, 4)

    def test_get_service_section_non_existent(self, yc):
        with pytest.raises(KeyError):
            yc.get_service(YamlConfig.LIMITS, "bad-section")

    def test_get_section_value(self, yc, sample_config):
        assert yc.get_service("core", "setting") == sample_config["core"]["setting"]

    def test_get_section_object(self, yc, sample_config):
        assert (
            yc.get_service(YamlConfig.LIMITS, "small")
            == sample_config[YamlConfig.LIMITS]["small"]
        )

    def test_defaults_fill_missing_keys(self):
        yc = YamlConfig(
            input_path("test_all.yml"),
            defaults={YamlConfig.LIMITS: {"element-cap": 1, "random-seed": 7}},
        )
        small = yc.get_service(YamlConfig.LIMITS, "small")
        assert small["element-cap"] == 5000
        assert small["random-seed"] == 7

    def test_defaults_stand_in_for_missing_service(self):
        yc = YamlConfig(input_path("test_all.yml"), defaults={"extra": {"a": 1}})
        assert yc.get_service("extra") == {"a": 1}

    def test_sections(self, yc):
        assert yc.sections(YamlConfig.LIMITS) == ["default", "default-copy", "small"]
        assert yc.sections("missing") == []
