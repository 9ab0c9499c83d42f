#!/usr/bin/env py.test -v

# built-in python libraries

# third-party libraries (install with pip)
import mock
import pytest

# local libraries
from common_fixtures import default_config, input_path
from grpinv.core import config as config_module
from grpinv.core.config import DEFAULT_LIMITS, Config, get_config, set_config


class TestConfig:
    def test_missing_file_uses_builtin_limits(self):
        config = Config(config_filename=input_path("no_such_config.yml"))
        assert config.source is None
        assert config.limits == DEFAULT_LIMITS
        assert config.extra_catalogs == []
        assert config.element_cap == 1000000
        assert config.exact_gap_cap == 10080
        assert config.random_seed == 1729

    def test_builtin_limits_not_shared(self):
        config = Config(config_filename=input_path("no_such_config.yml"), element_cap=5)
        assert config.element_cap == 5
        assert DEFAULT_LIMITS["element-cap"] == 1000000, "defaults were modified"

    def test_default_section(self):
        config = Config(config_filename=input_path("test_all.yml"))
        assert config.element_cap == 1000000
        assert config.table_class_cap == 120
        # not in the file, filled in from the defaults
        assert config.orientation_samples == DEFAULT_LIMITS["orientation-samples"]
        assert config.extra_catalogs == ["inputs/extra.grp"]

    def test_named_section(self):
        config = Config("small", input_path("test_all.yml"))
        assert config.active_section == "small"
        assert config.element_cap == 5000
        assert config.orientation_samples == 4
        assert config.heavy_gap_cap == DEFAULT_LIMITS["heavy-gap-cap"]

    def test_unknown_section(self):
        with pytest.raises(KeyError):
            Config("bad-section", input_path("test_all.yml"))

    def test_overrides(self):
        config = Config(
            config_filename=input_path("test_all.yml"),
            element_cap=99,
            random_seed=None,
        )
        assert config.element_cap == 99
        assert config.random_seed == DEFAULT_LIMITS["random-seed"]

    def test_tolerances_are_floats(self, default_config):
        assert isinstance(default_config.character_tol, float)
        assert default_config.integrality_tol == 1e-6

    def test_environment_variable(self):
        with mock.patch.dict(
            "os.environ", {config_module.CONFIG_ENV_VAR: input_path("test_all.yml")}
        ):
            config = Config("small")
        assert config.element_cap == 5000

    def test_set_and_get(self, default_config):
        assert get_config() is default_config
        other = Config(config_filename=input_path("no_such_config.yml"), element_cap=7)
        assert set_config(other) is other
        assert get_config().element_cap == 7

    def test_get_creates_on_first_use(self):
        set_config(None)
        with mock.patch.object(config_module, "DEFAULT_CONFIG_FILENAME", input_path("nope.yml")):
            with mock.patch.dict("os.environ", clear=True):
                config = get_config()
        assert config.limits == DEFAULT_LIMITS
        assert get_config() is config
        set_config(None)
