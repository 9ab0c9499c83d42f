__all__ = ["Config", "get_config", "set_config"]

import logging
import os

from grpinv.core.yaml_config import YamlConfig

DEFAULT_CONFIG_FILENAME = "/etc/grpinv/grpinv.yml"
CONFIG_ENV_VAR = "GRPINV_CONFIG"

ELEMENT_CAP = "element-cap"
EXACT_GAP_CAP = "exact-gap-cap"
HEAVY_GAP_CAP = "heavy-gap-cap"
TABLE_CLASS_CAP = "table-class-cap"
CHARACTER_TOL = "character-tol"
INTEGRALITY_TOL = "integrality-tol"
RANDOM_SEED = "random-seed"
ORIENTATION_SAMPLES = "orientation-samples"
QUOTIENT_DEGREE_CAP = "quotient-degree-cap"
EXTRA_CATALOGS = "extra-files"

DEFAULT_LIMITS = {
    ELEMENT_CAP: 1000000,
    EXACT_GAP_CAP: 10080,
    HEAVY_GAP_CAP: 30000,
    TABLE_CLASS_CAP: 120,
    CHARACTER_TOL: 1e-8,
    INTEGRALITY_TOL: 1e-6,
    RANDOM_SEED: 1729,
    ORIENTATION_SAMPLES: 50,
    QUOTIENT_DEGREE_CAP: 5040,
}
DEFAULT_CATALOG = {EXTRA_CATALOGS: []}

_active = None


class Config(object):
    """Computation limits and tolerances.

    Falls back to the built-in defaults when no configuration file exists;
    the file is never created.
    """

    def __init__(self, config_section=None, config_filename=None, **overrides):
        self.__logger = logging.getLogger(__name__)
        if config_filename is None:
            config_filename = os.environ.get(CONFIG_ENV_VAR, DEFAULT_CONFIG_FILENAME)
        self.config_filename = config_filename
        self.active_section = config_section or YamlConfig.DEFAULT
        defaults = {YamlConfig.LIMITS: DEFAULT_LIMITS, YamlConfig.CATALOG: DEFAULT_CATALOG}
        if os.path.exists(config_filename):
            self.source = YamlConfig(config_filename, defaults=defaults)
            limits = self.source.get_service(YamlConfig.LIMITS, self.active_section)
            catalog = self.source.get_service(YamlConfig.CATALOG)
        else:
            self.__logger.debug(
                "No configuration at %s, using built-in limits", config_filename
            )
            self.source = None
            limits = dict(DEFAULT_LIMITS)
            catalog = dict(DEFAULT_CATALOG)
        for key, value in overrides.items():
            if value is not None:
                limits[key.replace("_", "-")] = value
        self.limits = limits
        self.extra_catalogs = list(catalog.get(EXTRA_CATALOGS) or [])

    @property
    def element_cap(self):
        return int(self.limits[ELEMENT_CAP])

    @property
    def exact_gap_cap(self):
        return int(self.limits[EXACT_GAP_CAP])

    @property
    def heavy_gap_cap(self):
        return int(self.limits[HEAVY_GAP_CAP])

    @property
    def table_class_cap(self):
        return int(self.limits[TABLE_CLASS_CAP])

    @property
    def character_tol(self):
        return float(self.limits[CHARACTER_TOL])

    @property
    def integrality_tol(self):
        return float(self.limits[INTEGRALITY_TOL])

    @property
    def random_seed(self):
        return int(self.limits[RANDOM_SEED])

    @property
    def orientation_samples(self):
        return int(self.limits[ORIENTATION_SAMPLES])

    @property
    def quotient_degree_cap(self):
        return int(self.limits[QUOTIENT_DEGREE_CAP])

    def __repr__(self):
        return "<Config {} section={} {}>".format(
            self.config_filename, self.active_section, self.limits
        )


def get_config():
    """the process-wide Config, created on first use"""
    global _active
    if _active is None:
        _active = Config()
    return _active


def set_config(config):
    global _active
    _active = config
    return config
