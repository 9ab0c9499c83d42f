__all__ = ["YamlConfig"]

import copy
import logging

import yaml


class YamlConfig:
    """Versioned YAML settings file.

    Services are top-level mappings whose sections are selected by name;
    ``defaults`` (service -> dict) fill in every key a section leaves out.
    """

    SUPPORTED_VERSIONS = ["1"]

    VERSION = "version"
    DEFAULT = "default"
    LIMITS = "limits"
    CATALOG = "catalog"

    def __init__(self, config_filename=None, defaults=None):
        if not isinstance(config_filename, str):
            raise ValueError("Configuration filename must be a string.")
        self.logger = logging.getLogger(__name__)
        self.config_filename = config_filename
        self.defaults = defaults or {}
        self.config = self.__load_config()

    def get(self, key=None):
        try:
            if not isinstance(key, str):
                raise ValueError("Key must be a string.")
            return self.config[key]
        except ValueError as e:
            self.logger.exception(e)
            raise

    def get_service(self, service=None, section=None):
        try:
            if not isinstance(service, str):
                raise ValueError("Service must be a string.")
            if section is None:
                section = YamlConfig.DEFAULT
            elif not isinstance(section, str):
                raise ValueError("Section must be a string.")

            sections = self.config.get(service)
            if sections is None and service not in self.defaults:
                raise KeyError('Service "{}" not configured'.format(service))
            sections = sections or {}
            if section not in sections and (
                section != YamlConfig.DEFAULT or service not in self.defaults
            ):
                raise KeyError(
                    'Section "{}" not found in service {}'.format(section, service)
                )

            merged = copy.deepcopy(self.defaults.get(service, {}))
            value = sections.get(section, {})
            if not isinstance(value, dict):
                return value
            merged.update(value)
            return merged
        except KeyError as e:
            self.logger.exception(e)
            raise
        except ValueError as e:
            self.logger.exception(e)
            raise

    def sections(self, service):
        return sorted(self.config.get(service, {}).keys())

    def __load_config(self):
        try:
            self.logger.info(
                "Loading configuration from {!s}".format(self.config_filename)
            )
            with open(self.config_filename, "r") as stream:
                config = yaml.load(stream, Loader=yaml.FullLoader)

            if not isinstance(config, dict) or YamlConfig.VERSION not in config:
                raise KeyError(
                    'Required configuration field "version" missing. '
                    "Please check your configuration file."
                )
            if str(config[YamlConfig.VERSION]) not in YamlConfig.SUPPORTED_VERSIONS:
                raise ValueError(
                    "Configuration version {} not supported.\n  Please use "
                    "one of the following versions: {}.".format(
                        config[YamlConfig.VERSION], YamlConfig.SUPPORTED_VERSIONS
                    )
                )
            return config
        except (IOError, KeyError, ValueError, yaml.YAMLError) as e:
            self.logger.exception(e)
            raise
