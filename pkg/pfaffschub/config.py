# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""Optional YAML configuration: budgets, verification defaults and cache location"""

import logging
import os
import os.path
from typing import Any, NamedTuple, Optional, Tuple, TypeVar, cast

import yaml
from packaging.version import Version
from yaml import Mark
from yaml.constructor import SafeConstructor
from yaml.nodes import MappingNode, Node, ScalarNode

from pfaffschub.errors import ConfigError
from pfaffschub.groebner import Budget

log = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = "pfaffschub.yaml"
CACHE_ENV = "PFAFFSCHUB_CACHE"
DEFAULT_CACHE_DIR = "~/.cache/pfaffschub"

T = TypeVar('T')  # pylint: disable=invalid-name

yaml_constructor = SafeConstructor()


def get_node(node: MappingNode, name: str) -> Optional[Node]:
    "Return node with given name from mapping"
    if not isinstance(node, MappingNode):
        raise ConfigError("Not a mapping node", node.start_mark)
    for key, value in node.value:
        if key.value == name:
            return value
    return None


def get_mapping_node(node: MappingNode, name: str) -> Optional[MappingNode]:
    "Return mapping node with given name from mapping"
    value = get_node(node, name)
    if value is None:
        return None
    if not isinstance(value, MappingNode):
        raise ConfigError(f"Expected mapping for '{name}'", value.start_mark)
    return value


def get_typed_value(mapping_node: MappingNode,
                    name: str,
                    expected_type: type,
                    default: Optional[T] = None) -> Tuple[Optional[T], Optional[Mark]]:
    "Return scalar with given name from mapping as value of the expected type"
    node = get_node(mapping_node, name)
    if node is None:
        return default, None
    if not isinstance(node, ScalarNode):
        raise ConfigError(f"Expected scalar value for '{name}'", node.start_mark)
    val = yaml_constructor.construct_object(node)
    # bool is an int subclass
    if not isinstance(val, expected_type) or (expected_type is int and isinstance(val, bool)):
        raise ConfigError(
            f"Expected value of type {expected_type.__name__} for " +
            f"'{name}', not {type(val).__name__}", node.start_mark)
    return cast(Optional[T], val), node.start_mark


def get_int_value(mapping_node: MappingNode, name: str, default: int,
                  minimum: int = 0) -> int:
    "Return an integer no smaller than minimum"
    value, mark = get_typed_value(mapping_node, name, int, default)
    if value < minimum:  # type: ignore
        raise ConfigError(f"'{name}' must be at least {minimum}", mark)
    return cast(int, value)


def get_boolean_value(mapping_node: MappingNode, name: str, default: bool) -> bool:
    "Return a boolean value"
    value, _ = get_typed_value(mapping_node, name, bool, default)
    return cast(bool, value)


def get_str_value(mapping_node: MappingNode,
                  name: str,
                  default: Optional[str] = None) -> Tuple[Optional[str], Optional[Mark]]:
    "Return a string value together with its position"
    return get_typed_value(mapping_node, name, str, default)


class VerifyOptions(NamedTuple):
    "Defaults for verification suites"
    cap: int = 6
    sample: int = 20
    seed: int = 2022
    exhaustive: bool = False


class CacheOptions(NamedTuple):
    "Persistent Gröbner cache settings"
    directory: str = DEFAULT_CACHE_DIR
    enabled: bool = True
    paranoid: bool = True


class PfaffschubConfiguration:
    "Holds settings read from the configuration file, or the defaults"

    # pylint: disable=too-few-public-methods

    def __init__(self, node: Optional[MappingNode] = None):
        self.desc: Optional[str] = None
        self.min_ver: Optional[Version] = None
        self.budget = Budget()
        self.verify = VerifyOptions()
        self.cache = CacheOptions()
        self.jobs = 1
        if node is not None:
            self._read(node)
        env_dir = os.environ.get(CACHE_ENV)
        if env_dir:
            self.cache = self.cache._replace(directory=env_dir)

    def _read(self, node: MappingNode):
        if not isinstance(node, MappingNode):
            raise ConfigError("Configuration must be a mapping", node.start_mark)
        self.desc, _ = get_str_value(node, "desc")
        min_ver, mark = get_str_value(node, "min_ver")
        if min_ver:
            try:
                self.min_ver = Version(min_ver)
            except ValueError as err:
                raise ConfigError(f"Invalid min_ver '{min_ver}'", mark) from err

        budget_node = get_mapping_node(node, "budget")
        if budget_node is not None:
            defaults = Budget()
            self.budget = Budget(
                pairs=get_int_value(budget_node, "pairs", defaults.pairs, 1),
                reductions=get_int_value(budget_node, "reductions", defaults.reductions, 1),
                hilbert_degree=get_int_value(budget_node, "hilbert_degree",
                                             defaults.hilbert_degree))

        verify_node = get_mapping_node(node, "verify")
        if verify_node is not None:
            defaults_v = VerifyOptions()
            self.verify = VerifyOptions(
                cap=get_int_value(verify_node, "cap", defaults_v.cap, 1),
                sample=get_int_value(verify_node, "sample", defaults_v.sample, 1),
                seed=get_int_value(verify_node, "seed", defaults_v.seed),
                exhaustive=get_boolean_value(verify_node, "exhaustive", defaults_v.exhaustive))

        cache_node = get_mapping_node(node, "cache")
        if cache_node is not None:
            directory, _ = get_str_value(cache_node, "dir", DEFAULT_CACHE_DIR)
            self.cache = CacheOptions(
                directory=cast(str, directory),
                enabled=get_boolean_value(cache_node, "enabled", True),
                paranoid=get_boolean_value(cache_node, "paranoid", True))

        self.jobs = get_int_value(node, "jobs", 1, 1)

    def check_version(self, version: Version):
        "Refuse configurations written for a newer release"
        if self.min_ver and version < self.min_ver:
            raise ConfigError(f"Config file requires version {self.min_ver}, " +
                              f"while you are running pfaffschub {version}")

    @property
    def cache_dir(self) -> str:
        "Cache directory with the user directory expanded"
        return os.path.expanduser(self.cache.directory)


def load_config(path: Optional[str] = None) -> PfaffschubConfiguration:
    """
    Read the given file, or pfaffschub.yaml from the working directory when
    present. Missing default file means built-in defaults.
    """
    if path is None:
        if not os.path.exists(DEFAULT_CONFIG_FILE):
            return PfaffschubConfiguration()
        path = DEFAULT_CONFIG_FILE
    try:
        with open(path, encoding="utf-8") as stream:
            node: Any = yaml.compose(stream)
    except OSError as err:
        raise ConfigError(f"Can't read config file {path}: {err.strerror}") from err
    except yaml.YAMLError as err:
        raise ConfigError(f"Malformed config file {path}: {err}") from err
    log.debug("Loaded configuration from %s", path)
    if node is None:
        return PfaffschubConfiguration()
    return PfaffschubConfiguration(node)
